#include "vsl/explore.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace vsl {

bool BoundedSet::contains(const Configuration& c) const {
  return std::binary_search(configs.begin(), configs.end(), c);
}

const char* to_string(ReachVerdict::Kind kind) noexcept {
  switch (kind) {
    case ReachVerdict::Kind::Reachable: return "Reachable";
    case ReachVerdict::Kind::NotReachableWithinBounds: return "NotReachableWithinBounds";
    case ReachVerdict::Kind::Exhausted: return "Exhausted";
  }
  return "Unknown";
}

namespace {

BoundedSet explore(const Vass& vass, const Configuration& c, const SearchBounds& bounds,
                   bool backward) {
  vass.check(c);
  BoundedSet out;
  if (norm(c.vec) > bounds.norm_bound) {
    out.pruned = true;
    return out;
  }
  std::unordered_set<Configuration, ConfigurationHash> seen{c};
  std::vector<Configuration> frontier{c};
  Configuration next;
  for (std::size_t depth = 0; !frontier.empty(); ++depth) {
    std::vector<Configuration> layer;
    for (const Configuration& x : frontier) {
      const auto& ts = backward ? vass.incoming(x.state) : vass.outgoing(x.state);
      for (TransitionId t : ts) {
        const bool ok = backward ? try_fire_backward(vass, x, t, next) : try_fire(vass, x, t, next);
        if (!ok || seen.contains(next)) {
          continue;
        }
        if (norm(next.vec) > bounds.norm_bound || depth >= bounds.length_bound ||
            (bounds.node_budget && seen.size() >= *bounds.node_budget)) {
          out.pruned = true;
          continue;
        }
        seen.insert(next);
        layer.push_back(next);
      }
    }
    frontier = std::move(layer);
  }
  out.configs.assign(seen.begin(), seen.end());
  std::sort(out.configs.begin(), out.configs.end());
  return out;
}

}  // namespace

BoundedSet post_bounded(const Vass& vass, const Configuration& c, const SearchBounds& bounds) {
  return explore(vass, c, bounds, false);
}

BoundedSet pre_bounded(const Vass& vass, const Configuration& c, const SearchBounds& bounds) {
  return explore(vass, c, bounds, true);
}

LevelSearch::LevelSearch(const Vass& vass, Configuration s, Configuration t, SearchBounds bounds)
    : vass_(&vass), s_(std::move(s)), t_(std::move(t)), bounds_(std::move(bounds)) {
  vass.check(s_);
  vass.check(t_);
  const auto [it, inserted] = seen_.emplace(s_, 0);
  nodes_.push_back(Node{0, 0, &it->first});
  stats_.explored = 1;
  if (s_ == t_) {
    finish(ReachVerdict::Kind::Reachable, 0);
    return;
  }
  if (norm(s_.vec) > bounds_.norm_bound) {
    stats_.pruned = true;
    finish(ReachVerdict::Kind::NotReachableWithinBounds, std::nullopt);
    return;
  }
  if (bounds_.prune_dead) {
    relax_ = std::make_unique<StateEquation>(vass, t_);
    if (relax_->dead(s_)) {
      stats_.dead = 1;
      finish(ReachVerdict::Kind::Exhausted, std::nullopt);
      return;
    }
  }
  frontier_.push_back(0);
}

Run LevelSearch::build(std::size_t node) const {
  std::vector<TransitionId> path;
  for (std::size_t k = node; k != 0; k = nodes_[k].parent) {
    path.push_back(nodes_[k].trans);
  }
  std::reverse(path.begin(), path.end());
  return Run::replay(*vass_, s_, path);
}

void LevelSearch::finish(ReachVerdict::Kind kind, std::optional<std::size_t> node) {
  ReachVerdict v;
  v.kind = kind;
  if (node) {
    v.witness = build(*node);
  }
  v.stats = stats_;
  verdict_ = std::move(v);
  frontier_.clear();
}

bool LevelSearch::advance() {
  if (verdict_) {
    return true;
  }
  if (level_ >= bounds_.length_bound) {
    stats_.pruned = true;
    finish(ReachVerdict::Kind::NotReachableWithinBounds, std::nullopt);
    return true;
  }
  std::unordered_set<Configuration, ConfigurationHash> rejected;
  std::vector<std::size_t> next_frontier;
  Configuration next;
  for (std::size_t k : frontier_) {
    const Configuration& cur = *nodes_[k].config;
    for (TransitionId t : vass_->outgoing(cur.state)) {
      if (!try_fire(*vass_, cur, t, next) || seen_.contains(next)) {
        continue;
      }
      if (norm(next.vec) > bounds_.norm_bound) {
        if (rejected.contains(next)) {
          continue;
        }
        rejected.insert(next);
        if (relax_ && relax_->dead(next)) {
          ++stats_.dead;
        } else {
          stats_.pruned = true;
        }
        continue;
      }
      if (bounds_.node_budget && nodes_.size() >= *bounds_.node_budget) {
        stats_.pruned = true;
        finish(ReachVerdict::Kind::NotReachableWithinBounds, std::nullopt);
        return true;
      }
      const auto [it, inserted] = seen_.emplace(next, nodes_.size());
      nodes_.push_back(Node{k, t, &it->first});
      ++stats_.explored;
      if (next == t_) {
        ++level_;
        finish(ReachVerdict::Kind::Reachable, nodes_.size() - 1);
        return true;
      }
      next_frontier.push_back(nodes_.size() - 1);
    }
  }
  ++level_;
  frontier_ = std::move(next_frontier);
  if (frontier_.empty()) {
    finish(stats_.pruned ? ReachVerdict::Kind::NotReachableWithinBounds
                         : ReachVerdict::Kind::Exhausted,
           std::nullopt);
    return true;
  }
  return false;
}

ReachVerdict shortest_run(const Vass& vass, const Configuration& s, const Configuration& t,
                          const SearchBounds& bounds) {
  LevelSearch search(vass, s, t, bounds);
  while (!search.advance()) {
  }
  return *search.verdict();
}

RunEnumerator::RunEnumerator(const Vass& vass, Configuration s, SearchBounds bounds)
    : vass_(&vass), bounds_(std::move(bounds)) {
  vass.check(s);
  if (norm(s.vec) <= bounds_.norm_bound) {
    level_.emplace_back(std::move(s));
  }
}

std::optional<Run> RunEnumerator::next() {
  if (pos_ < level_.size()) {
    return level_[pos_++];
  }
  if (level_.empty() || length_ >= bounds_.length_bound) {
    return std::nullopt;
  }
  std::vector<Run> deeper;
  Configuration nxt;
  for (const Run& r : level_) {
    for (TransitionId t : vass_->outgoing(r.target().state)) {
      if (!try_fire(*vass_, r.target(), t, nxt) || norm(nxt.vec) > bounds_.norm_bound) {
        continue;
      }
      Run longer = r;
      longer.push(*vass_, t);
      deeper.push_back(std::move(longer));
    }
  }
  ++length_;
  level_ = std::move(deeper);
  pos_ = 0;
  return next();
}

std::vector<Run> enumerate_runs(const Vass& vass, const Configuration& s,
                                const SearchBounds& bounds) {
  RunEnumerator e(vass, s, bounds);
  std::vector<Run> out;
  while (auto r = e.next()) {
    out.push_back(std::move(*r));
  }
  return out;
}

}  // namespace vsl
