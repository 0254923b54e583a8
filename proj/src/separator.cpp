#include "vsl/separator.hpp"

#include <algorithm>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace vsl {

const char* to_string(SeparatorCheck::Kind kind) noexcept {
  switch (kind) {
    case SeparatorCheck::Kind::Verified: return "Verified";
    case SeparatorCheck::Kind::Refuted: return "Refuted";
    case SeparatorCheck::Kind::Unknown: return "UnknownWithinBounds";
  }
  return "Unknown";
}

const char* to_string(DualVerdict::Kind kind) noexcept {
  switch (kind) {
    case DualVerdict::Kind::RunFound: return "RunFound";
    case DualVerdict::Kind::SeparatorFound: return "SeparatorFound";
    case DualVerdict::Kind::Undecided: return "Undecided";
  }
  return "Unknown";
}

SeparatorCheck is_separator(const Vass& vass, const Configuration& s, const Configuration& t,
                            const SemilinearConfigSet& set, const InvarianceOptions& options) {
  vass.check(s);
  vass.check(t);
  SeparatorCheck out;
  if (!member_config(s, set)) {
    out.kind = SeparatorCheck::Kind::Refuted;
    out.failed_axiom = 1;
    out.reason = "source is not in the set";
    return out;
  }
  if (member_config(t, set)) {
    out.kind = SeparatorCheck::Kind::Refuted;
    out.failed_axiom = 2;
    out.reason = "target is in the set";
    return out;
  }
  InvarianceVerdict inv = check_invariance(vass, set, options);
  switch (inv.kind) {
    case InvarianceVerdict::Kind::Verified:
      out.kind = SeparatorCheck::Kind::Verified;
      break;
    case InvarianceVerdict::Kind::Refuted:
      out.kind = SeparatorCheck::Kind::Refuted;
      out.failed_axiom = 3;
      out.reason = "not invariant";
      break;
    case InvarianceVerdict::Kind::Unknown:
      out.kind = SeparatorCheck::Kind::Unknown;
      break;
  }
  out.invariance = std::move(inv);
  return out;
}

SeparatorSearch::SeparatorSearch(const Vass& vass, Configuration s, Configuration t,
                                 std::size_t max_size, SeparatorOptions options)
    : vass_(&vass), s_(std::move(s)), t_(std::move(t)), max_size_(max_size),
      options_(std::move(options)) {
  vass.check(s_);
  vass.check(t_);
  SearchBounds box;
  box.norm_bound = options_.sample_box;
  box.prune_dead = false;
  must_in_ = post_bounded(vass, s_, box).configs;
  must_out_ = pre_bounded(vass, t_, box).configs;
  target_sampled_ = std::binary_search(must_in_.begin(), must_in_.end(), t_);

  std::unordered_map<Configuration, std::size_t, ConfigurationHash> in_index;
  for (std::size_t i = 0; i < must_in_.size(); ++i) {
    in_index.emplace(must_in_[i], i);
  }
  std::unordered_map<Configuration, char, ConfigurationHash> out_set;
  for (const Configuration& c : must_out_) {
    out_set.emplace(c, 1);
  }
  const std::size_t words = (must_in_.size() + 63) / 64;
  coverers_.assign(must_in_.size(), {});
  const auto sets = linear_sets_up_to(vass.dim(), max_size);
  for (const LinearSet& l : sets) {
    const auto size = static_cast<std::size_t>(l.size());
    const auto pts = points_within(l, options_.sample_box);
    for (std::size_t q = 0; q < vass.num_states(); ++q) {
      const auto state = static_cast<StateId>(q);
      Candidate cand{Component{state, l}, size, std::vector<std::uint64_t>(words, 0)};
      bool clean = true;
      Configuration probe{state, {}};
      for (const IntVec& p : pts) {
        probe.vec = p;
        if (out_set.contains(probe)) {
          clean = false;
          break;
        }
        if (auto it = in_index.find(probe); it != in_index.end()) {
          cand.cover[it->second / 64] |= std::uint64_t{1} << (it->second % 64);
        }
      }
      if (clean && member(t_.vec, l) && t_.state == state) {
        clean = false;
      }
      if (!clean) {
        continue;
      }
      pool_.push_back(std::move(cand));
    }
  }
  // pool order: size, then state, then set
  std::stable_sort(pool_.begin(), pool_.end(), [](const Candidate& a, const Candidate& b) {
    if (a.size != b.size) {
      return a.size < b.size;
    }
    if (a.comp.state != b.comp.state) {
      return index(a.comp.state) < index(b.comp.state);
    }
    return a.comp.set < b.comp.set;
  });
  for (std::size_t c = 0; c < pool_.size(); ++c) {
    for (std::size_t i = 0; i < must_in_.size(); ++i) {
      if (pool_[c].cover[i / 64] >> (i % 64) & 1) {
        coverers_[i].push_back(c);
      }
    }
  }
}

SeparatorSearch::Tier SeparatorSearch::search(std::size_t size, bool stop_at_first,
                                              std::optional<Clock::time_point> deadline,
                                              const std::atomic<bool>* cancel) const {
  Tier tier;
  if (size > max_size_) {
    throw VslError(ErrorKind::PrerequisiteViolated, "size beyond the prepared pool");
  }
  if (target_sampled_) {
    return tier;
  }
  const std::size_t words = (must_in_.size() + 63) / 64;
  std::vector<std::uint64_t> covered(words, 0);
  std::vector<char> forbidden(pool_.size(), 0);
  std::vector<char> chosen(pool_.size(), 0);
  std::vector<std::size_t> picks;
  bool stop = false;
  std::size_t ticks = 0;

  auto interrupted = [&]() {
    if ((++ticks & 0x3ff) != 0) {
      return false;
    }
    if ((cancel && cancel->load()) || (deadline && Clock::now() > *deadline)) {
      tier.interrupted = true;
      return true;
    }
    return false;
  };

  auto leaf = [&]() {
    ++tier.candidates;
    std::vector<Component> comps;
    for (std::size_t i : picks) {
      comps.push_back(pool_[i].comp);
    }
    for (std::size_t a = 0; a < comps.size(); ++a) {
      for (std::size_t b = 0; b < comps.size(); ++b) {
        if (a != b && comps[a].state == comps[b].state && subsumes(comps[a].set, comps[b].set)) {
          return;
        }
      }
    }
    SemilinearConfigSet set(vass_->dim(), std::move(comps));
    if (!member_config(s_, set) || member_config(t_, set)) {
      return;
    }
    if (refute_invariance(*vass_, set, options_.invariance.box)) {
      return;
    }
    if (verify_invariance(*vass_, set, options_.invariance)) {
      tier.separators.push_back(set.canonical());
      if (stop_at_first) {
        stop = true;
      }
    } else {
      tier.undecided.push_back(set.canonical());
    }
  };

  // extras: any allowed components, increasing pool index, exact remaining size
  auto extras = [&](auto&& self, std::size_t from, std::size_t left) -> void {
    if (stop || interrupted()) {
      stop = true;
      return;
    }
    if (left == 0) {
      leaf();
    }
    for (std::size_t c = from; c < pool_.size() && !stop; ++c) {
      if (pool_[c].size > left) {
        break;
      }
      if (forbidden[c] || chosen[c]) {
        continue;
      }
      chosen[c] = 1;
      picks.push_back(c);
      self(self, c + 1, left - pool_[c].size);
      picks.pop_back();
      chosen[c] = 0;
    }
  };

  auto cover = [&](auto&& self, std::size_t left) -> void {
    if (stop || interrupted()) {
      stop = true;
      return;
    }
    std::size_t first = must_in_.size();
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t all = ~std::uint64_t{0};
      if (w + 1 == words && must_in_.size() % 64 != 0) {
        all = (std::uint64_t{1} << (must_in_.size() % 64)) - 1;
      }
      const std::uint64_t missing = ~covered[w] & all;
      if (missing != 0) {
        first = w * 64 + static_cast<std::size_t>(__builtin_ctzll(missing));
        break;
      }
    }
    if (first == must_in_.size()) {
      extras(extras, 0, left);
      return;
    }
    std::vector<std::size_t> newly_forbidden;
    for (std::size_t c : coverers_[first]) {
      if (stop) {
        break;
      }
      if (forbidden[c] || chosen[c]) {
        continue;
      }
      if (pool_[c].size <= left) {
        const auto saved = covered;
        for (std::size_t w = 0; w < words; ++w) {
          covered[w] |= pool_[c].cover[w];
        }
        chosen[c] = 1;
        picks.push_back(c);
        self(self, left - pool_[c].size);
        picks.pop_back();
        chosen[c] = 0;
        covered = saved;
      }
      // later branches use a larger-index coverer for this point
      forbidden[c] = 1;
      newly_forbidden.push_back(c);
    }
    for (std::size_t c : newly_forbidden) {
      forbidden[c] = 0;
    }
  };

  cover(cover, size);
  std::sort(tier.separators.begin(), tier.separators.end(),
            [](const SemilinearConfigSet& a, const SemilinearConfigSet& b) {
              const auto& x = a.components();
              const auto& y = b.components();
              return std::lexicographical_compare(
                  x.begin(), x.end(), y.begin(), y.end(), [](const Component& p, const Component& q) {
                    if (p.state != q.state) {
                      return index(p.state) < index(q.state);
                    }
                    return p.set < q.set;
                  });
            });
  return tier;
}

std::vector<SemilinearConfigSet> minimal_separators(const Vass& vass, const Configuration& s,
                                                    const Configuration& t, std::size_t size_budget,
                                                    const SeparatorOptions& options) {
  SeparatorSearch search(vass, s, t, size_budget, options);
  if (search.target_sampled()) {
    throw VslError(ErrorKind::PrerequisiteViolated, "the target is reachable from the source");
  }
  for (std::size_t k = 0; k <= size_budget; ++k) {
    auto tier = search.search(k);
    if (!tier.separators.empty()) {
      return tier.separators;
    }
  }
  throw VslError(ErrorKind::BudgetExhausted,
                 "no separator of size <= " + std::to_string(size_budget));
}

namespace {

std::optional<Clock::time_point> deadline_for(const DualSchedule& sched) {
  if (!sched.tier_budget) {
    return std::nullopt;
  }
  return Clock::now() + *sched.tier_budget;
}

std::string run_note(const LevelSearch& runs) {
  if (!runs.done()) {
    return "run search: no run up to length " + std::to_string(runs.level());
  }
  const auto& v = *runs.verdict();
  return std::string("run search: ") + to_string(v.kind) + " after " + std::to_string(runs.level()) +
         " levels, " + std::to_string(v.stats.explored) + " configurations";
}

}  // namespace

DualVerdict decide_dual(const Vass& vass, const Configuration& s, const Configuration& t,
                        const DualSchedule& schedule) {
  SearchBounds bounds;
  bounds.norm_bound = schedule.run_norm_bound;
  bounds.length_bound = schedule.max_run_length;
  LevelSearch runs(vass, s, t, bounds);
  SeparatorSearch seps(vass, s, t, schedule.max_separator_size, schedule.separator);
  DualVerdict out;

  auto run_found = [&]() {
    return runs.done() && runs.verdict()->kind == ReachVerdict::Kind::Reachable;
  };
  auto note_undecided = [&](std::size_t k, const SeparatorSearch::Tier& tier) {
    out.diagnostics.push_back("separator size " + std::to_string(k) + ": " +
                              std::to_string(tier.candidates) + " candidates, " +
                              std::to_string(tier.undecided.size()) + " with unknown invariance" +
                              (tier.interrupted ? ", interrupted" : ""));
  };

  if (!schedule.parallel) {
    const std::size_t tiers = std::max(schedule.max_run_length, schedule.max_separator_size);
    for (std::size_t k = 0; k <= tiers; ++k) {
      // run-length tier k (tier 0 is settled on construction)
      if (k > 0 && !runs.done()) {
        runs.advance();
      }
      if (!runs.done() || k == 0) {
        out.run_levels = runs.level();
      }
      if (run_found()) {
        out.kind = DualVerdict::Kind::RunFound;
        out.run = runs.verdict()->witness;
        out.run_levels = runs.level();
        out.diagnostics.push_back(run_note(runs));
        return out;
      }
      if (k <= schedule.max_separator_size) {
        auto tier = seps.search(k, true, deadline_for(schedule));
        if (!tier.interrupted) {
          out.separator_sizes = k + 1;
        }
        if (!tier.separators.empty()) {
          out.kind = DualVerdict::Kind::SeparatorFound;
          out.separator = tier.separators.front();
          out.diagnostics.push_back(run_note(runs));
          return out;
        }
        if (!tier.undecided.empty() || tier.interrupted) {
          note_undecided(k, tier);
        }
      }
    }
    out.diagnostics.push_back(run_note(runs));
    return out;
  }

  std::atomic<bool> cancel{false};
  std::mutex mu;
  std::optional<SemilinearConfigSet> found_sep;
  {
    std::jthread run_worker([&]() {
      while (!cancel.load() && !runs.done()) {
        runs.advance();
      }
      if (run_found()) {
        cancel.store(true);
      }
    });
    std::jthread sep_worker([&]() {
      for (std::size_t k = 0; k <= schedule.max_separator_size && !cancel.load(); ++k) {
        auto tier = seps.search(k, true, deadline_for(schedule), &cancel);
        std::lock_guard lock(mu);
        if (!tier.interrupted) {
          out.separator_sizes = k + 1;
        }
        if (!tier.separators.empty()) {
          found_sep = tier.separators.front();
          cancel.store(true);
          return;
        }
        if (!tier.undecided.empty() || tier.interrupted) {
          note_undecided(k, tier);
        }
      }
    });
  }
  out.run_levels = runs.level();
  out.diagnostics.push_back(run_note(runs));
  if (run_found()) {
    out.kind = DualVerdict::Kind::RunFound;
    out.run = runs.verdict()->witness;
  } else if (found_sep) {
    out.kind = DualVerdict::Kind::SeparatorFound;
    out.separator = std::move(found_sep);
  }
  return out;
}

}  // namespace vsl
