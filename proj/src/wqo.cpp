#include "vsl/wqo.hpp"

#include <stdexcept>

namespace vsl {

bool config_leq(const Configuration& a, const Configuration& b) {
  return a.state == b.state && leq(a.vec, b.vec);
}

namespace {

bool step_leq(const Run& small, std::size_t j, const Run& large, std::size_t i) {
  return small.transition(j) == large.transition(i) && config_leq(small.config(j), large.config(i)) &&
         config_leq(small.config(j + 1), large.config(i + 1));
}

}  // namespace

std::optional<RunEmbedding> find_embedding(const Run& small, const Run& large, Anchor anchor) {
  const std::size_t k = small.length();
  const std::size_t n = large.length();
  RunEmbedding emb;
  emb.anchor = anchor;
  if (k == 0) {
    const bool ok = anchor == Anchor::TargetAnchored ? config_leq(small.target(), large.target())
                                                     : config_leq(small.source(), large.source());
    if (ok) {
      return emb;
    }
    return std::nullopt;
  }
  if (k > n) {
    return std::nullopt;
  }
  if (anchor == Anchor::TargetAnchored) {
    if (!step_leq(small, k - 1, large, n - 1)) {
      return std::nullopt;
    }
    std::size_t i = 0;
    for (std::size_t j = 0; j + 1 < k; ++j) {
      while (i < n - 1 && !step_leq(small, j, large, i)) {
        ++i;
      }
      if (i >= n - 1) {
        return std::nullopt;
      }
      emb.indices.push_back(i++);
    }
    emb.indices.push_back(n - 1);
  } else {
    if (!step_leq(small, 0, large, 0)) {
      return std::nullopt;
    }
    emb.indices.push_back(0);
    std::size_t i = 1;
    for (std::size_t j = 1; j < k; ++j) {
      while (i < n && !step_leq(small, j, large, i)) {
        ++i;
      }
      if (i >= n) {
        return std::nullopt;
      }
      emb.indices.push_back(i++);
    }
  }
  return emb;
}

bool is_embedding(const Run& small, const Run& large, const RunEmbedding& emb) {
  const std::size_t k = small.length();
  if (emb.indices.size() != k) {
    return false;
  }
  if (k == 0) {
    return emb.anchor == Anchor::TargetAnchored ? config_leq(small.target(), large.target())
                                                : config_leq(small.source(), large.source());
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (emb.indices[j] >= large.length() || (j > 0 && emb.indices[j] <= emb.indices[j - 1])) {
      return false;
    }
    if (!step_leq(small, j, large, emb.indices[j])) {
      return false;
    }
  }
  if (emb.anchor == Anchor::TargetAnchored) {
    return emb.indices.back() == large.length() - 1;
  }
  return emb.indices.front() == 0;
}

std::optional<std::pair<std::size_t, std::size_t>> find_domination(const std::vector<Run>& runs,
                                                                   Anchor anchor) {
  for (std::size_t i = 1; i < runs.size(); ++i) {
    const bool same = anchor == Anchor::TargetAnchored ? runs[i].source() == runs[0].source()
                                                       : runs[i].target() == runs[0].target();
    if (!same) {
      throw VslError(ErrorKind::PrerequisiteViolated,
                     anchor == Anchor::TargetAnchored ? "runs have different sources"
                                                      : "runs have different targets");
    }
  }
  for (std::size_t j = 1; j < runs.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (find_embedding(runs[i], runs[j], anchor)) {
        return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

namespace {

// Transitions of r strictly between matched positions: blocks[0] precedes the
// first match, blocks[j] follows match j-1.
std::vector<std::vector<TransitionId>> blocks(const Run& r, const RunEmbedding& e) {
  std::vector<std::vector<TransitionId>> out(e.indices.size() + 1);
  std::size_t b = 0;
  for (std::size_t i = 0; i < r.length(); ++i) {
    if (b < e.indices.size() && e.indices[b] == i) {
      ++b;
      continue;
    }
    out[b].push_back(r.transition(i));
  }
  return out;
}

void require_gain(const Run& base, const Run& r) {
  if (!(r.source() == base.source())) {
    throw VslError(ErrorKind::PrerequisiteViolated, "runs have different sources");
  }
  if (!config_leq(base.target(), r.target())) {
    throw VslError(ErrorKind::PrerequisiteViolated, "target is not dominated");
  }
}

}  // namespace

Amalgam amalgamate(const Vass& vass, const Run& base, const Run& r1, const Run& r2,
                   const RunEmbedding& e1, const RunEmbedding& e2) {
  if (e1.anchor != Anchor::TargetAnchored || e2.anchor != Anchor::TargetAnchored) {
    throw VslError(ErrorKind::PrerequisiteViolated, "amalgamation needs target-anchored embeddings");
  }
  require_gain(base, r1);
  require_gain(base, r2);
  if (!is_embedding(base, r1, e1) || !is_embedding(base, r2, e2)) {
    throw VslError(ErrorKind::PrerequisiteViolated, "not an embedding");
  }
  const auto b1 = blocks(r1, e1);
  const auto b2 = blocks(r2, e2);
  std::vector<TransitionId> path;
  RunEmbedding emb;
  emb.anchor = Anchor::TargetAnchored;
  for (std::size_t j = 0; j <= base.length(); ++j) {
    path.insert(path.end(), b1[j].begin(), b1[j].end());
    path.insert(path.end(), b2[j].begin(), b2[j].end());
    if (j < base.length()) {
      emb.indices.push_back(path.size());
      path.push_back(base.transition(j));
    }
  }
  Run out = Run::replay(vass, base.source(), path);
  const IntVec want = r1.target().vec + r2.target().vec - base.target().vec;
  if (out.target().vec != want || out.target().state != base.target().state) {
    throw std::logic_error("amalgamated run misses its target");
  }
  if (validate_run(vass, out) || !is_embedding(base, out, emb)) {
    throw std::logic_error("amalgamated run failed validation");
  }
  return Amalgam{std::move(out), std::move(emb)};
}

Run pump_run(const Vass& vass, const Run& base, const Run& larger, const RunEmbedding& emb,
             std::size_t n) {
  require_gain(base, larger);
  if (emb.anchor != Anchor::TargetAnchored || !is_embedding(base, larger, emb)) {
    throw VslError(ErrorKind::PrerequisiteViolated, "not a target-anchored embedding");
  }
  if (n == 0) {
    return base;
  }
  Amalgam cur{larger, emb};
  for (std::size_t m = 1; m < n; ++m) {
    cur = amalgamate(vass, base, cur.run, larger, cur.embedding, emb);
  }
  return cur.run;
}

}  // namespace vsl
