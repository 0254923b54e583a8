#include "vsl/checker.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace vsl {

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Verified: return "Verified";
    case CheckStatus::VerifiedOnSamples: return "VerifiedOnSamples";
    case CheckStatus::Refuted: return "Refuted";
    case CheckStatus::Unknown: return "UnknownWithinBounds";
    case CheckStatus::EvidenceOnly: return "EvidenceOnly";
  }
  return "Unknown";
}

const ConditionReport& CheckReport::condition(int k) const {
  for (const ConditionReport& c : conditions) {
    if (c.condition == k) {
      return c;
    }
  }
  throw VslError(ErrorKind::PrerequisiteViolated, "no condition " + std::to_string(k));
}

bool CheckReport::all_hold() const {
  return std::none_of(conditions.begin(), conditions.end(), [](const ConditionReport& c) {
    return c.status == CheckStatus::Refuted || c.status == CheckStatus::Unknown;
  });
}

namespace {

std::string show(const Vass& vass, const Configuration& c) {
  return vass.state_name(c.state) + "(" + to_string(c.vec, ",") + ")";
}

// Sampled reachability: every target must be reached.
ConditionReport sampled_reach(const Vass& vass, int k,
                              const std::vector<std::pair<Configuration, Configuration>>& pairs,
                              const SearchBounds& bounds) {
  ConditionReport rep;
  rep.condition = k;
  rep.status = CheckStatus::VerifiedOnSamples;
  for (const auto& [from, to] : pairs) {
    rep.samples.push_back(show(vass, from) + " -> " + show(vass, to));
    const ReachVerdict v = shortest_run(vass, from, to, bounds);
    rep.pruned = rep.pruned || v.stats.pruned;
    if (v.kind == ReachVerdict::Kind::Reachable) {
      continue;
    }
    if (v.kind == ReachVerdict::Kind::Exhausted) {
      rep.status = CheckStatus::Refuted;
      rep.witness_config = to;
      rep.detail = "no run " + show(vass, from) + " -> " + show(vass, to);
      return rep;
    }
    rep.status = CheckStatus::Unknown;
    rep.detail = "no run found within bounds for " + show(vass, from) + " -> " + show(vass, to);
  }
  if (rep.status == CheckStatus::VerifiedOnSamples) {
    rep.detail = "every sampled run found";
  }
  return rep;
}

}  // namespace

CheckReport check_thm_simple(const Vass& vass, const Configuration& s, const Configuration& t,
                             StateId q, const LineSpec& line, const SearchBounds& bounds,
                             const SimpleSamples& samples) {
  const std::size_t d = vass.dim();
  if (line.a.size() != d || line.delta.size() != d) {
    throw VslError(ErrorKind::DimensionMismatch, "line vectors of wrong dimension");
  }
  if (d < 2) {
    throw VslError(ErrorKind::DimensionMismatch, "at least two counters are needed");
  }
  vass.check(s);
  vass.check(t);
  vass.check(Configuration{q, line.a});
  CheckReport report;
  report.norm_bound = bounds.norm_bound;

  ConditionReport c1;
  c1.condition = 1;
  c1.status = CheckStatus::Verified;
  c1.detail = "delta is supported on the first two counters";
  if (is_zero(line.delta) || !is_nonneg(line.delta)) {
    c1.status = CheckStatus::Refuted;
    c1.detail = "delta must be nonzero and nonnegative";
  }
  for (std::size_t j = 2; j < d; ++j) {
    if (line.delta[j] != 0) {
      c1.status = CheckStatus::Refuted;
      c1.detail = "delta is nonzero at counter " + std::to_string(j + 1);
      break;
    }
  }
  report.conditions.push_back(c1);

  ConditionReport c2;
  c2.condition = 2;
  const ReachVerdict v = shortest_run(vass, s, t, bounds);
  c2.pruned = v.stats.pruned;
  switch (v.kind) {
    case ReachVerdict::Kind::Reachable:
      c2.status = CheckStatus::Refuted;
      c2.witness_run = v.witness;
      c2.detail = "a run from s to t exists";
      break;
    case ReachVerdict::Kind::Exhausted:
      c2.status = CheckStatus::Verified;
      c2.detail = "search exhausted without pruning (" + std::to_string(v.stats.explored) +
                  " configurations, " + std::to_string(v.stats.dead) + " discarded as dead)";
      break;
    case ReachVerdict::Kind::NotReachableWithinBounds:
      c2.status = CheckStatus::Unknown;
      c2.detail = "no run within bounds, but the search was pruned";
      break;
  }
  report.conditions.push_back(c2);

  std::vector<std::pair<Configuration, Configuration>> p3;
  for (std::size_t n : samples.n) {
    p3.emplace_back(s, Configuration{q, line.a + Int(n) * line.delta});
  }
  report.conditions.push_back(sampled_reach(vass, 3, p3, bounds));

  std::vector<std::pair<Configuration, Configuration>> p4;
  for (std::size_t n : samples.n) {
    for (std::size_t m : samples.m) {
      if (m == 0) {
        throw VslError(ErrorKind::PrerequisiteViolated, "offsets must be positive");
      }
      IntVec v4 = line.a + Int(n) * line.delta;
      v4[1] += m;
      p4.emplace_back(Configuration{q, v4}, t);
    }
  }
  report.conditions.push_back(sampled_reach(vass, 4, p4, bounds));
  return report;
}

namespace {

bool graph_path_avoiding(const Vass& vass, StateId from, StateId to, StateId avoid) {
  if (from == avoid || to == avoid) {
    return false;
  }
  std::vector<char> seen(vass.num_states(), 0);
  std::deque<StateId> queue{from};
  seen[index(from)] = 1;
  while (!queue.empty()) {
    StateId x = queue.front();
    queue.pop_front();
    if (x == to) {
      return true;
    }
    for (TransitionId t : vass.outgoing(x)) {
      StateId y = vass.transition(t).dst;
      if (y != avoid && !seen[index(y)]) {
        seen[index(y)] = 1;
        queue.push_back(y);
      }
    }
  }
  return false;
}

}  // namespace

CheckReport check_thm_advanced(const Vass& vass, const Configuration& s, const Configuration& t,
                               StateId q, const LinearFunction& lin1, const LinearFunction& lin2,
                               const Rational& r, const SearchBounds& bounds,
                               const AdvancedOptions& options) {
  const std::size_t d = vass.dim();
  if (lin1.dim() != d || lin2.dim() != d) {
    throw VslError(ErrorKind::DimensionMismatch, "linear function of wrong dimension");
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (lin1.in_support(i) && lin2.in_support(i)) {
      throw VslError(ErrorKind::OverlappingSupports,
                     "coordinate " + std::to_string(i) + " is in both supports");
    }
  }
  if (r < 0) {
    throw VslError(ErrorKind::PrerequisiteViolated, "ratio must be nonnegative");
  }
  vass.check(s);
  vass.check(t);
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  CheckReport report;
  report.norm_bound = bounds.norm_bound;
  SearchBounds plain = bounds;
  plain.prune_dead = false;

  // (1) lin1(v) >= r lin2(v) on post(s) at q
  ConditionReport c1;
  c1.condition = 1;
  const BoundedSet post = post_bounded(vass, s, plain);
  c1.pruned = post.pruned;
  c1.status = post.pruned ? CheckStatus::VerifiedOnSamples : CheckStatus::Verified;
  std::size_t seen1 = 0;
  for (const Configuration& c : post.configs) {
    if (c.state != q) {
      continue;
    }
    ++seen1;
    if (lin1(c.vec) * den < num * lin2(c.vec)) {
      c1.status = CheckStatus::Refuted;
      c1.witness_config = c;
      c1.detail = "violated at " + show(vass, c);
      break;
    }
  }
  if (c1.status != CheckStatus::Refuted) {
    c1.detail = "holds at " + std::to_string(seen1) + " reachable configurations";
  }
  report.conditions.push_back(c1);

  // (2) lin1(v - u) <= r lin2(v - u) whenever q(v) -> t + u
  ConditionReport c2;
  c2.condition = 2;
  std::vector<IntVec> offsets = options.offsets;
  if (offsets.empty()) {
    offsets.push_back(zero_vec(d));
    for (std::size_t i : lin2.support()) {
      offsets.push_back(unit_vec(d, i));
    }
  }
  c2.status = CheckStatus::VerifiedOnSamples;
  std::size_t seen2 = 0;
  for (const IntVec& u : offsets) {
    if (u.size() != d || !is_nonneg(u)) {
      throw VslError(ErrorKind::DimensionMismatch, "offset of wrong shape");
    }
    c2.samples.push_back("u = (" + to_string(u, ",") + ")");
    const BoundedSet pre = pre_bounded(vass, Configuration{t.state, t.vec + u}, plain);
    c2.pruned = c2.pruned || pre.pruned;
    for (const Configuration& c : pre.configs) {
      if (c.state != q) {
        continue;
      }
      ++seen2;
      const IntVec diff = c.vec - u;
      if (lin1(diff) * den > num * lin2(diff)) {
        c2.status = CheckStatus::Refuted;
        c2.witness_config = c;
        c2.detail = "violated at " + show(vass, c) + " with u = (" + to_string(u, ",") + ")";
        break;
      }
    }
    if (c2.status == CheckStatus::Refuted) {
      break;
    }
  }
  if (c2.status != CheckStatus::Refuted) {
    c2.detail = "holds at " + std::to_string(seen2) + " sampled configurations";
  }
  report.conditions.push_back(c2);

  // (3) every run from state(s) to state(t) visits q
  ConditionReport c3;
  c3.condition = 3;
  if (!graph_path_avoiding(vass, s.state, t.state, q)) {
    c3.status = CheckStatus::Verified;
    c3.detail = "every path of the state graph passes through q";
  } else {
    c3.status = CheckStatus::VerifiedOnSamples;
    SearchBounds rb = plain;
    rb.length_bound = options.run_length;
    RunEnumerator runs(vass, s, rb);
    std::size_t sampled = 0;
    while (auto run = runs.next()) {
      if (run->target().state != t.state) {
        continue;
      }
      ++sampled;
      const auto& cs = run->configs();
      const bool visits = std::any_of(cs.begin(), cs.end(),
                                      [&](const Configuration& c) { return c.state == q; });
      if (!visits) {
        c3.status = CheckStatus::Refuted;
        c3.witness_run = *run;
        c3.detail = "a run avoids q";
        break;
      }
    }
    if (c3.status != CheckStatus::Refuted) {
      c3.detail = "the state graph has a path avoiding q; " + std::to_string(sampled) +
                  " sampled runs all visit q";
    }
  }
  report.conditions.push_back(c3);

  // (4) growth of {proj_I(v) : s -> q(v) -> t} across two bound levels
  ConditionReport c4;
  c4.condition = 4;
  c4.status = CheckStatus::EvidenceOnly;
  std::vector<std::size_t> counts;
  for (const Int& b : {bounds.norm_bound, Int(2) * bounds.norm_bound}) {
    SearchBounds lb = plain;
    lb.norm_bound = b;
    const BoundedSet fwd = post_bounded(vass, s, lb);
    const BoundedSet bwd = pre_bounded(vass, t, lb);
    std::set<IntVec> proj;
    for (const Configuration& c : fwd.configs) {
      if (c.state == q && bwd.contains(c)) {
        IntVec p;
        for (std::size_t i = 0; i < d; ++i) {
          if (lin1.in_support(i) || lin2.in_support(i)) {
            p.push_back(c.vec[i]);
          }
        }
        proj.insert(std::move(p));
      }
    }
    counts.push_back(proj.size());
    c4.samples.push_back("bound " + to_string(b) + ": " + std::to_string(proj.size()) +
                         " projections");
  }
  c4.detail = counts[1] > counts[0] ? "distinct projections grow with the bound"
                                    : "no growth observed";
  report.conditions.push_back(c4);
  return report;
}

ConclusionReport verify_conclusion_simple(const std::vector<SemilinearConfigSet>& separators,
                                          const IntVec& delta) {
  ConclusionReport rep;
  for (std::size_t i = 0; i < separators.size(); ++i) {
    ++rep.checked;
    if (proportional_periods(separators[i], delta).empty()) {
      rep.lacking.push_back(i);
    }
  }
  return rep;
}

ConclusionReport verify_conclusion_advanced(const std::vector<SemilinearConfigSet>& separators,
                                            const LinearFunction& lin1, const LinearFunction& lin2,
                                            const Rational& r) {
  ConclusionReport rep;
  for (std::size_t i = 0; i < separators.size(); ++i) {
    ++rep.checked;
    if (ratio_satisfying_periods(separators[i], lin1, lin2, r).empty()) {
      rep.lacking.push_back(i);
    }
  }
  return rep;
}

}  // namespace vsl
