#include "vsl/semilinear.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace vsl {

namespace {

std::strong_ordering cmp_vec(const IntVec& a, const IntVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) {
      return std::strong_ordering::less;
    }
    if (b[i] < a[i]) {
      return std::strong_ordering::greater;
    }
  }
  return a.size() <=> b.size();
}

bool vec_less(const IntVec& a, const IntVec& b) { return cmp_vec(a, b) < 0; }

}  // namespace

LinearSet::LinearSet(IntVec base, std::vector<IntVec> periods) : base_(std::move(base)) {
  if (!is_nonneg(base_)) {
    throw VslError(ErrorKind::NegativeCounter, "linear set base must be nonnegative");
  }
  for (IntVec& p : periods) {
    if (p.size() != base_.size()) {
      throw VslError(ErrorKind::DimensionMismatch, "period dimension differs from base");
    }
    if (!is_nonneg(p)) {
      throw VslError(ErrorKind::NegativeCounter, "linear set period must be nonnegative");
    }
    if (!is_zero(p)) {
      periods_.push_back(std::move(p));
    }
  }
}

Int LinearSet::size() const {
  Int s = norm(base_);
  for (const IntVec& p : periods_) {
    s += norm(p);
  }
  return s;
}

LinearSet LinearSet::canonical() const {
  std::vector<IntVec> ps = periods_;
  std::sort(ps.begin(), ps.end(), vec_less);
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return LinearSet(base_, std::move(ps));
}

std::strong_ordering operator<=>(const LinearSet& a, const LinearSet& b) {
  if (auto c = cmp_vec(a.base_, b.base_); c != 0) {
    return c;
  }
  const std::size_t n = std::min(a.periods_.size(), b.periods_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = cmp_vec(a.periods_[i], b.periods_[i]); c != 0) {
      return c;
    }
  }
  return a.periods_.size() <=> b.periods_.size();
}

SemilinearConfigSet::SemilinearConfigSet(std::size_t dim, std::vector<Component> components)
    : dim_(dim) {
  for (Component& c : components) {
    add(c.state, std::move(c.set));
  }
}

void SemilinearConfigSet::add(StateId state, LinearSet set) {
  if (set.dim() != dim_) {
    throw VslError(ErrorKind::DimensionMismatch, "component dimension differs from the set");
  }
  components_.push_back(Component{state, std::move(set)});
}

Int SemilinearConfigSet::size() const {
  Int s = 0;
  for (const Component& c : components_) {
    s += c.set.size();
  }
  return s;
}

SemilinearConfigSet SemilinearConfigSet::canonical() const {
  std::vector<Component> cs;
  for (const Component& c : components_) {
    cs.push_back(Component{c.state, c.set.canonical()});
  }
  std::sort(cs.begin(), cs.end(), [](const Component& a, const Component& b) {
    if (a.state != b.state) {
      return index(a.state) < index(b.state);
    }
    return a.set < b.set;
  });
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return SemilinearConfigSet(dim_, std::move(cs));
}

namespace {

struct MemberSearch {
  const std::vector<IntVec>& periods;
  // zero_after[i][j]: every period with index >= i is zero at coordinate j
  std::vector<std::vector<char>> zero_after;
  std::vector<Int> coeffs;

  explicit MemberSearch(const std::vector<IntVec>& ps, std::size_t dim) : periods(ps) {
    zero_after.assign(ps.size() + 1, std::vector<char>(dim, 1));
    for (std::size_t i = ps.size(); i-- > 0;) {
      for (std::size_t j = 0; j < dim; ++j) {
        zero_after[i][j] = zero_after[i + 1][j] && ps[i][j] == 0;
      }
    }
    coeffs.assign(ps.size(), Int(0));
  }

  bool run(std::size_t i, IntVec& rest) {
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (zero_after[i][j] && rest[j] != 0) {
        return false;
      }
    }
    if (i == periods.size()) {
      return true;
    }
    const IntVec& p = periods[i];
    Int cap = -1;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] > 0) {
        Int c = rest[j] / p[j];
        if (cap < 0 || c < cap) {
          cap = c;
        }
      }
    }
    for (Int n = 0; n <= cap; ++n) {
      coeffs[i] = n;
      if (run(i + 1, rest)) {
        return true;
      }
      for (std::size_t j = 0; j < p.size(); ++j) {
        rest[j] -= p[j];
      }
    }
    // restore rest
    for (std::size_t j = 0; j < p.size(); ++j) {
      rest[j] += (cap + 1) * p[j];
    }
    coeffs[i] = 0;
    return false;
  }
};

}  // namespace

std::optional<std::vector<Int>> member(const IntVec& v, const LinearSet& set) {
  if (v.size() != set.dim()) {
    throw VslError(ErrorKind::DimensionMismatch, "membership query of wrong dimension");
  }
  IntVec rest = v - set.base();
  if (!is_nonneg(rest)) {
    return std::nullopt;
  }
  MemberSearch search(set.periods(), set.dim());
  if (search.run(0, rest)) {
    return search.coeffs;
  }
  return std::nullopt;
}

bool member_config(const Configuration& c, const SemilinearConfigSet& set) {
  for (const Component& comp : set.components()) {
    if (comp.state == c.state && member(c.vec, comp.set)) {
      return true;
    }
  }
  return false;
}

namespace {

bool in_monoid(const IntVec& v, const std::vector<IntVec>& periods) {
  IntVec rest = v;
  MemberSearch search(periods, v.size());
  return search.run(0, rest);
}

}  // namespace

bool subsumes(const LinearSet& outer, const LinearSet& inner) {
  if (!member(inner.base(), outer)) {
    return false;
  }
  for (const IntVec& p : inner.periods()) {
    if (!in_monoid(p, outer.periods())) {
      return false;
    }
  }
  return true;
}

namespace {

void collect_points(const std::vector<IntVec>& ps, std::size_t i, IntVec& cur, const Int& bound,
                    std::set<IntVec, decltype(&vec_less)>& out) {
  if (i == ps.size()) {
    out.insert(cur);
    return;
  }
  collect_points(ps, i + 1, cur, bound, out);
  std::size_t added = 0;
  for (;;) {
    bool fits = true;
    for (std::size_t j = 0; j < cur.size(); ++j) {
      if (cur[j] + ps[i][j] > bound) {
        fits = false;
        break;
      }
    }
    if (!fits) {
      break;
    }
    for (std::size_t j = 0; j < cur.size(); ++j) {
      cur[j] += ps[i][j];
    }
    ++added;
    collect_points(ps, i + 1, cur, bound, out);
  }
  for (std::size_t j = 0; j < cur.size(); ++j) {
    cur[j] -= Int(added) * ps[i][j];
  }
}

}  // namespace

std::vector<IntVec> points_within(const LinearSet& set, const Int& bound) {
  if (norm(set.base()) > bound) {
    return {};
  }
  std::set<IntVec, decltype(&vec_less)> out(vec_less);
  IntVec cur = set.base();
  collect_points(set.periods(), 0, cur, bound, out);
  return {out.begin(), out.end()};
}

std::vector<PeriodRef> proportional_periods(const SemilinearConfigSet& set, const IntVec& delta) {
  if (is_zero(delta)) {
    throw VslError(ErrorKind::PrerequisiteViolated, "direction must be nonzero");
  }
  if (delta.size() != set.dim()) {
    throw VslError(ErrorKind::DimensionMismatch, "direction of wrong dimension");
  }
  std::size_t pivot = 0;
  while (delta[pivot] == 0) {
    ++pivot;
  }
  std::vector<PeriodRef> out;
  const auto& comps = set.components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& ps = comps[c].set.periods();
    for (std::size_t k = 0; k < ps.size(); ++k) {
      const IntVec& p = ps[k];
      bool ok = p[pivot] > 0;
      for (std::size_t j = 0; ok && j < p.size(); ++j) {
        ok = p[j] * delta[pivot] == delta[j] * p[pivot];
      }
      if (ok) {
        out.push_back(PeriodRef{c, k, Rational(p[pivot], delta[pivot])});
      }
    }
  }
  return out;
}

std::vector<PeriodRef> ratio_satisfying_periods(const SemilinearConfigSet& set,
                                                const LinearFunction& lin1,
                                                const LinearFunction& lin2, const Rational& r) {
  if (r < 0) {
    throw VslError(ErrorKind::PrerequisiteViolated, "ratio must be nonnegative");
  }
  if (lin1.dim() != set.dim() || lin2.dim() != set.dim()) {
    throw VslError(ErrorKind::DimensionMismatch, "linear function of wrong dimension");
  }
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  std::vector<PeriodRef> out;
  const auto& comps = set.components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& ps = comps[c].set.periods();
    for (std::size_t k = 0; k < ps.size(); ++k) {
      const IntVec& p = ps[k];
      bool touches = false;
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] != 0 && (lin1.in_support(j) || lin2.in_support(j))) {
          touches = true;
        }
      }
      if (touches && lin1(p) * den == num * lin2(p)) {
        out.push_back(PeriodRef{c, k, Rational(0)});
      }
    }
  }
  return out;
}

std::optional<InvarianceVerdict> refute_invariance(const Vass& vass, const SemilinearConfigSet& set,
                                                   const Int& box) {
  Configuration next;
  for (const Component& comp : set.components()) {
    for (const IntVec& pt : points_within(comp.set, box)) {
      const Configuration c{comp.state, pt};
      for (TransitionId t : vass.outgoing(comp.state)) {
        if (!try_fire(vass, c, t, next)) {
          continue;
        }
        if (!member_config(next, set)) {
          InvarianceVerdict v;
          v.kind = InvarianceVerdict::Kind::Refuted;
          v.from = c;
          v.transition = t;
          v.to = next;
          v.note = "successor leaves the set";
          return v;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

struct Piece {
  IntVec base;
  std::vector<IntVec> periods;
};

// Image {v + delta : v in set, v + delta >= 0} as a finite union of linear sets.
std::optional<std::vector<Piece>> image_pieces(const LinearSet& set, const IntVec& delta,
                                               std::size_t max_pieces) {
  Int threshold = 0;
  for (const Int& x : delta) {
    if (-x > threshold) {
      threshold = -x;
    }
  }
  std::vector<const IntVec*> active;
  std::vector<IntVec> free_periods;
  for (const IntVec& p : set.periods()) {
    bool hits = false;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (delta[j] < 0 && p[j] > 0) {
        hits = true;
      }
    }
    if (hits) {
      active.push_back(&p);
    } else {
      free_periods.push_back(p);
    }
  }
  // every active coefficient is either one of 0..T-1 or T + N
  const auto t = static_cast<std::size_t>(threshold);
  double count = 1;
  for (std::size_t i = 0; i < active.size(); ++i) {
    count *= static_cast<double>(t + 1);
  }
  if (count > static_cast<double>(max_pieces)) {
    return std::nullopt;
  }
  std::vector<Piece> out;
  std::vector<std::size_t> choice(active.size(), 0);
  for (;;) {
    Piece piece{set.base() + delta, free_periods};
    for (std::size_t i = 0; i < active.size(); ++i) {
      const Int times(choice[i]);
      for (std::size_t j = 0; j < piece.base.size(); ++j) {
        piece.base[j] += times * (*active[i])[j];
      }
      if (choice[i] == t) {
        piece.periods.push_back(*active[i]);
      }
    }
    if (is_nonneg(piece.base)) {
      out.push_back(std::move(piece));
    }
    std::size_t k = 0;
    while (k < choice.size() && choice[k] == t) {
      choice[k] = 0;
      ++k;
    }
    if (k == choice.size()) {
      break;
    }
    ++choice[k];
  }
  return out;
}

bool covered(const Piece& piece, const std::vector<const LinearSet*>& targets, std::size_t depth) {
  for (const LinearSet* l : targets) {
    if (!member(piece.base, *l)) {
      continue;
    }
    bool all = true;
    for (const IntVec& p : piece.periods) {
      if (!in_monoid(p, l->periods())) {
        all = false;
        break;
      }
    }
    if (all) {
      return true;
    }
  }
  if (depth == 0 || piece.periods.empty()) {
    return false;
  }
  // split on one period r: (c, R - r) u (c + r, R)
  for (std::size_t k = 0; k < piece.periods.size(); ++k) {
    Piece without{piece.base, {}};
    for (std::size_t m = 0; m < piece.periods.size(); ++m) {
      if (m != k) {
        without.periods.push_back(piece.periods[m]);
      }
    }
    if (!covered(without, targets, depth - 1)) {
      continue;
    }
    Piece shifted{piece.base + piece.periods[k], piece.periods};
    if (covered(shifted, targets, depth - 1)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool verify_invariance(const Vass& vass, const SemilinearConfigSet& set,
                       const InvarianceOptions& options) {
  for (const Component& comp : set.components()) {
    for (TransitionId t : vass.outgoing(comp.state)) {
      const Transition& tr = vass.transition(t);
      std::vector<const LinearSet*> targets;
      for (const Component& other : set.components()) {
        if (other.state == tr.dst) {
          targets.push_back(&other.set);
        }
      }
      auto pieces = image_pieces(comp.set, tr.effect, options.max_pieces);
      if (!pieces) {
        return false;
      }
      for (const Piece& piece : *pieces) {
        if (!covered(piece, targets, options.split_depth)) {
          return false;
        }
      }
    }
  }
  return true;
}

InvarianceVerdict check_invariance(const Vass& vass, const SemilinearConfigSet& set,
                                   const InvarianceOptions& options) {
  if (set.dim() != vass.dim()) {
    throw VslError(ErrorKind::DimensionMismatch, "set and VASS differ in dimension");
  }
  if (auto refuted = refute_invariance(vass, set, options.box)) {
    return *refuted;
  }
  InvarianceVerdict v;
  if (verify_invariance(vass, set, options)) {
    v.kind = InvarianceVerdict::Kind::Verified;
    v.note = "every transition image is covered";
  } else {
    v.kind = InvarianceVerdict::Kind::Unknown;
    v.note = "no counterexample up to norm " + to_string(options.box) +
             " and the covering check was inconclusive";
  }
  return v;
}

namespace {

void vectors_up_to(std::size_t dim, std::size_t max_norm, std::vector<IntVec>& out) {
  IntVec cur(dim, Int(0));
  for (;;) {
    out.push_back(cur);
    std::size_t k = 0;
    while (k < dim && cur[k] == max_norm) {
      cur[k] = 0;
      ++k;
    }
    if (k == dim) {
      break;
    }
    cur[k] += 1;
  }
}

void choose_periods(const std::vector<IntVec>& cands, const std::vector<std::size_t>& norms,
                    std::size_t from, std::size_t left, std::vector<IntVec>& cur,
                    const IntVec& base, std::vector<LinearSet>& out) {
  out.emplace_back(base, cur);
  for (std::size_t i = from; i < cands.size(); ++i) {
    if (norms[i] > left) {
      continue;
    }
    cur.push_back(cands[i]);
    choose_periods(cands, norms, i + 1, left - norms[i], cur, base, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<LinearSet> linear_sets_up_to(std::size_t dim, std::size_t budget) {
  std::vector<IntVec> all;
  vectors_up_to(dim, budget, all);
  std::sort(all.begin(), all.end(), vec_less);
  std::vector<IntVec> periods;
  std::vector<std::size_t> pnorms;
  for (const IntVec& v : all) {
    if (!is_zero(v)) {
      periods.push_back(v);
      pnorms.push_back(static_cast<std::size_t>(norm(v)));
    }
  }
  std::vector<LinearSet> out;
  std::vector<IntVec> cur;
  for (const IntVec& b : all) {
    const auto nb = static_cast<std::size_t>(norm(b));
    choose_periods(periods, pnorms, 0, budget - nb, cur, b, out);
  }
  std::stable_sort(out.begin(), out.end(), [](const LinearSet& a, const LinearSet& b) {
    const Int sa = a.size();
    const Int sb = b.size();
    if (sa != sb) {
      return sa < sb;
    }
    return a < b;
  });
  return out;
}

SemilinearEnumerator::SemilinearEnumerator(std::vector<StateId> states, std::size_t dim,
                                           std::size_t budget)
    : states_(std::move(states)), dim_(dim), budget_(budget) {
  std::sort(states_.begin(), states_.end(),
            [](StateId a, StateId b) { return index(a) < index(b); });
  states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
  const auto sets = linear_sets_up_to(dim, budget);
  for (const LinearSet& l : sets) {
    for (StateId s : states_) {
      pool_.push_back(Component{s, l});
      pool_size_.push_back(static_cast<std::size_t>(l.size()));
    }
  }
}

void SemilinearEnumerator::fill_tier() {
  pending_.clear();
  pos_ = 0;
  std::vector<std::size_t> pick;
  // components chosen in increasing pool order with total size exactly tier_
  auto rec = [&](auto&& self, std::size_t from, std::size_t left) -> void {
    if (left == 0) {
      // zero-size components may still be appended
      std::vector<Component> cs;
      for (std::size_t i : pick) {
        cs.push_back(pool_[i]);
      }
      pending_.emplace_back(dim_, std::move(cs));
    }
    for (std::size_t i = from; i < pool_.size(); ++i) {
      if (pool_size_[i] > left) {
        break;
      }
      pick.push_back(i);
      self(self, i + 1, left - pool_size_[i]);
      pick.pop_back();
    }
  };
  rec(rec, 0, tier_);
  tier_filled_ = true;
}

std::optional<SemilinearConfigSet> SemilinearEnumerator::next() {
  for (;;) {
    if (!tier_filled_) {
      if (tier_ > budget_) {
        return std::nullopt;
      }
      fill_tier();
    }
    if (pos_ < pending_.size()) {
      return pending_[pos_++];
    }
    ++tier_;
    tier_filled_ = false;
  }
}

}  // namespace vsl
