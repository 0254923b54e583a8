#include "vsl/numtheory.hpp"

#include "vsl/error.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace vsl {

LinearFunction::LinearFunction(IntVec coeffs) : coeffs_(std::move(coeffs)) {
  Int g = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] < 0) {
      throw VslError(ErrorKind::PrerequisiteViolated, "negative coefficient in linear function");
    }
    if (coeffs_[i] != 0) {
      support_.push_back(i);
      g = gcd(g, coeffs_[i]);
      if (coeffs_[i] > max_) {
        max_ = coeffs_[i];
      }
    }
  }
  if (support_.empty()) {
    throw VslError(ErrorKind::PrerequisiteViolated, "linear function with all coefficients zero");
  }
  reduced_ = (g == 1);
}

Int LinearFunction::operator()(const IntVec& x) const {
  if (x.size() != coeffs_.size()) {
    throw VslError(ErrorKind::DimensionMismatch, "linear function applied to wrong dimension");
  }
  Int s = 0;
  for (std::size_t i : support_) {
    s += coeffs_[i] * x[i];
  }
  return s;
}

Int gcd_list(std::span<const Int> values) {
  Int g = 0;
  for (const Int& v : values) {
    g = gcd(g, abs(v));
  }
  return g;
}

std::pair<LinearFunction, Int> reduce(const LinearFunction& lin) {
  const Int g = gcd_list(lin.coeffs());
  IntVec c = lin.coeffs();
  for (Int& x : c) {
    x /= g;
  }
  return {LinearFunction(std::move(c)), g};
}

namespace {

// x, y with a x + b y = gcd(a, b), a, b >= 0.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  g = r0;
  x = s0;
  y = t0;
}

std::optional<std::vector<Int>> bezout_small(std::span<const Int> a, const Int& target) {
  if (target > 50'000'000) {
    throw VslError(ErrorKind::BudgetExhausted, "target too large for exact search below threshold");
  }
  const auto s = static_cast<std::size_t>(target);
  // coin[v]: index of the last coefficient used to reach v, or -1.
  std::vector<int> coin(s + 1, -1);
  std::vector<char> ok(s + 1, 0);
  ok[0] = 1;
  for (std::size_t v = 1; v <= s; ++v) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > v) {
        continue;
      }
      const auto ai = static_cast<std::size_t>(a[i]);
      if (ok[v - ai]) {
        ok[v] = 1;
        coin[v] = static_cast<int>(i);
        break;
      }
    }
  }
  if (!ok[s]) {
    return std::nullopt;
  }
  std::vector<Int> b(a.size(), Int(0));
  for (std::size_t v = s; v > 0;) {
    const auto i = static_cast<std::size_t>(coin[v]);
    b[i] += 1;
    v -= static_cast<std::size_t>(a[i]);
  }
  return b;
}

}  // namespace

std::optional<std::vector<Int>> bezout_nonneg(std::span<const Int> a, const Int& target) {
  if (a.empty()) {
    throw VslError(ErrorKind::PrerequisiteViolated, "empty coefficient list");
  }
  if (target < 0) {
    throw VslError(ErrorKind::PrerequisiteViolated, "negative target");
  }
  Int m = 0;
  for (const Int& x : a) {
    if (x <= 0) {
      throw VslError(ErrorKind::PrerequisiteViolated, "coefficients must be positive");
    }
    m = std::max(m, x);
  }
  const std::size_t k = a.size();
  if (target == 0) {
    return std::vector<Int>(k, Int(0));
  }
  const Int g = gcd_list(a);
  if (target % g != 0) {
    return std::nullopt;
  }
  const Int threshold = Int(k) * (m * m - m);
  if (target < threshold) {
    return bezout_small(a, target);
  }

  // integer solution of sum a_i c_i = g, folded left to right
  std::vector<Int> c(k, Int(0));
  c[0] = 1;
  Int running = a[0];
  for (std::size_t i = 1; i < k; ++i) {
    Int gg, x, y;
    ext_gcd(running, a[i], gg, x, y);
    for (std::size_t j = 0; j < i; ++j) {
      c[j] *= x;
    }
    c[i] = y;
    running = gg;
  }
  const Int scale = target / g;
  std::vector<Int> b(k);
  for (std::size_t i = 0; i < k; ++i) {
    b[i] = c[i] * scale;
  }

  for (;;) {
    auto neg = std::find_if(b.begin(), b.end(), [](const Int& x) { return x < 0; });
    if (neg == b.end()) {
      break;
    }
    const std::size_t i = static_cast<std::size_t>(neg - b.begin());
    std::size_t j = k;
    for (std::size_t t = 0; t < k; ++t) {
      if (b[t] >= m) {
        j = t;
        break;
      }
    }
    if (j == k) {
      throw std::logic_error("bezout adjustment found no large coefficient above threshold");
    }
    // batch of single moves b_j -= a_i, b_i += a_j
    Int times = std::min(ceil_div(-b[i], a[j]), floor_div(b[j], a[i]));
    if (times < 1) {
      times = 1;
    }
    b[j] -= times * a[i];
    b[i] += times * a[j];
  }

  Int check = 0;
  for (std::size_t i = 0; i < k; ++i) {
    check += a[i] * b[i];
  }
  if (check != target) {
    throw std::logic_error("bezout adjustment lost the target value");
  }
  return b;
}

std::vector<IntVec> zero_set(const LinearFunction& lin) {
  std::vector<IntVec> out;
  const auto& sup = lin.support();
  for (std::size_t i : sup) {
    for (std::size_t j : sup) {
      if (i == j) {
        continue;
      }
      IntVec v = zero_vec(lin.dim());
      v[i] = lin.coeff(j);
      v[j] = -lin.coeff(i);
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<IntVec> StepPath::steps() const {
  std::vector<IntVec> out;
  for (std::size_t i = 1; i < points.size(); ++i) {
    out.push_back(points[i] - points[i - 1]);
  }
  return out;
}

namespace {

struct Walker {
  IntVec cur;
  std::vector<IntVec> points;

  explicit Walker(IntVec start) : cur(std::move(start)) { points.push_back(cur); }

  // cur += n_j e_i - n_i e_j, once
  bool step(const LinearFunction& lin, std::size_t i, std::size_t j) {
    if (cur[j] < lin.coeff(i)) {
      return false;
    }
    cur[i] += lin.coeff(j);
    cur[j] -= lin.coeff(i);
    points.push_back(cur);
    return true;
  }
};

Int lin_on(const LinearFunction& lin, const std::vector<std::size_t>& idx, const IntVec& x) {
  Int s = 0;
  for (std::size_t i : idx) {
    s += lin.coeff(i) * x[i];
  }
  return s;
}

std::optional<StepPath> by_induction(const LinearFunction& lin, const IntVec& u, const IntVec& v) {
  const Int& m = lin.max_coeff();
  const Int m3 = m * m * m;
  std::vector<std::size_t> active = lin.support();
  Walker w(u);
  StepPath path;
  path.route = PathRoute::Induction;

  while (active.size() > 1) {
    const Int rest_count(active.size() - 1);
    std::optional<std::size_t> choice;
    std::optional<std::size_t> fallback;
    for (std::size_t j : active) {
      std::vector<std::size_t> rest;
      for (std::size_t i : active) {
        if (i != j) {
          rest.push_back(i);
        }
      }
      if (lin_on(lin, rest, v) < rest_count * m3) {
        continue;
      }
      if (!fallback) {
        fallback = j;
      }
      std::vector<Int> cs;
      for (std::size_t i : rest) {
        cs.push_back(lin.coeff(i));
      }
      if (gcd_list(cs) == 1) {
        choice = j;
        break;
      }
    }
    if (!choice) {
      choice = fallback;
    }
    if (!choice) {
      return std::nullopt;
    }
    const std::size_t j = *choice;

    // pump everything else into coordinate j
    for (std::size_t i : active) {
      if (i == j) {
        continue;
      }
      while (w.cur[i] >= m) {
        if (!w.step(lin, j, i)) {
          return std::nullopt;
        }
      }
    }

    const Int excess = w.cur[j] - v[j];
    if (excess < 0) {
      return std::nullopt;
    }
    std::vector<std::size_t> rest;
    std::vector<Int> cs;
    for (std::size_t i : active) {
      if (i != j) {
        rest.push_back(i);
        cs.push_back(lin.coeff(i));
      }
    }
    std::optional<std::vector<Int>> b;
    try {
      b = bezout_nonneg(cs, excess);
    } catch (const VslError&) {
      return std::nullopt;
    }
    if (!b) {
      return std::nullopt;
    }
    for (std::size_t r = 0; r < rest.size(); ++r) {
      for (Int n = 0; n < (*b)[r]; ++n) {
        if (!w.step(lin, rest[r], j)) {
          return std::nullopt;
        }
      }
    }
    path.elimination_order.push_back(j);
    active.erase(std::find(active.begin(), active.end(), j));
  }
  if (w.cur != v) {
    return std::nullopt;
  }
  path.points = std::move(w.points);
  return path;
}

// Moves all mass of the non-hub coordinates above the hub coefficient into the hub.
void normalise(const LinearFunction& lin, std::size_t hub, Walker& w) {
  for (std::size_t i : lin.support()) {
    if (i == hub) {
      continue;
    }
    while (w.cur[i] >= lin.coeff(hub)) {
      w.step(lin, hub, i);
    }
  }
}

std::optional<StepPath> by_residues(const LinearFunction& lin, const IntVec& u, const IntVec& v) {
  std::size_t hub = lin.support().front();
  for (std::size_t i : lin.support()) {
    if (lin.coeff(i) < lin.coeff(hub)) {
      hub = i;
    }
  }
  std::vector<std::size_t> others;
  for (std::size_t i : lin.support()) {
    if (i != hub) {
      others.push_back(i);
    }
  }
  const Int& nh = lin.coeff(hub);

  Walker wu(u);
  normalise(lin, hub, wu);
  Walker wv(v);
  normalise(lin, hub, wv);

  auto residues = [&](const IntVec& x) {
    std::vector<Int> r;
    for (std::size_t i : others) {
      r.push_back(x[i]);
    }
    return r;
  };
  using Key = std::vector<Int>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return IntVecHash{}(k); }
  };
  const Key from = residues(wu.cur);
  const Key to = residues(wv.cur);
  std::unordered_map<Key, std::pair<Key, std::pair<std::size_t, std::size_t>>, KeyHash> parent;
  std::deque<Key> queue{from};
  parent.emplace(from, std::make_pair(from, std::make_pair(std::size_t(0), std::size_t(0))));
  bool found = from == to;
  while (!queue.empty() && !found) {
    Key k = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < others.size() && !found; ++a) {
      for (std::size_t c = 0; c < others.size() && !found; ++c) {
        if (a == c) {
          continue;
        }
        Key n = k;
        n[a] = (n[a] + lin.coeff(others[c])) % nh;
        n[c] = ((n[c] - lin.coeff(others[a])) % nh + nh) % nh;
        if (parent.contains(n)) {
          continue;
        }
        parent.emplace(n, std::make_pair(k, std::make_pair(a, c)));
        if (n == to) {
          found = true;
        }
        queue.push_back(std::move(n));
      }
    }
  }
  if (!found) {
    return std::nullopt;
  }
  std::vector<std::pair<std::size_t, std::size_t>> moves;
  for (Key k = to; k != from;) {
    const auto& p = parent.at(k);
    moves.push_back(p.second);
    k = p.first;
  }
  std::reverse(moves.begin(), moves.end());

  for (auto [a, c] : moves) {
    const std::size_t i = others[a];
    const std::size_t j = others[c];
    // lift j from the hub until the move i <- j can fire
    while (wu.cur[j] < lin.coeff(i)) {
      if (!wu.step(lin, j, hub)) {
        return std::nullopt;
      }
    }
    wu.step(lin, i, j);
    normalise(lin, hub, wu);
  }
  if (wu.cur != wv.cur) {
    return std::nullopt;
  }
  StepPath path;
  path.route = PathRoute::ResidueWalk;
  path.points = std::move(wu.points);
  for (std::size_t k = wv.points.size() - 1; k-- > 0;) {
    path.points.push_back(wv.points[k]);
  }
  return path;
}

std::optional<StepPath> by_search(const LinearFunction& lin, const IntVec& u, const IntVec& v,
                                  std::size_t limit) {
  const auto steps = zero_set(lin);
  std::unordered_map<IntVec, IntVec, IntVecHash> parent;
  std::deque<IntVec> queue{u};
  parent.emplace(u, u);
  while (!queue.empty()) {
    IntVec x = queue.front();
    queue.pop_front();
    if (x == v) {
      StepPath path;
      path.route = PathRoute::Search;
      for (IntVec k = v;; k = parent.at(k)) {
        path.points.push_back(k);
        if (k == u) {
          break;
        }
      }
      std::reverse(path.points.begin(), path.points.end());
      return path;
    }
    for (const IntVec& s : steps) {
      IntVec y = x + s;
      if (!is_nonneg(y) || parent.contains(y)) {
        continue;
      }
      if (parent.size() >= limit) {
        throw VslError(ErrorKind::BudgetExhausted, "zero-path search exceeded its node limit");
      }
      parent.emplace(y, x);
      queue.push_back(std::move(y));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<StepPath> zero_run_path(const LinearFunction& lin, const IntVec& u, const IntVec& v,
                                      const ZeroPathOptions& options) {
  if (u.size() != lin.dim() || v.size() != lin.dim()) {
    throw VslError(ErrorKind::DimensionMismatch, "zero-path endpoints of wrong dimension");
  }
  if (!is_nonneg(u) || !is_nonneg(v)) {
    throw VslError(ErrorKind::PrerequisiteViolated, "zero-path endpoints must be nonnegative");
  }
  if (!lin.is_reduced()) {
    throw VslError(ErrorKind::PrerequisiteViolated, "linear function is not reduced");
  }
  if (lin(u) != lin(v)) {
    throw VslError(ErrorKind::PrerequisiteViolated, "endpoints have different values");
  }
  for (std::size_t i = 0; i < lin.dim(); ++i) {
    if (!lin.in_support(i) && u[i] != v[i]) {
      throw VslError(ErrorKind::PrerequisiteViolated,
                     "endpoints differ outside the support at coordinate " + std::to_string(i));
    }
  }
  if (u == v) {
    StepPath p;
    p.points.push_back(u);
    return p;
  }
  const Int& m = lin.max_coeff();
  const Int threshold = Int(lin.support().size()) * m * m * m;
  if (lin(u) >= threshold) {
    if (auto p = by_induction(lin, u, v)) {
      return p;
    }
    if (auto p = by_residues(lin, u, v)) {
      return p;
    }
  }
  return by_search(lin, u, v, options.search_node_limit);
}

}  // namespace vsl
