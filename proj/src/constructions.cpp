#include "vsl/constructions.hpp"

#include <algorithm>

namespace vsl {

namespace {

Rational power(const Rational& x, std::size_t e) {
  Rational r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= x;
  }
  return r;
}

Int power(const Int& x, std::size_t e) {
  Int r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= x;
  }
  return r;
}

std::size_t two_to(std::size_t i) { return std::size_t{1} << i; }

IntVec vec4(long a, long b, long c, long d) { return {Int(a), Int(b), Int(c), Int(d)}; }

}  // namespace

FractionSchedule FractionSchedule::standard() { return FractionSchedule{{{Int(5), Int(4)}}}; }

Rational FractionSchedule::f() const {
  Rational r = 1;
  for (std::size_t i = 1; i <= n(); ++i) {
    r *= power(Rational(fractions[i - 1].first, fractions[i - 1].second), two_to(i));
  }
  return r;
}

Rational FractionSchedule::top_power() const {
  const auto& [a, b] = fractions.back();
  return power(Rational(a, b), two_to(n()));
}

Int FractionSchedule::big_n() const {
  Int r = 1;
  for (std::size_t i = 1; i <= n(); ++i) {
    r *= power(fractions[i - 1].second, two_to(i));
  }
  return r;
}

void FractionSchedule::validate() const {
  if (fractions.empty()) {
    throw VslError(ErrorKind::InvalidSchedule, "schedule needs at least one fraction");
  }
  if (n() > 16) {
    throw VslError(ErrorKind::InvalidSchedule, "schedule too long");
  }
  for (std::size_t i = 0; i < n(); ++i) {
    const auto& [a, b] = fractions[i];
    if (b <= 0 || a <= b) {
      throw VslError(ErrorKind::InvalidSchedule, "fraction " + std::to_string(i + 1) +
                                                     " must satisfy a > b > 0");
    }
    if (gcd(a, b) != 1) {
      throw VslError(ErrorKind::InvalidSchedule,
                     "fraction " + std::to_string(i + 1) + " is not in lowest terms");
    }
    if (i > 0 && Rational(a, b) <= Rational(fractions[i - 1].first, fractions[i - 1].second)) {
      throw VslError(ErrorKind::InvalidSchedule, "fractions must be strictly increasing");
    }
  }
}

bool FractionSchedule::size_compliant() const {
  validate();
  const std::size_t k = n();
  const Int pow4 = power(Int(4), k);
  if (Rational(fractions.back().first, fractions.back().second) != Rational(pow4 + 1, pow4)) {
    return false;
  }
  const Int bound = power(Int(4), k * k + k);
  for (const auto& [a, b] : fractions) {
    if (a > bound || b > bound) {
      return false;
    }
  }
  const Rational ff = f();
  const Int fbound = bound * bound;
  return boost::multiprecision::numerator(ff) <= fbound &&
         boost::multiprecision::denominator(ff) <= fbound;
}

FamilyU build_Un(const FractionSchedule& sched) {
  sched.validate();
  const std::size_t n = sched.n();
  FamilyU u;
  Vass& v = u.vass;
  const StateId q_in = v.add_state("q_in");
  const StateId s_init = v.add_state("s_init");
  u.p.resize(n + 1);
  u.q.resize(n + 1);
  for (std::size_t i = n; i >= 1; --i) {
    u.p[i] = v.add_state("p_" + std::to_string(i));
    u.q[i] = v.add_state("q_" + std::to_string(i));
  }
  u.p[0] = v.add_state("p_0");
  u.q[0] = u.p[0];

  v.add_transition(q_in, vec4(1, 1, 0, 0), s_init);
  v.add_transition(s_init, vec4(1, 1, 0, 0), s_init);
  v.add_transition(s_init, {Int(0), Int(0), Int(0), Int(two_to(n))}, u.p[n]);
  for (std::size_t i = n; i >= 1; --i) {
    const auto& [a, b] = sched.fractions[i - 1];
    v.add_transition(u.p[i], vec4(0, -1, 1, 0), u.p[i]);
    v.add_transition(u.p[i], vec4(0, 0, 0, 0), u.q[i]);
    v.add_transition(u.q[i], {Int(0), a, Int(-b), Int(0)}, u.q[i]);
    v.add_transition(u.q[i], vec4(0, 0, 0, -1), u.p[i]);
    const Int step = i >= 2 ? Int(two_to(i - 1)) : Int(0);
    v.add_transition(u.p[i], {Int(0), Int(0), Int(0), step}, u.p[i - 1]);
  }
  u.f = sched.f();
  const Int fa = boost::multiprecision::numerator(u.f);
  const Int fb = boost::multiprecision::denominator(u.f);
  v.add_transition(u.p[0], {Int(-fb), Int(-fa), Int(0), Int(0)}, u.p[0]);
  u.big_n = sched.big_n();
  u.initial = Configuration{q_in, zero_vec(4)};
  u.accepting = Configuration{u.p[0], zero_vec(4)};
  return u;
}

FamilyV build_Vn(const FractionSchedule& sched) {
  FamilyU u = build_Un(sched);
  FamilyV out;
  out.vass = std::move(u.vass);
  Vass& v = out.vass;
  const StateId q_out = v.add_state("q_out");
  v.add_transition(u.p[0], vec4(0, -1, 0, 0), q_out);
  v.add_transition(q_out, vec4(0, -1, 0, 0), q_out);
  out.s = u.initial;
  out.t = Configuration{q_out, zero_vec(4)};
  const std::size_t n = sched.n();
  out.q = u.p[n - 1];
  out.big_n = u.big_n;
  out.f = u.f;
  const Rational top = sched.top_power();
  const Rational second = Rational(u.big_n) * top;
  out.delta = {u.big_n, boost::multiprecision::numerator(second), Int(0), Int(0)};
  // the first transition already adds (1,1,0,0), so the line starts at one delta
  out.a = out.delta;
  return out;
}

Vass add_decrement_loop(const Vass& vass, StateId q, std::size_t coordinate) {
  if (index(q) >= vass.num_states()) {
    throw VslError(ErrorKind::UnknownState, "state index out of range");
  }
  if (coordinate >= vass.dim()) {
    throw VslError(ErrorKind::DimensionMismatch, "coordinate out of range");
  }
  Vass out = vass;
  out.add_transition(q, unit_vec(vass.dim(), coordinate, -1), q);
  return out;
}

std::vector<IntVec> modification_loops(const LinearFunction& lin1, const LinearFunction& lin2) {
  if (lin1.dim() != lin2.dim()) {
    throw VslError(ErrorKind::DimensionMismatch, "linear functions of different dimension");
  }
  const std::size_t d = lin1.dim();
  for (std::size_t i = 0; i < d; ++i) {
    if (lin1.in_support(i) && lin2.in_support(i)) {
      throw VslError(ErrorKind::OverlappingSupports,
                     "coordinate " + std::to_string(i) + " is in both supports");
    }
  }
  std::vector<IntVec> loops;
  auto add = [&](IntVec v) {
    if (std::find(loops.begin(), loops.end(), v) == loops.end()) {
      loops.push_back(std::move(v));
    }
  };
  for (std::size_t i : lin2.support()) {
    add(unit_vec(d, i, -1));
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!lin1.in_support(i) && !lin2.in_support(i)) {
      add(unit_vec(d, i, 1));
      add(unit_vec(d, i, -1));
    }
  }
  for (const LinearFunction* lin : {&lin1, &lin2}) {
    for (IntVec& v : zero_set(*lin)) {
      add(std::move(v));
    }
  }
  return loops;
}

Vass modify_vass(const Vass& vass, StateId q, const LinearFunction& lin1,
                 const LinearFunction& lin2) {
  if (index(q) >= vass.num_states()) {
    throw VslError(ErrorKind::UnknownState, "state index out of range");
  }
  if (lin1.dim() != vass.dim()) {
    throw VslError(ErrorKind::DimensionMismatch, "linear function of wrong dimension");
  }
  const auto loops = modification_loops(lin1, lin2);
  Vass out = vass;
  for (const IntVec& v : loops) {
    out.add_transition(q, v, q);
  }
  return out;
}

Gadget build_gadget_B() {
  Gadget g;
  g.vass = Vass(3);
  const StateId in = g.vass.add_state("b_in");
  const StateId out = g.vass.add_state("b_out");
  g.vass.add_transition(in, {Int(3), Int(0), Int(0)}, out);
  g.vass.add_transition(out, {Int(0), Int(1), Int(3)}, out);
  g.entry = Configuration{in, zero_vec(3)};
  g.exit = out;
  return g;
}

Gadget build_zero_test_gadget(const Int& bound) {
  if (bound < 1) {
    throw VslError(ErrorKind::PrerequisiteViolated, "bound must be positive");
  }
  Gadget g;
  g.vass = Vass(4);
  const StateId in = g.vass.add_state("zt_in");
  const StateId l1 = g.vass.add_state("zt_up");
  const StateId l2 = g.vass.add_state("zt_down");
  const StateId out = g.vass.add_state("zt_out");
  g.vass.add_transition(in, vec4(0, 0, -2, 0), l1);
  g.vass.add_transition(l1, vec4(1, -1, 0, -1), l1);
  g.vass.add_transition(l1, vec4(0, 0, 0, 0), l2);
  g.vass.add_transition(l2, vec4(-1, 1, 0, -1), l2);
  g.vass.add_transition(l2, vec4(0, 0, 0, 0), out);
  g.entry = Configuration{in, {Int(0), bound, Int(2), Int(2) * bound}};
  g.exit = out;
  return g;
}

SlopeFixture build_toy_slope(const IntVec& loop) {
  if (loop.size() != 2) {
    throw VslError(ErrorKind::DimensionMismatch, "slope loop must have two entries");
  }
  SlopeFixture f;
  f.q = f.vass.add_state("q");
  const StateId qt = f.vass.add_state("q_t");
  f.vass.add_transition(f.q, loop, f.q);
  f.vass.add_transition(f.q, {Int(0), Int(-1)}, qt);
  f.vass.add_transition(qt, {Int(-1), Int(-2)}, qt);
  f.vass.add_transition(qt, {Int(0), Int(-1)}, qt);
  f.s = Configuration{f.q, zero_vec(2)};
  f.t = Configuration{qt, zero_vec(2)};
  f.a = zero_vec(2);
  f.delta = loop;
  return f;
}

SlopeFixture build_exact_slope() {
  SlopeFixture f;
  f.q = f.vass.add_state("q");
  const StateId qt = f.vass.add_state("q_t");
  f.vass.add_transition(f.q, {Int(1), Int(2)}, f.q);
  f.vass.add_transition(f.q, {Int(0), Int(0)}, qt);
  f.vass.add_transition(qt, {Int(-1), Int(-2)}, qt);
  f.s = Configuration{f.q, zero_vec(2)};
  f.t = Configuration{qt, zero_vec(2)};
  f.a = zero_vec(2);
  f.delta = {Int(1), Int(2)};
  return f;
}

Vass build_single_loop(const Int& step) {
  Vass v(1);
  const StateId q = v.add_state("q");
  v.add_transition(q, {step}, q);
  return v;
}

}  // namespace vsl
