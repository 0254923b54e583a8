#pragma once

// Generators: the fraction-multiplying 4-VASS family and its separator
// variant, the decrement and ratio modifications, the multiplication-triple
// gadgets, and small fixtures used throughout the tests.

#include "vsl/core.hpp"
#include "vsl/numtheory.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace vsl {

/// Fractions f_i = a_i / b_i, i = 1..n, stored in that order.
struct FractionSchedule {
  std::vector<std::pair<Int, Int>> fractions;

  /// n = 1 with f_1 = 1 + 1/4 = 5/4.
  static FractionSchedule standard();

  std::size_t n() const noexcept { return fractions.size(); }
  /// prod_i f_i^(2^i)
  Rational f() const;
  /// f_n^(2^n)
  Rational top_power() const;
  /// prod_i b_i^(2^i)
  Int big_n() const;

  /// Coprime pairs with a_i > b_i > 0 and f_1 < ... < f_n; throws InvalidSchedule.
  void validate() const;
  /// Additionally f_n = 1 + 1/4^n and the description-size bounds.
  bool size_compliant() const;
};

struct FamilyU {
  Vass vass{4};
  Configuration initial;
  Configuration accepting;
  std::vector<StateId> p;  // p[i] = p_i, i = 0..n
  std::vector<StateId> q;  // q[i] = q_i, i = 1..n (q[0] unused)
  Rational f;
  Int big_n;
};

FamilyU build_Un(const FractionSchedule& sched);

struct FamilyV {
  Vass vass{4};
  Configuration s;
  Configuration t;
  StateId q{};
  IntVec a;
  IntVec delta;
  Rational f;
  Int big_n;
};

/// U_n followed by a single decrement of x2 and a decrement loop on x2.
FamilyV build_Vn(const FractionSchedule& sched);

/// V plus the loop (q, -e_i, q).
Vass add_decrement_loop(const Vass& vass, StateId q, std::size_t coordinate);

/// V plus, at q: -e_i for i in supp(lin2); +e_i and -e_i for i outside both
/// supports; and a loop for every vector of zero(lin1) and zero(lin2).
Vass modify_vass(const Vass& vass, StateId q, const LinearFunction& lin1, const LinearFunction& lin2);

/// The loops modify_vass adds, in insertion order.
std::vector<IntVec> modification_loops(const LinearFunction& lin1, const LinearFunction& lin2);

struct Gadget {
  Vass vass{1};
  Configuration entry;
  StateId exit{};
};

/// 3 counters: entry --(3,0,0)--> exit with loop (0,1,3) at exit.
Gadget build_gadget_B();

/// Counters (a, abar, y, z): y -= 2, then a loop (1,-1,.,-1), then a loop
/// (-1,1,.,-1). Entry state starts from (0, bound, 2, 2 bound).
Gadget build_zero_test_gadget(const Int& bound);

/// Fixture: q(0,0) with a (1,2) loop, q -> q_t by (0,-1), loops (-1,-2) and
/// (0,-1) at q_t. The line a + N delta lies in post(s) and every point strictly
/// above it reaches t, yet t is unreachable.
struct SlopeFixture {
  Vass vass{2};
  Configuration s;
  Configuration t;
  StateId q{};
  IntVec a;
  IntVec delta;
};

SlopeFixture build_toy_slope(const IntVec& loop = {Int(1), Int(2)});

/// Fixture with s -> t: q loop (1,2), q -> q_t by (0,0), q_t loop (-1,-2).
SlopeFixture build_exact_slope();

/// One state q with a single loop of effect (step).
Vass build_single_loop(const Int& step);

}  // namespace vsl
