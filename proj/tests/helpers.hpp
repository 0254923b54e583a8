#pragma once

#include "vsl/core.hpp"

#include <initializer_list>

namespace vsl::test {

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

inline Configuration at(StateId q, std::initializer_list<long> xs) { return Configuration{q, iv(xs)}; }

// one state q with a single loop
inline Vass loop_vass(std::initializer_list<long> effect) {
  Vass v(effect.size());
  const StateId q = v.add_state("q");
  v.add_transition(q, iv(effect), q);
  return v;
}

}  // namespace vsl::test
