#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace vsl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

Int parse_int(std::string_view text);
Rational parse_rational(std::string_view text);
std::string to_string(const Int& value);
std::string to_string(const Rational& value);
std::string to_string(const IntVec& vec, std::string_view sep = " ");

/// Maximum absolute value of the coordinates; 0 for the empty vector.
Int norm(const IntVec& v);

IntVec zero_vec(std::size_t dim);
IntVec unit_vec(std::size_t dim, std::size_t i, int sign = 1);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator*(const Int& k, const IntVec& v);

bool is_nonneg(const IntVec& v);
bool is_zero(const IntVec& v);
/// Componentwise a <= b.
bool leq(const IntVec& a, const IntVec& b);

Int gcd(const Int& a, const Int& b);
Int abs(const Int& a);

/// Smallest t with t * d >= n, for d > 0.
Int ceil_div(const Int& n, const Int& d);
/// Largest t with t * d <= n, for d > 0.
Int floor_div(const Int& n, const Int& d);

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};

}  // namespace vsl
