#include "vsl/bigint.hpp"

#include "vsl/error.hpp"

#include <algorithm>
#include <cctype>

namespace vsl {

Int parse_int(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty() ||
      !std::all_of(body.begin(), body.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw VslError(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
  }
  Int value{std::string(body)};
  return negative ? Int(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw VslError(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Int& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

std::string to_string(const IntVec& vec, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += vec[i].str();
  }
  return out;
}

Int norm(const IntVec& v) {
  Int best = 0;
  for (const Int& x : v) {
    const Int a = x < 0 ? Int(-x) : x;
    if (a > best) {
      best = a;
    }
  }
  return best;
}

IntVec zero_vec(std::size_t dim) { return IntVec(dim, Int(0)); }

IntVec unit_vec(std::size_t dim, std::size_t i, int sign) {
  IntVec v(dim, Int(0));
  v.at(i) = sign;
  return v;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) {
    throw VslError(ErrorKind::DimensionMismatch, "vector addition of different lengths");
  }
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + b[i];
  }
  return out;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) {
    throw VslError(ErrorKind::DimensionMismatch, "vector subtraction of different lengths");
  }
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] - b[i];
  }
  return out;
}

IntVec operator*(const Int& k, const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = k * v[i];
  }
  return out;
}

bool is_nonneg(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x >= 0; });
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool leq(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) {
      return false;
    }
  }
  return true;
}

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

Int floor_div(const Int& n, const Int& d) {
  Int q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) {
    --q;
  }
  return q;
}

Int ceil_div(const Int& n, const Int& d) {
  Int q = n / d;
  if ((n % d != 0) && ((n < 0) == (d < 0))) {
    ++q;
  }
  return q;
}

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
  std::size_t h = v.size();
  for (const Int& x : v) {
    h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace vsl
