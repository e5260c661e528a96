#ifndef POLYSUB_RATIONAL_HPP
#define POLYSUB_RATIONAL_HPP

// Exact arbitrary-precision rational scalars, vectors and matrices.
// Every computation in this library is exact; no floating point leaks in.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace polysub {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;

inline int sign_of(const Rational& x) { return x.sign(); }

inline Rational dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero_vec(const RVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline RVec scaled(const RVec& v, const Rational& c) {
  RVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

inline RVec vec_sub(const RVec& a, const RVec& b) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

/// Canonical text form: "p" or "p/q" with q > 0 and gcd(|p|, q) = 1.
inline std::string format_rational(const Rational& x) { return x.str(); }

/// Strict parser for the canonical rational syntax: optional sign, integer,
/// optional "/" followed by a positive integer.  Rejects everything else.
inline Rational parse_rational(const std::string& tok) {
  std::size_t i = 0;
  const std::size_t n = tok.size();
  bool neg = false;
  if (i < n && (tok[i] == '+' || tok[i] == '-')) {
    neg = (tok[i] == '-');
    ++i;
  }
  std::size_t num_begin = i;
  while (i < n && tok[i] >= '0' && tok[i] <= '9') ++i;
  if (i == num_begin) throw std::invalid_argument("bad rational: '" + tok + "'");
  BigInt num(tok.substr(num_begin, i - num_begin));
  BigInt den = 1;
  if (i < n) {
    if (tok[i] != '/') throw std::invalid_argument("bad rational: '" + tok + "'");
    ++i;
    std::size_t den_begin = i;
    while (i < n && tok[i] >= '0' && tok[i] <= '9') ++i;
    if (i != n || i == den_begin) throw std::invalid_argument("bad rational: '" + tok + "'");
    den = BigInt(tok.substr(den_begin, n - den_begin));
    if (den == 0) throw std::invalid_argument("bad rational: zero denominator in '" + tok + "'");
  }
  if (neg) num = -num;
  return Rational(num, den);
}

inline std::string format_vec(const RVec& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += format_rational(v[i]);
  }
  return s;
}

/// Largest power of two (with integer exponent, possibly negative) that is <= x.
/// Pre: x > 0.
inline Rational pow2_floor(const Rational& x) {
  if (x <= 0) throw std::invalid_argument("pow2_floor: nonpositive input");
  Rational p = 1;
  if (x >= 1) {
    while (p * 2 <= x) p *= 2;
  } else {
    while (p > x) p /= 2;
  }
  return p;
}

inline std::string point_key(const RVec& v) { return format_vec(v, ","); }

}  // namespace polysub

#endif  // POLYSUB_RATIONAL_HPP
