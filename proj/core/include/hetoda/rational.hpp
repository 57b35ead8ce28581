#pragma once

// Exact rational scalars.  Everything that decides feasibility (cone module,
// flat-subspace kernels) runs on these; floats never make yes/no calls.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "hetoda/errors.hpp"

namespace hetoda {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RatVec = std::vector<Rat>;

inline int sign(const Rat& q) { return q.sign(); }

inline double to_double(const Rat& q) { return static_cast<double>(q); }

inline RatVec to_rational(std::span<const double> x, std::int64_t denominator) {
  RatVec out;
  out.reserve(x.size());
  for (double v : x) {
    if (!std::isfinite(v)) throw Error("cannot rationalize non-finite value");
    const double scaled = std::nearbyint(v * static_cast<double>(denominator));
    out.emplace_back(Rat(BigInt(static_cast<long long>(scaled)), BigInt(denominator)));
  }
  return out;
}

// Scales a rational vector to coprime integer entries, preserving direction.
inline RatVec normalize_coprime(const RatVec& v) {
  BigInt lcm_den = 1;
  for (const Rat& q : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(q));
  BigInt gcd_num = 0;
  std::vector<BigInt> ints;
  ints.reserve(v.size());
  for (const Rat& q : v) {
    BigInt n = numerator(q) * (lcm_den / denominator(q));
    gcd_num = boost::multiprecision::gcd(gcd_num, n);
    ints.push_back(std::move(n));
  }
  if (gcd_num == 0) gcd_num = 1;
  RatVec out;
  out.reserve(v.size());
  for (const BigInt& n : ints) out.emplace_back(Rat(n / gcd_num));
  return out;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw ShapeError("rational dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace hetoda
