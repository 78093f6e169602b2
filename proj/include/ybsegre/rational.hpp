#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ybsegre {

// All coefficient arithmetic is exact. Every dimension and rank in this
// library is certified by equality of integers, never by tolerance.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& q) { return q.str(); }

// Binomial coefficient C(n, k) in plain 64-bit arithmetic. Inputs here are
// desk scale (n well below 40), so overflow is not a concern.
inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  return acc;
}

} // namespace ybsegre
