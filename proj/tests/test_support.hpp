#pragma once

#include <algorithm>
#include <random>
#include <string>

#include "hyperlog/complex.hpp"
#include "hyperlog/real.hpp"

namespace hyperlog::testing {

/// |a - b| <= 2^-bits * max(1, |b|).
inline bool close(const Real& a, const Real& b, long bits) {
  const Real diff = abs(a - b);
  if (diff.is_zero()) return true;
  const long scale = std::max(1L, abs(b).exponent2());
  return diff.exponent2() <= scale - bits;
}

inline bool close(const Complex& a, const Complex& b, long bits) {
  const Real diff = (a - b).abs();
  if (diff.is_zero()) return true;
  const long scale = std::max(1L, b.abs().exponent2());
  return diff.exponent2() <= scale - bits;
}

/// Decimal digits of agreement, -log10 |a - b| / max(1, |b|).
inline double agreement_digits(const Real& a, const Real& b) {
  const Real diff = abs(a - b);
  if (diff.is_zero()) return 1e9;
  const long scale = std::max(1L, abs(b).exponent2());
  return static_cast<double>(scale - diff.exponent2()) * 0.30102999566398120;
}

/// Random value in [lo, hi) at `prec` bits, built from a 53-bit draw.
inline Real uniform(std::mt19937_64& rng, double lo, double hi, Precision prec) {
  std::uniform_real_distribution<double> d(lo, hi);
  return Real::from_double(d(rng), prec);
}

/// Starts-with comparison of a decimal rendering.
inline bool has_prefix(const std::string& s, const std::string& prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace hyperlog::testing
