#include "hyperlog/levin.hpp"

#include <vector>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

// L_k from the first k + 1 partial sums.
Real levin_order(std::span<const Real> terms, std::span<const Real> partial, std::size_t k) {
  const Precision wp = terms.front().precision();
  Real num(0L, wp);
  Real den(0L, wp);
  // c_j = (-1)^j C(k, j) ((1 + j) / (1 + k))^(k - 1), built incrementally.
  Real binom(1L, wp);
  const Real k1(static_cast<long>(k) + 1, wp);
  for (std::size_t j = 0; j <= k; ++j) {
    if (j > 0) {
      binom *= static_cast<long>(k - j + 1);
      binom /= static_cast<long>(j);
    }
    const Real ratio = Real(static_cast<long>(j) + 1, wp) / k1;
    Real c = binom * pow(ratio, static_cast<long>(k) - 1);
    if (j % 2 == 1) c = -c;
    const Real omega = terms[j] * static_cast<long>(j + 1);
    if (omega.is_zero()) throw DomainError("Levin transform hit a zero term");
    const Real cw = c / omega;
    num += cw * partial[j];
    den += cw;
  }
  return num / den;
}

}  // namespace

LevinEstimate levin_u(std::span<const Real> terms) {
  if (terms.size() < 6) throw DomainError("Levin transform needs at least 6 terms");
  std::vector<Real> partial;
  partial.reserve(terms.size());
  Real acc(0L, terms.front().precision());
  for (const Real& t : terms) {
    acc += t;
    partial.push_back(acc);
  }
  const std::size_t k = terms.size() - 1;
  Real best = levin_order(terms, partial, k);
  Real lower = levin_order(terms, partial, k - 4);
  return {best, abs(best - lower)};
}

}  // namespace hyperlog
