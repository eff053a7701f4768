#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace symbiote {

/// 2x2 table [[a, b], [c, d]].
struct ContingencyTable {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;
};

/// Sample odds ratio ad / bc; infinity when bc = 0 < ad, NaN when both vanish.
inline double odds_ratio(const ContingencyTable& t) noexcept {
  const double num = static_cast<double>(t.a) * static_cast<double>(t.d);
  const double den = static_cast<double>(t.b) * static_cast<double>(t.c);
  if (den == 0.0) return num == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                    : std::numeric_limits<double>::infinity();
  return num / den;
}

/// Two-tailed Fisher exact test: the total hypergeometric probability of all
/// tables with the observed margins that are no more likely than the observed
/// one (relative tolerance 1e-9).
inline double fisher_exact(const ContingencyTable& t) {
  if (t.a < 0 || t.b < 0 || t.c < 0 || t.d < 0) {
    throw std::invalid_argument("contingency table entries must be non-negative");
  }
  const std::int64_t row1 = t.a + t.b, row2 = t.c + t.d;
  const std::int64_t col1 = t.a + t.c, col2 = t.b + t.d;
  const std::int64_t n = row1 + row2;
  if (n == 0) throw std::invalid_argument("contingency table has all-zero margins");

  auto log_factorial = [](std::int64_t k) { return std::lgamma(static_cast<double>(k) + 1.0); };
  const double log_const = log_factorial(row1) + log_factorial(row2) + log_factorial(col1) +
                           log_factorial(col2) - log_factorial(n);
  auto log_p = [&](std::int64_t x) {
    return log_const - log_factorial(x) - log_factorial(row1 - x) - log_factorial(col1 - x) -
           log_factorial(row2 - col1 + x);
  };

  const std::int64_t lo = std::max<std::int64_t>(0, col1 - row2);
  const std::int64_t hi = std::min(row1, col1);
  const double observed = log_p(t.a);
  const double cutoff = observed + std::log1p(1e-9);
  double p = 0.0;
  for (std::int64_t x = lo; x <= hi; ++x) {
    const double lp = log_p(x);
    if (lp <= cutoff) p += std::exp(lp);
  }
  return std::min(p, 1.0);
}

}  // namespace symbiote
