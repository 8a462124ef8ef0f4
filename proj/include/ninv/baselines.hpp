#pragma once

// Reference approximations used for comparison: the handbook formula, a
// refit of the same (2,3) shape restricted to p > exp(-37^2/2), and
// Beasley-Springer. All return the signed quantile N^-1(p).

#include <array>
#include <cmath>

#include "ninv/baseline_constants.hpp"
#include "ninv/probability.hpp"
#include "ninv/rational.hpp"

namespace ninv {

/// Coefficients of x_p = t - (c0 + c1 t + c2 t^2) / (1 + d1 t + d2 t^2 + d3 t^3)
/// fitted over exp(-37^2/2) < p <= 0.5. Max absolute error < 8e-5.
struct AsImprovedCoefficients {
  static constexpr std::array<double, 3> numerator{
      2.653962002601684482, 1.561533700212080345, 0.061146735765196993};
  static constexpr std::array<double, 4> denominator{
      1.0, 1.904875182836498708, 0.454055536444233510, 0.009547745327068945};
};

namespace detail {

template <std::size_t NumN, std::size_t DenN>
inline double hastings_lower(double p, const std::array<double, NumN>& num,
                             const std::array<double, DenN>& den) noexcept {
  const double t = TailVariable::from(p).r;
  return -(t - horner(t, num) / horner(t, den));
}

// Evaluates the lower-half formula at min(p, 1-p) with the sign of p - 1/2.
template <std::size_t NumN, std::size_t DenN>
inline double hastings_signed(double p, const std::array<double, NumN>& num,
                              const std::array<double, DenN>& den) noexcept {
  if (p <= 0.5) {
    return hastings_lower(p, num, den);
  }
  return -hastings_lower(1.0 - p, num, den);
}

}  // namespace detail

inline double as_improved(double p) {
  if (!(p > kHardFloor && p < 1.0)) {
    throw_domain_error("as_improved", p, kHardFloor, 1.0, true, true);
  }
  return detail::hastings_signed(p, AsImprovedCoefficients::numerator,
                                 AsImprovedCoefficients::denominator);
}

inline double as_original(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw_domain_error("as_original", p, 0.0, 1.0, true, true);
  }
  return detail::hastings_signed(p, baseline_constants::kAsOriginalNumerator,
                                 baseline_constants::kAsOriginalDenominator);
}

inline double beasley_springer(double p) {
  namespace bc = baseline_constants;
  if (!(p > 0.0 && p < 1.0)) {
    throw_domain_error("beasley_springer", p, 0.0, 1.0, true, true);
  }
  const auto [q, r] = CenteredSquare::from(p);
  if (std::abs(q) <= bc::kBsSplit) {
    return q * horner(r, bc::kBsCentralNumerator) /
           horner(r, bc::kBsCentralDenominator);
  }
  const double s = std::sqrt(-std::log(q < 0.0 ? p : 1.0 - p));
  const double v = horner(s, bc::kBsTailNumerator) / horner(s, bc::kBsTailDenominator);
  return q < 0.0 ? -v : v;
}

inline double as_improved(Probability p) { return as_improved(p.value()); }
inline double as_original(Probability p) { return as_original(p.value()); }
inline double beasley_springer(Probability p) { return beasley_springer(p.value()); }

}  // namespace ninv
