#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace ninv {

/// Horner evaluation, coefficients in ascending powers.
template <std::size_t N>
constexpr double horner(double x, const std::array<double, N>& c) noexcept {
  static_assert(N > 0);
  double acc = c[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) {
    acc = acc * x + c[i];
  }
  return acc;
}

/// A rational fit P(r)/D(r) with a monic denominator, stored in two
/// algebraically equivalent forms:
///
///   plain:  numerator(r) / denominator(r)
///   nested: quotient(r) + remainder(r) / denominator(r)
///
/// The nested form saves a multiplication and is the one the evaluators use.
/// All coefficient arrays are in ascending powers of r.
template <std::size_t NumN, std::size_t DenN, std::size_t QuotN, std::size_t RemN>
struct RationalCoefficients {
  static_assert(QuotN + DenN - 1 == NumN, "quotient degree must fill numerator");
  static_assert(RemN < DenN, "remainder degree must be below denominator");

  std::string_view name;
  std::string_view description;
  std::array<double, NumN> numerator;
  std::array<double, DenN> denominator;
  std::array<double, QuotN> quotient;
  std::array<double, RemN> remainder;

  constexpr double eval_plain(double r) const noexcept {
    return horner(r, numerator) / horner(r, denominator);
  }

  constexpr double eval_nested(double r) const noexcept {
    return horner(r, quotient) + horner(r, remainder) / horner(r, denominator);
  }

  constexpr bool denominator_is_monic() const noexcept {
    return denominator[DenN - 1] == 1.0;
  }
};

}  // namespace ninv
