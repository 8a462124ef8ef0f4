#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ninv {

/// Raised when an evaluator receives a probability outside its interval.
///
/// The message names the function, the offending value and the valid
/// interval, e.g. `inv_cdf_rat22a: p=1.5 outside (5.3140683644545391e-298, 1)`.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string_view function, double p, double lower, double upper,
              bool lower_open, bool upper_open);

  double p() const noexcept { return p_; }
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  bool lower_open() const noexcept { return lower_open_; }
  bool upper_open() const noexcept { return upper_open_; }

 private:
  double p_;
  double lower_;
  double upper_;
  bool lower_open_;
  bool upper_open_;
};

// Out of line so the throw path never bloats the inlined evaluators.
[[noreturn]] void throw_domain_error(const char* function, double p,
                                     double lower, double upper,
                                     bool lower_open, bool upper_open);

/// exp(-37^2 / 2): the smallest probability the composed evaluators accept
/// (exclusive). Below it the tail fit is no longer valid.
inline constexpr double kHardFloor = 5.314068364454539e-298;

/// A value in the open unit interval.
class Probability {
 public:
  explicit Probability(double p) : p_(p) {
    if (!(p > 0.0 && p < 1.0)) {
      throw_domain_error("Probability", p, 0.0, 1.0, true, true);
    }
  }

  constexpr double value() const noexcept { return p_; }

 private:
  double p_;
};

/// q = p - 1/2 and its square, the variable of the central fits.
struct CenteredSquare {
  double q;
  double r;

  static constexpr CenteredSquare from(double p) noexcept {
    const double q = p - 0.5;
    return {q, q * q};
  }
};

/// sqrt(log(1/p^2)) evaluated as sqrt(-2 log p); p^2 would underflow for
/// p below ~1e-154.
struct TailVariable {
  double r;

  static TailVariable from(double p) noexcept {
    return {std::sqrt(-2.0 * std::log(p))};
  }
};

/// Split of (0, 1) into lower tail, central region and upper tail.
/// The cut points themselves belong to the central region.
struct RegionPartition {
  double lower_cut;
  double upper_cut;
  double hard_floor = kHardFloor;

  constexpr bool in_lower_tail(double p) const noexcept { return p < lower_cut; }
  constexpr bool in_upper_tail(double p) const noexcept { return p > upper_cut; }
  constexpr bool in_central(double p) const noexcept {
    return p >= lower_cut && p <= upper_cut;
  }
};

inline constexpr RegionPartition kNarrowPartition{0.0465, 0.9535};
inline constexpr RegionPartition kWidePartition{0.025, 0.975};

/// Shortest decimal string that parses back to the identical double.
std::string format_roundtrip(double value);

}  // namespace ninv
