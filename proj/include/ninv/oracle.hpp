#pragma once

// High-precision reference for N(x) and N^-1(p), used only to measure the
// error of the fast evaluators. Internally everything runs in long double.

#include <stdexcept>

namespace ninv::oracle {

/// Largest |x| for which norm_cdf_hp computes a value; beyond it the result
/// saturates to 0 or 1.
inline constexpr double kMaxAbsX = 40.0;

struct CdfResult {
  double value;
  bool saturated;
};

/// Standard normal CDF with relative error below 1e-14 in both tails.
double norm_cdf_hp(double x);
CdfResult norm_cdf_hp_checked(double x);

/// Lower-tail CDF in extended precision: N(x).
long double norm_cdf_ld(long double x);
/// Standard normal density in extended precision.
long double norm_pdf_ld(long double x);

struct OracleResult {
  double value;
  /// |N(value) - p| at the end of the refinement.
  double residual;
  /// residual / phi(value): the residual expressed in x-units.
  double x_residual;
  int iterations;
};

enum class Seed { Rat22A, AsOriginal };

class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(double p);
  double p() const noexcept { return p_; }

 private:
  double p_;
};

/// Solves N(x) = p by bracketed Newton iteration on log N, seeded by a fast
/// approximation. Accepts any normal p in (0, 1); the upper half is solved
/// through the exact complement 1 - p.
OracleResult inv_cdf_oracle(double p, Seed seed = Seed::Rat22A);

/// Convenience: inv_cdf_oracle(p).value.
double quantile(double p);

}  // namespace ninv::oracle
