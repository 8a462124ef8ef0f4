#include "ninv/oracle.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <string>

#include "ninv/baselines.hpp"
#include "ninv/probability.hpp"
#include "ninv/quantile.hpp"

namespace ninv::oracle {

namespace {

constexpr long double kSqrt2 = 1.41421356237309504880168872420969808L;
constexpr long double kSqrtPi = 1.77245385090551602729816748334114518L;
constexpr long double kSqrt2Pi = 2.50662827463100050241576528481104525L;
constexpr long double kEps = std::numeric_limits<long double>::epsilon();

// Below this the all-positive Taylor series for erf is used; above it the
// Laplace continued fraction for erfc. At the switch erfc(2) ~ 4.7e-3, so
// forming 1 - erf loses under 2.5 decimal digits of the ~19 available.
constexpr long double kSeriesLimit = 2.0L;

// erf(z) = 2/sqrt(pi) exp(-z^2) sum_n (2 z^2)^n z / (1 * 3 * ... * (2n+1))
long double erf_series(long double z, long double gauss) {
  const long double two_z2 = 2.0L * z * z;
  long double term = z;
  long double sum = 0.0L;
  long double carry = 0.0L;
  for (int n = 1; n < 500; ++n) {
    // Neumaier summation.
    const long double t = sum + term;
    carry += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    term *= two_z2 / static_cast<long double>(2 * n + 1);
    if (term < kEps * 1e-3L * sum) {
      break;
    }
  }
  return 2.0L / kSqrtPi * gauss * (sum + carry);
}

// erfc(z) = exp(-z^2)/sqrt(pi) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
// evaluated with the modified Lentz algorithm.
long double erfc_continued_fraction(long double z, long double gauss) {
  constexpr long double tiny = 1e-300L;
  long double f = z;
  long double c = f;
  long double d = 0.0L;
  for (int n = 1; n < 5000; ++n) {
    const long double a = 0.5L * static_cast<long double>(n);
    d = z + a * d;
    if (d == 0.0L) d = tiny;
    c = z + a / c;
    if (c == 0.0L) c = tiny;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0L) < kEps) {
      break;
    }
  }
  return gauss / (kSqrtPi * f);
}

// N(x) for x <= 0.
long double lower_tail(long double x) {
  const long double z = -x / kSqrt2;
  const long double gauss = std::exp(-(x * x) / 2.0L);
  if (z < kSeriesLimit) {
    return 0.5L - 0.5L * erf_series(z, gauss);
  }
  return 0.5L * erfc_continued_fraction(z, gauss);
}

double seed_value(double p, Seed seed) {
  if (seed == Seed::Rat22A && p > kHardFloor) {
    return inv_cdf_rat22a(p);
  }
  return as_original(p);
}

struct Refined {
  long double x;
  int iterations;
};

// Solves N(x) = p for 0 < p <= 0.5.
Refined solve_lower(double p_in, Seed seed) {
  const long double p = p_in;
  const long double x0 = seed_value(p_in, seed);

  long double width = 1e-3L;
  long double lo = x0 - width;
  long double hi = x0 + width;
  int expansions = 0;
  while (norm_cdf_ld(lo) > p) {
    lo -= width;
    width *= 2.0L;
    if (++expansions > 64) throw ConvergenceError(p_in);
  }
  width = 1e-3L;
  while (norm_cdf_ld(hi) < p) {
    hi += width;
    width *= 2.0L;
    if (++expansions > 128) throw ConvergenceError(p_in);
  }

  long double x = x0 < lo || x0 > hi ? (lo + hi) / 2.0L : x0;
  for (int it = 1; it <= 200; ++it) {
    const long double cdf = norm_cdf_ld(x);
    if (cdf == p) {
      return {x, it};
    }
    if (cdf < p) {
      lo = x;
    } else {
      hi = x;
    }
    // Newton on log N(x) - log p, whose derivative is phi(x) / N(x).
    const long double step =
        std::log1p((cdf - p) / p) * cdf / norm_pdf_ld(x);
    long double next = x - step;
    if (!(next > lo && next < hi)) {
      next = lo + (hi - lo) / 2.0L;
    }
    const long double scale = std::fmax(1.0L, std::fabs(x));
    if (std::fabs(next - x) <= 4.0L * kEps * scale || hi - lo <= 4.0L * kEps * scale) {
      return {next, it};
    }
    x = next;
  }
  throw ConvergenceError(p_in);
}

}  // namespace

ConvergenceError::ConvergenceError(double p)
    : std::runtime_error("oracle failed to converge at p=" + format_roundtrip(p)),
      p_(p) {}

long double norm_pdf_ld(long double x) {
  return std::exp(-(x * x) / 2.0L) / kSqrt2Pi;
}

long double norm_cdf_ld(long double x) {
  if (x <= 0.0L) {
    return lower_tail(x);
  }
  return 1.0L - lower_tail(-x);
}

CdfResult norm_cdf_hp_checked(double x) {
  if (x < -kMaxAbsX) return {0.0, true};
  if (x > kMaxAbsX) return {1.0, true};
  return {static_cast<double>(norm_cdf_ld(x)), false};
}

double norm_cdf_hp(double x) { return norm_cdf_hp_checked(x).value; }

OracleResult inv_cdf_oracle(double p, Seed seed) {
  if (!(p >= DBL_MIN && p < 1.0)) {
    throw_domain_error("inv_cdf_oracle", p, DBL_MIN, 1.0, false, true);
  }
  // For p >= 1/2 the complement is exact, and N^-1(p) = -N^-1(1 - p).
  const bool upper = p > 0.5;
  const double lower_p = upper ? 1.0 - p : p;
  const Refined refined = solve_lower(lower_p, seed);

  const double lower_value = static_cast<double>(refined.x);
  const long double residual =
      std::fabs(norm_cdf_ld(lower_value) - static_cast<long double>(lower_p));
  const long double x_residual = residual / norm_pdf_ld(lower_value);
  if (!(x_residual < 1e-12L)) {
    throw ConvergenceError(p);
  }
  return {upper ? -lower_value : lower_value, static_cast<double>(residual),
          static_cast<double>(x_residual), refined.iterations};
}

double quantile(double p) { return inv_cdf_oracle(p).value; }

}  // namespace ninv::oracle
