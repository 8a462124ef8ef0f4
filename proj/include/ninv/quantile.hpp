#pragma once

// Fast approximations to the standard normal quantile N^-1(p).
//
// Two composed evaluators are provided:
//
//   inv_cdf_rat22a  narrow central (2,2) fit on [0.0465, 0.9535] plus the
//                   (3,2) tail fit; max absolute error < 2.5e-5.
//   inv_cdf_rat22b  wide central (2,2) fit on [0.025, 0.975] plus the same
//                   tail; max absolute error < 1.16e-4, fewer log/sqrt calls.
//
// The upper tail is the negated lower tail at 1 - p. Every function is a
// pure binary64 computation and throws DomainError outside its interval.

#include "ninv/coefficients.hpp"
#include "ninv/probability.hpp"

namespace ninv {

namespace detail {

inline double central_narrow(double p) noexcept {
  const auto [q, r] = CenteredSquare::from(p);
  return q * coeffs::kNarrowCentral.eval_nested(r);
}

inline double central_wide(double p) noexcept {
  const auto [q, r] = CenteredSquare::from(p);
  return q * coeffs::kWideCentral.eval_nested(r);
}

inline double tail(double p) noexcept {
  return coeffs::kTail.eval_nested(TailVariable::from(p).r);
}

}  // namespace detail

inline double central_2_2(double p) {
  if (!(p >= kNarrowPartition.lower_cut && p <= kNarrowPartition.upper_cut)) {
    throw_domain_error("central_2_2", p, kNarrowPartition.lower_cut,
                       kNarrowPartition.upper_cut, false, false);
  }
  return detail::central_narrow(p);
}

inline double central_2_2_wide(double p) {
  if (!(p >= kWidePartition.lower_cut && p <= kWidePartition.upper_cut)) {
    throw_domain_error("central_2_2_wide", p, kWidePartition.lower_cut,
                       kWidePartition.upper_cut, false, false);
  }
  return detail::central_wide(p);
}

inline double tail_3_2(double p) {
  if (!(p > kHardFloor && p < kNarrowPartition.lower_cut)) {
    throw_domain_error("tail_3_2", p, kHardFloor, kNarrowPartition.lower_cut,
                       true, true);
  }
  return detail::tail(p);
}

inline double inv_cdf_rat22a(double p) {
  if (p < kNarrowPartition.lower_cut) {
    if (!(p > kHardFloor)) {
      throw_domain_error("inv_cdf_rat22a", p, kHardFloor, 1.0, true, true);
    }
    return detail::tail(p);
  }
  if (p <= kNarrowPartition.upper_cut) {
    return detail::central_narrow(p);
  }
  if (!(p < 1.0)) {
    throw_domain_error("inv_cdf_rat22a", p, kHardFloor, 1.0, true, true);
  }
  return -detail::tail(1.0 - p);
}

inline double inv_cdf_rat22b(double p) {
  if (p < kWidePartition.lower_cut) {
    if (!(p > kHardFloor)) {
      throw_domain_error("inv_cdf_rat22b", p, kHardFloor, 1.0, true, true);
    }
    return detail::tail(p);
  }
  if (p <= kWidePartition.upper_cut) {
    return detail::central_wide(p);
  }
  if (!(p < 1.0)) {
    throw_domain_error("inv_cdf_rat22b", p, kHardFloor, 1.0, true, true);
  }
  return -detail::tail(1.0 - p);
}

inline double central_2_2(Probability p) { return central_2_2(p.value()); }
inline double central_2_2_wide(Probability p) { return central_2_2_wide(p.value()); }
inline double tail_3_2(Probability p) { return tail_3_2(p.value()); }
inline double inv_cdf_rat22a(Probability p) { return inv_cdf_rat22a(p.value()); }
inline double inv_cdf_rat22b(Probability p) { return inv_cdf_rat22b(p.value()); }

}  // namespace ninv
