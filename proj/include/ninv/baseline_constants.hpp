#pragma once

// Externally sourced constants for the comparison baselines. These are not
// fits produced by this project; each block names where it comes from.

#include <array>

namespace ninv::baseline_constants {

// Abramowitz & Stegun, Handbook of Mathematical Functions (1964), 26.2.23,
// taken from C. Hastings, Approximations for Digital Computers (1955).
// x_p = t - (c0 + c1 t + c2 t^2) / (1 + d1 t + d2 t^2 + d3 t^3),
// t = sqrt(ln(1/p^2)), 0 < p <= 0.5, |eps(p)| < 4.5e-4.
inline constexpr std::array<double, 3> kAsOriginalNumerator{2.515517, 0.802853, 0.010328};
inline constexpr std::array<double, 4> kAsOriginalDenominator{1.0, 1.432788, 0.189269, 0.001308};

// J. D. Beasley and S. G. Springer, Algorithm AS 111: The percentage points
// of the normal distribution, Applied Statistics 26 (1977) 118-121.
// Central: |p - 1/2| <= 0.42, q * A(q^2) / B(q^2).
// Tail: r = sqrt(-ln(min(p, 1-p))), C(r) / D(r), sign of q.
inline constexpr double kBsSplit = 0.42;
inline constexpr std::array<double, 4> kBsCentralNumerator{
    2.50662823884, -18.61500062529, 41.39119773534, -25.44106049637};
inline constexpr std::array<double, 5> kBsCentralDenominator{
    1.0, -8.47351093090, 23.08336743743, -21.06224101826, 3.13082909833};
inline constexpr std::array<double, 4> kBsTailNumerator{
    -2.78718931138, -2.29796479134, 4.85014127135, 2.32121276858};
inline constexpr std::array<double, 3> kBsTailDenominator{
    1.0, 3.54388924762, 1.63706781897};

}  // namespace ninv::baseline_constants
