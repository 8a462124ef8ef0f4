#pragma once

#include "ninv/rational.hpp"

namespace ninv::coeffs {

// Central (2,2) fit in r = (p - 1/2)^2 on 0.0465 <= p <= 0.9535.
// Max absolute error 2.4943e-5, attained at 12 equioscillation points.
inline constexpr RationalCoefficients<3, 3, 1, 2> kNarrowCentral{
    "narrow-central-2-2",
    "q * (a2 + (a1' r + a0') / (r^2 + b1 r + b0)) on [0.0465, 0.9535]",
    {0.389422403767615, -1.699385796345221, 1.246899760652504},
    {0.155331081623168, -0.839293158122257, 1.0},
    {1.246899760652504},
    {0.195740115269792, -0.652871358365296},
};

namespace detail {
inline constexpr double kWideLead = 1.365020122861334;
inline constexpr double kWideRem0 = 0.151015505647689;
inline constexpr double kWideRem1 = -.5303572634357367;
inline constexpr double kWideDen0 = 0.132089632343748;
inline constexpr double kWideDen1 = -.7607324991323768;
}  // namespace detail

// Central (2,2) fit on 0.025 <= p <= 0.975, max absolute error 1.16e-4.
// Only the nested constants are published; the plain numerator is expanded
// from them.
inline constexpr RationalCoefficients<3, 3, 1, 2> kWideCentral{
    "wide-central-2-2",
    "q * (a2 + (a1 r + a0) / (r^2 + b1 r + b0)) on [0.025, 0.975]",
    {detail::kWideRem0 + detail::kWideLead * detail::kWideDen0,
     detail::kWideRem1 + detail::kWideLead * detail::kWideDen1,
     detail::kWideLead},
    {detail::kWideDen0, detail::kWideDen1, 1.0},
    {detail::kWideLead},
    {detail::kWideRem0, detail::kWideRem1},
};

// Tail (3,2) fit in r = sqrt(log(1/p^2)) for exp(-37^2/2) < p < 0.0465,
// i.e. 2.4749 < r < 37. Approximates the (negative) quantile directly.
inline constexpr RationalCoefficients<4, 3, 2, 2> kTail{
    "tail-3-2",
    "c3 r + c2' + (c1' r + c0') / (r^2 + d1 r + d0) for exp(-684.5) < p < 0.0465",
    {16.896201479841517652, -2.793522347562718412, -8.731478129786263127,
     -1.000182518730158122},
    {7.173787663925508066, 8.759693508958633869, 1.0},
    {0.029814187308200211, -1.000182518730158122},
    {16.682320830719986527, 4.120411523939115059},
};

}  // namespace ninv::coeffs
