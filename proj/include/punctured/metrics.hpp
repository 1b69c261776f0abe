#ifndef PUNCTURED_METRICS_HPP
#define PUNCTURED_METRICS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "constants.hpp"
#include "errors.hpp"
#include "hypergeometric.hpp"
#include "types.hpp"

namespace punctured
{

/// A hyperbolic density value. `near_puncture` marks points closer than
/// 1e-3 to a puncture, where the cusp makes the value ill-conditioned.
struct DensityValue {
    double value = 0.0;
    bool at_equality_locus = false;
    bool near_puncture = false;
};

struct CircleMinimum {
    double angle = 0.0;
    double density = 0.0;
};

namespace detail
{

inline constexpr double puncture_tolerance = 1e-12;
inline constexpr double near_puncture_distance = 1e-3;
inline constexpr double equality_locus_tolerance = 1e-9;

// Denominator of the density formula:
//   (K2 / 2K3) |phi2(w)|^2 + Re(phi1(w) conj(phi2(w))) / K3.
// On either cut the upper-side limits of phi1 and phi2 give the continuous
// one-sided limit of the whole expression.
inline double density_denominator(PunctureIndex n, ComplexValue w)
{
    const RootConstants &rc = root_constants(n);
    const ComplexValue p1 = phi1(n, w).value;
    const ComplexValue p2 = phi2(n, w).value;
    return (rc.k2 / (2.0 * rc.k3)) * std::norm(p2) + (p1 * std::conj(p2)).real() / rc.k3;
}

// z^n by repeated squaring.
inline ComplexValue integer_power(ComplexValue z, int n)
{
    ComplexValue result = 1.0;
    ComplexValue base = z;
    for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
        if (e & 1U) {
            result *= base;
        }
        if (e > 1) {
            base *= base;
        }
    }
    return result;
}

// Distance from z to the nearest n-th root of unity.
inline double distance_to_roots(PunctureIndex n, ComplexValue z)
{
    const double step = 2.0 * std::numbers::pi / n.as_double();
    const double k = std::nearbyint(std::arg(z) / step);
    return std::abs(z - std::polar(1.0, k * step));
}

} // namespace detail

/// Density of the generalized hyperbolic metric on C \ {0, 1} with a corner
/// of order 1 - 1/n at 0 and cusps at 1 and infinity:
///   lambda(w) = 1 / (|w|^{1-1/n} |1-w| D(w)).
/// On (1, inf) and (-inf, 0) the exact one-sided limits of phi1 and phi2 are
/// used; the density is continuous across both. Tiny nonzero |w| is allowed:
/// the corner at 0 is resolved by the |w|^{1-1/n} factor.
inline DensityValue lambda_general(PunctureIndex n, ComplexValue w)
{
    require_finite(w, "lambda_general");
    const double to_zero = std::abs(w);
    const double to_one = std::abs(1.0 - w);
    if (to_zero == 0.0 || to_one <= detail::puncture_tolerance) {
        throw PunctureError("lambda_general: w is a puncture (0 or 1)");
    }
    const double denominator = detail::density_denominator(n, w);
    const double value = 1.0 / (std::pow(to_zero, 1.0 - 1.0 / n.as_double()) * to_one * denominator);
    return {value, false, std::min(to_zero, to_one) < detail::near_puncture_distance};
}

/// Density of the hyperbolic metric on C \ S_n, pulled back through w = z^n:
///   lambda(z) = n |z|^{n-1} lambda_general(z^n) = n / (|1 - z^n| D(z^n)).
/// At z = 0 (or when z^n underflows) the closed form 2 / |f_n'(0)| is used.
inline DensityValue lambda_punctured(PunctureIndex n, ComplexValue z)
{
    require_finite(z, "lambda_punctured");
    const RootConstants &rc = root_constants(n);
    if (z == 0.0) {
        return {rc.lambda_at_zero, false, false};
    }
    const double distance = detail::distance_to_roots(n, z);
    if (distance <= detail::puncture_tolerance) {
        throw PunctureError("lambda_punctured: z is an n-th root of unity");
    }
    const ComplexValue w = detail::integer_power(z, n.value());
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        throw DomainError("lambda_punctured: z^n overflows; |z| = " + std::to_string(std::abs(z)));
    }
    if (w == 0.0) {
        return {rc.lambda_at_zero, false, false};
    }
    const double value = n.as_double() / (std::abs(1.0 - w) * detail::density_denominator(n, w));
    return {value, std::abs(w + 1.0) <= detail::equality_locus_tolerance * n.as_double(),
            distance < detail::near_puncture_distance};
}

/// Sharp lower bound for lambda_punctured:
///   1 / (|z| sinh(asinh(gamma_n) - log|z|))  for |z| <= 1,
///   1 / (|z| (gamma_n + log|z|))              for |z| > 1,
/// with equality exactly on z^n = -1. The first branch is evaluated as
/// 2 / (e^s - |z|^2 e^{-s}), s = asinh(gamma_n), which is also valid at 0.
inline double lower_bound(PunctureIndex n, ComplexValue z)
{
    require_finite(z, "lower_bound");
    const double g = root_constants(n).gamma_n;
    const double r = std::abs(z);
    if (r <= 1.0) {
        const double es = g + std::sqrt(1.0 + g * g);
        return 2.0 / (es - r * r / es);
    }
    return 1.0 / (r * (g + std::log(r)));
}

/// Minimum of lambda_punctured on the unit circle, searched over the
/// fundamental arc (0, 2 pi / n): coarse scan, then golden-section search.
inline CircleMinimum circle_min(PunctureIndex n)
{
    constexpr int scan_points = 256;
    constexpr double angle_tolerance = 1e-10;
    const double arc = 2.0 * std::numbers::pi / n.as_double();
    const double spacing = arc / (scan_points + 1);
    auto density = [&](double theta) { return lambda_punctured(n, std::polar(1.0, theta)).value; };

    int best = 1;
    double best_value = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= scan_points; ++k) {
        const double v = density(k * spacing);
        if (v < best_value) {
            best_value = v;
            best = k;
        }
    }
    if (best == 1 || best == scan_points) {
        throw OptimizationError("circle_min: minimum found at the edge of the scan; bracketing failed");
    }

    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = (best - 1) * spacing;
    double hi = (best + 1) * spacing;
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = density(x1);
    double f2 = density(x2);
    while (hi - lo > angle_tolerance) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = density(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = density(x2);
        }
    }
    const double angle = 0.5 * (lo + hi);
    return {angle, density(angle)};
}

} // namespace punctured

#endif
