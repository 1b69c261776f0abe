#ifndef PUNCTURED_BOUNDS_HPP
#define PUNCTURED_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "constants.hpp"
#include "errors.hpp"
#include "types.hpp"

namespace punctured
{

struct HempelBound {
    double value = 0.0;
    bool degenerate = false; // a0 = -1, where the bound collapses to 0
};

enum class Winner { landau_sharper, hempel_sharper, tie };

struct BoundComparison {
    ComplexValue a0;
    double landau_bound = 0.0;
    std::optional<double> hempel_bound; // empty at a0 = -1
    Winner winner = Winner::tie;
};

inline constexpr double bound_tie_tolerance = 1e-12;

inline const char *to_string(Winner w)
{
    switch (w) {
    case Winner::landau_sharper:
        return "LANDAU_SHARPER";
    case Winner::hempel_sharper:
        return "HEMPEL_SHARPER";
    case Winner::tie:
        return "TIE";
    }
    return "TIE";
}

/// Sharp bound for |f'(0)| over analytic f on the unit disk omitting S_n
/// with f(0) = a0:
///   2|a0| sinh(asinh(gamma_n) - log|a0|)  for |a0| <= 1,
///   2|a0| (gamma_n + log|a0|)             for |a0| > 1.
/// The first branch is evaluated as e^s - |a0|^2 e^{-s}, s = asinh(gamma_n),
/// which covers a0 = 0 without a limit.
inline double landau_bound(PunctureIndex n, ComplexValue a0)
{
    require_finite(a0, "landau_bound");
    const double g = root_constants(n).gamma_n;
    const double r = std::abs(a0);
    if (r <= 1.0) {
        const double es = g + std::sqrt(1.0 + g * g);
        return es - r * r / es;
    }
    return 2.0 * r * (g + std::log(r));
}

/// Bound for log|f(z)| when f omits S_n:
///   (gamma_n + log+|f(0)|) (1 + |z|)/(1 - |z|) - gamma_n.
inline double schottky_bound(PunctureIndex n, double abs_f0, double abs_z)
{
    if (!(abs_z >= 0.0 && abs_z < 1.0)) {
        throw DomainError("schottky_bound: |z| must lie in [0, 1)");
    }
    if (!(abs_f0 >= 0.0) || !std::isfinite(abs_f0)) {
        throw DomainError("schottky_bound: |f(0)| must be finite and nonnegative");
    }
    const double g = root_constants(n).gamma_n;
    const double log_plus = std::max(0.0, std::log(abs_f0));
    // Rearranged so that abs_z = 0 returns log_plus exactly.
    return log_plus + (g + log_plus) * 2.0 * abs_z / (1.0 - abs_z);
}

/// |f(z)| <= schwarz_factor(n) |z| for f(0) = 0 omitting S_n, valid for |z| < R_n.
inline double schwarz_bound(PunctureIndex n, double abs_z)
{
    const RootConstants &rc = root_constants(n);
    if (!(abs_z >= 0.0 && abs_z < rc.r_n)) {
        throw DomainError("schwarz_bound: |z| = " + std::to_string(abs_z) + " outside the validity radius R_" +
                          std::to_string(n.value()) + " = " + std::to_string(rc.r_n));
    }
    return rc.schwarz_factor * abs_z;
}

/// Hempel's bound for functions omitting {0, 1}, moved to omitting {1, -1}:
///   2|a0 + 1| (|log|(a0 + 1)/2|| + Gamma(1/4)^4 / (4 pi^2)).
inline HempelBound hempel_landau_bound(ComplexValue a0)
{
    require_finite(a0, "hempel_landau_bound");
    const double d = std::abs(a0 + 1.0);
    if (d == 0.0) {
        return {0.0, true};
    }
    return {2.0 * d * (std::abs(std::log(d / 2.0)) + hempel_constant()), false};
}

/// Landau bound for n = 2 against Hempel's bound at a0. At a0 = -1 Hempel's
/// bound degenerates to 0, which is its limit, so Hempel wins there.
inline BoundComparison compare_bounds(ComplexValue a0)
{
    BoundComparison result;
    result.a0 = a0;
    result.landau_bound = landau_bound(PunctureIndex(2), a0);
    const HempelBound h = hempel_landau_bound(a0);
    if (h.degenerate) {
        result.winner = Winner::hempel_sharper;
        return result;
    }
    result.hempel_bound = h.value;
    const double diff = result.landau_bound - h.value;
    if (std::abs(diff) <= bound_tie_tolerance) {
        result.winner = Winner::tie;
    } else {
        result.winner = diff < 0.0 ? Winner::landau_sharper : Winner::hempel_sharper;
    }
    return result;
}

} // namespace punctured

#endif
