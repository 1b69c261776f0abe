#ifndef PUNCTURED_CONSTANTS_HPP
#define PUNCTURED_CONSTANTS_HPP

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>

#include "double_double.hpp"
#include "gamma.hpp"
#include "hypergeometric.hpp"
#include "types.hpp"

namespace punctured
{

struct KConstants {
    double k2 = 0.0;
    double k3 = 0.0;
};

/// Everything that depends on n alone, computed once per n.
struct RootConstants {
    PunctureIndex n{2};
    double gamma_n = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
    double r_n = 0.0;
    double schwarz_factor = 0.0;
    double covering_derivative = 0.0;
    double lambda_at_zero = 0.0;
};

namespace detail
{

// Above this n the two products in gamma_n are combined in double-double.
inline constexpr int compensated_gamma_threshold = 50;

inline double alpha_of(PunctureIndex n) { return (n.as_double() - 1.0) / (2.0 * n.as_double()); }

} // namespace detail

/// K2 = -Gamma((n+1)/2n)^2 / Gamma(1/n),  K3 = Gamma((n-1)/n) / Gamma((n-1)/2n)^2.
inline KConstants k_constants(PunctureIndex n)
{
    const double x = n.as_double();
    const double alpha = detail::alpha_of(n);
    const double half_plus = (x + 1.0) / (2.0 * x);
    return {-gamma_ratio({half_plus, half_plus}, {1.0 / x}), gamma_ratio({(x - 1.0) / x}, {alpha, alpha})};
}

/// gamma_n = 1 / lambda(e^{i pi/n}), from the hypergeometric values at 1/2:
///   gamma_n = 2^{1/n}/n * [ F_B F_A / K3 + (K2 / 2K3) F_B^2 ]
/// with F_B = 2F1(a, a; 1; 1/2), F_A = 2F1(a, a; 2a; 1/2), a = (n-1)/2n.
/// 1/K3 and K2/K3 are taken from their trigonometric forms.
inline double gamma_n(PunctureIndex n)
{
    constexpr double pi = std::numbers::pi;
    const double x = n.as_double();
    const double alpha = detail::alpha_of(n);
    const double f_b = hyp2f1({alpha, alpha, 1.0}, 0.5).value.real();
    const double f_a = hyp2f1({alpha, alpha, 2.0 * alpha}, 0.5).value.real();
    const double inv_k3 = std::sin(pi / x) * gamma_ratio({1.0 / x, alpha, alpha}, {}) / pi;
    const double half_k2_over_k3 = -pi * std::tan(pi / (2.0 * x));
    const double scale = std::exp2(1.0 / x) / x;
    if (n.value() <= detail::compensated_gamma_threshold) {
        return scale * (inv_k3 * f_b * f_a + half_k2_over_k3 * f_b * f_b);
    }
    const DoubleDouble fb(f_b);
    const DoubleDouble bracket = DoubleDouble(inv_k3) * fb * DoubleDouble(f_a) + DoubleDouble(half_k2_over_k3) * fb * fb;
    return static_cast<double>(DoubleDouble(scale) * bracket);
}

/// Validity radius of the Schwarz-type bound.
inline double r_n_from_gamma(double g) { return 1.0 + g - std::sqrt(g * g + 2.0 * g); }

inline double schwarz_factor_from_gamma(double g)
{
    return std::exp(std::sqrt(g * g + 2.0 * g) - g) / r_n_from_gamma(g);
}

inline double r_n(PunctureIndex n) { return r_n_from_gamma(gamma_n(n)); }

inline double schwarz_factor(PunctureIndex n) { return schwarz_factor_from_gamma(gamma_n(n)); }

/// |f_n'(0)| for the universal covering map of C \ S_n normalized by f_n(0) = 0:
/// Gamma((1-1/n)/2)^2 Gamma(1/n) / (n Gamma(1-1/n) Gamma((1+1/n)/2)^2).
inline double covering_derivative(PunctureIndex n)
{
    const double x = n.as_double();
    const double alpha = detail::alpha_of(n);
    const double beta = (1.0 + 1.0 / x) / 2.0;
    return gamma_ratio({alpha, alpha, 1.0 / x}, {1.0 - 1.0 / x, beta, beta}) / x;
}

/// Gamma(1/4)^4 / (4 pi^2), the limit of n gamma_n.
inline double hempel_constant()
{
    const double g = gamma(0.25);
    return g * g * g * g / (4.0 * std::numbers::pi * std::numbers::pi);
}

/// (schwarz_factor(n) - 1) sqrt(n) - 8 Gamma(5/4) / Gamma(3/4); tends to 0.
inline double schwarz_factor_asymptotic_residual(PunctureIndex n)
{
    return (schwarz_factor(n) - 1.0) * std::sqrt(n.as_double()) - 8.0 * gamma_ratio({1.25}, {0.75});
}

inline RootConstants compute_root_constants(PunctureIndex n)
{
    RootConstants rc;
    rc.n = n;
    rc.gamma_n = gamma_n(n);
    const KConstants k = k_constants(n);
    rc.k2 = k.k2;
    rc.k3 = k.k3;
    rc.r_n = r_n_from_gamma(rc.gamma_n);
    rc.schwarz_factor = schwarz_factor_from_gamma(rc.gamma_n);
    rc.covering_derivative = covering_derivative(n);
    rc.lambda_at_zero = 2.0 / rc.covering_derivative;
    return rc;
}

/// Cached RootConstants; safe for concurrent callers.
inline const RootConstants &root_constants(PunctureIndex n)
{
    static std::shared_mutex mutex;
    static std::map<int, RootConstants> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(n.value()); it != cache.end()) {
            return it->second;
        }
    }
    RootConstants fresh = compute_root_constants(n);
    std::unique_lock lock(mutex);
    return cache.try_emplace(n.value(), fresh).first->second;
}

} // namespace punctured

#endif
