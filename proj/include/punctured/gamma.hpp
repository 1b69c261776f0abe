#ifndef PUNCTURED_GAMMA_HPP
#define PUNCTURED_GAMMA_HPP

#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "types.hpp"

namespace punctured
{

namespace detail
{

// Lanczos approximation with g = 607/128 and 15 terms (Godfrey's
// coefficients); relative error below 1e-15 on Re z >= 1/2.
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr std::array<double, 15> lanczos_coefficients = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

inline constexpr double pole_tolerance = 1e-14;

inline bool is_gamma_pole(ComplexValue z)
{
    const double k = std::nearbyint(z.real());
    return k <= 0.0 && std::abs(z - ComplexValue(k, 0.0)) <= pole_tolerance;
}

inline bool is_gamma_pole(double x) { return is_gamma_pole(ComplexValue(x, 0.0)); }

inline ComplexValue lanczos_log_gamma(ComplexValue z)
{
    const ComplexValue zm1 = z - 1.0;
    ComplexValue sum = lanczos_coefficients[0];
    for (std::size_t i = 1; i < lanczos_coefficients.size(); ++i) {
        sum += lanczos_coefficients[i] / (zm1 + static_cast<double>(i));
    }
    const ComplexValue t = zm1 + (lanczos_g + 0.5);
    constexpr double half_log_two_pi = 0.91893853320467274178;
    return half_log_two_pi + (zm1 + 0.5) * std::log(t) - t + std::log(sum);
}

// log(sin(pi z)) modulo 2 pi i, without overflow for large |Im z|.
inline ComplexValue log_sin_pi(ComplexValue z)
{
    if (z.imag() < 0.0) {
        return std::conj(log_sin_pi(std::conj(z)));
    }
    constexpr double pi = std::numbers::pi;
    const ComplexValue i(0.0, 1.0);
    // sin(pi z) = exp(-i pi z) (exp(2 i pi z) - 1) / (2 i), |exp(2 i pi z)| <= 1.
    return -i * pi * z + std::log((std::exp(2.0 * i * pi * z) - 1.0) / (2.0 * i));
}

} // namespace detail

/// Logarithm of the Gamma function on the branch that is analytic on
/// C \ (-inf, 0] and real on the positive axis. On the negative axis the
/// limit from the upper half-plane is returned.
///
/// Re z >= 1/2 uses the Lanczos sum; smaller real parts are shifted up with
/// log Gamma(z) = log Gamma(z + m) - sum log(z + k), which keeps the branch
/// continuous. Cost grows linearly with -Re z.
inline ComplexValue log_gamma(ComplexValue z)
{
    require_finite(z, "log_gamma");
    if (detail::is_gamma_pole(z)) {
        throw PoleError("log_gamma: pole of Gamma at z = " + std::to_string(z.real()));
    }
    if (z.imag() == 0.0) {
        z = ComplexValue(z.real(), 0.0); // -0.0 -> +0.0
    }
    if (z.real() >= 0.5) {
        return detail::lanczos_log_gamma(z);
    }
    const int shift = static_cast<int>(std::ceil(0.5 - z.real()));
    ComplexValue correction = 0.0;
    for (int k = 0; k < shift; ++k) {
        correction += std::log(z + static_cast<double>(k));
    }
    return detail::lanczos_log_gamma(z + static_cast<double>(shift)) - correction;
}

inline ComplexValue gamma(ComplexValue z) { return std::exp(log_gamma(z)); }

/// Real Gamma function via log_gamma, with the sign restored for x < 0.
inline double gamma(double x)
{
    const double magnitude = std::exp(log_gamma(ComplexValue(x, 0.0)).real());
    if (x > 0.0) {
        return magnitude;
    }
    // Gamma(x) < 0 on (-1, 0), (-3, -2), ...
    return static_cast<long long>(std::ceil(-x)) % 2 == 1 ? -magnitude : magnitude;
}

/// prod Gamma(numerator_i) / prod Gamma(denominator_i) for real arguments.
/// A pole in the denominator makes the ratio vanish; a pole in the numerator
/// throws PoleError.
inline double gamma_ratio(std::initializer_list<double> numerator, std::initializer_list<double> denominator)
{
    for (double x : denominator) {
        if (detail::is_gamma_pole(x)) {
            return 0.0;
        }
    }
    double log_magnitude = 0.0;
    bool negative = false;
    auto accumulate = [&](double x, double sign) {
        log_magnitude += sign * log_gamma(ComplexValue(x, 0.0)).real();
        if (x < 0.0 && static_cast<long long>(std::ceil(-x)) % 2 == 1) {
            negative = !negative;
        }
    };
    for (double x : numerator) {
        accumulate(x, 1.0);
    }
    for (double x : denominator) {
        accumulate(x, -1.0);
    }
    const double magnitude = std::exp(log_magnitude);
    return negative ? -magnitude : magnitude;
}

/// Digamma function psi = Gamma'/Gamma on the real line.
inline double digamma(double x)
{
    if (!std::isfinite(x)) {
        throw DomainError("digamma: argument must be finite");
    }
    if (detail::is_gamma_pole(x)) {
        throw PoleError("digamma: pole at x = " + std::to_string(x));
    }
    if (x < 0.5) {
        return digamma(1.0 - x) - std::numbers::pi / std::tan(std::numbers::pi * x);
    }
    double shifted = 0.0;
    while (x < 12.0) {
        shifted -= 1.0 / x;
        x += 1.0;
    }
    const double r2 = 1.0 / (x * x);
    // Asymptotic expansion with Bernoulli numbers B_2 .. B_14.
    const double tail =
        r2 * (1.0 / 12 - r2 * (1.0 / 120 - r2 * (1.0 / 252 - r2 * (1.0 / 240 - r2 * (1.0 / 132 - r2 * (691.0 / 32760 - r2 / 12))))));
    return shifted + std::log(x) - 0.5 / x - tail;
}

/// Relative residual |Gamma(z) Gamma(1-z) - pi/sin(pi z)| / |pi/sin(pi z)|,
/// evaluated in log space so that large |Im z| does not overflow.
inline double reflection_check(ComplexValue z)
{
    require_finite(z, "reflection_check");
    const ComplexValue log_ratio =
        log_gamma(z) + log_gamma(1.0 - z) + detail::log_sin_pi(z) - std::log(std::numbers::pi);
    return std::abs(std::exp(log_ratio) - 1.0);
}

} // namespace punctured

#endif
