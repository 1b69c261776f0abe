#ifndef PUNCTURED_HYPERGEOMETRIC_HPP
#define PUNCTURED_HYPERGEOMETRIC_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>

#include "double_double.hpp"
#include "errors.hpp"
#include "gamma.hpp"
#include "types.hpp"

namespace punctured
{

/// Real parameters (a, b, c) of the Gauss function 2F1(a, b; c; z).
struct HypergeometricParams {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
};

/// Function value together with a flag telling whether the argument was on
/// the branch cut. On the cut the limit from the upper half-plane (of the
/// function's own argument) is returned.
struct BranchedValue {
    ComplexValue value;
    bool on_cut = false;
};

/// Evaluation route for 2F1. `automatic` picks the route; the others force a
/// single route and exist for cross-checking.
enum class Hyp2f1Strategy {
    automatic,
    series,          // power series in z
    pfaff,           // series in z/(z-1)
    one_minus,       // connection to 1-z
    inverse,         // connection to 1/z
    pfaff_one_minus, // connection to 1/(1-z)
    pfaff_inverse,   // connection to 1-1/z
    continuation     // Taylor integration of the differential equation
};

namespace detail
{

inline constexpr int max_series_terms = 100000;
inline constexpr double series_tolerance = 1e-16;
inline constexpr int small_terms_to_stop = 3;
inline constexpr double direct_series_radius = 0.6;
inline constexpr double corner_exclusion_radius = 0.1;
inline constexpr double cancellation_limit = 1e4;

// Sum of complex terms accumulated in double-double, plus the running sum of
// term magnitudes for cancellation diagnostics.
class CompensatedSum
{
public:
    void add(ComplexValue term)
    {
        re_ += DoubleDouble(term.real());
        im_ += DoubleDouble(term.imag());
        magnitude_ += std::abs(term);
    }

    ComplexValue value() const { return {static_cast<double>(re_), static_cast<double>(im_)}; }
    double magnitude() const { return magnitude_; }

private:
    DoubleDouble re_;
    DoubleDouble im_;
    double magnitude_ = 0.0;
};

// Stops a series once the last term has been negligible three times in a row.
class TruncationCheck
{
public:
    bool done(ComplexValue term, ComplexValue sum)
    {
        if (std::abs(term) < series_tolerance * std::abs(sum)) {
            return ++small_ >= small_terms_to_stop;
        }
        small_ = 0;
        return false;
    }

private:
    int small_ = 0;
};

[[noreturn]] inline void throw_nonconvergence(const char *what)
{
    throw NonConvergenceError(std::string(what) + ": series did not converge within " +
                              std::to_string(max_series_terms) + " terms");
}

inline bool is_near_integer(double x)
{
    return std::abs(x - std::nearbyint(x)) <= 1e-12 * std::max(1.0, std::abs(x));
}

inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

// Principal logarithm of a point in the closed lower half-plane; a negative
// real argument is read as lying just below the axis (arg = -pi).
inline ComplexValue log_lower(ComplexValue u)
{
    return {std::log(std::abs(u)), std::atan2(-std::abs(u.imag()), u.real())};
}

inline ComplexValue power_series(double a, double b, double c, ComplexValue z)
{
    CompensatedSum sum;
    TruncationCheck check;
    ComplexValue term = 1.0;
    sum.add(term);
    for (int k = 0; k < max_series_terms; ++k) {
        const double kk = static_cast<double>(k);
        term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
        sum.add(term);
        if (check.done(term, sum.value())) {
            return sum.value();
        }
    }
    throw_nonconvergence("hyp2f1 power series");
}

// Two-term connection formula; nullopt when the terms cancel too much.
inline std::optional<ComplexValue> combine(ComplexValue first, ComplexValue second)
{
    const ComplexValue total = first + second;
    if (std::abs(first) + std::abs(second) > cancellation_limit * std::abs(total)) {
        return std::nullopt;
    }
    return total;
}

// F(a, b; a + b; z) around z = 1, logarithmic case c - a - b = 0.
inline std::optional<ComplexValue> log_case_one_minus(double a, double b, ComplexValue w, ComplexValue log_w)
{
    CompensatedSum sum;
    TruncationCheck check;
    ComplexValue coefficient = 1.0;
    ComplexValue bracket = 2.0 * digamma(1.0) - digamma(a) - digamma(b) - log_w;
    for (int k = 0; k < max_series_terms; ++k) {
        const double kk = static_cast<double>(k);
        const ComplexValue term = coefficient * bracket;
        sum.add(term);
        if (check.done(term, sum.value())) {
            if (sum.magnitude() > cancellation_limit * std::abs(sum.value())) {
                return std::nullopt;
            }
            return gamma_ratio({a + b}, {a, b}) * sum.value();
        }
        coefficient *= (a + kk) * (b + kk) / ((kk + 1.0) * (kk + 1.0)) * w;
        bracket += 2.0 / (kk + 1.0) - 1.0 / (a + kk) - 1.0 / (b + kk);
    }
    throw_nonconvergence("hyp2f1 logarithmic connection at 1");
}

// F(a, a; c; z) around infinity, logarithmic case b - a = 0.
inline std::optional<ComplexValue> log_case_inverse(double a, double c, ComplexValue inv, ComplexValue log_mz)
{
    CompensatedSum sum;
    TruncationCheck check;
    ComplexValue coefficient = 1.0;
    ComplexValue bracket = log_mz + 2.0 * digamma(1.0) - digamma(a) - digamma(c - a);
    for (int k = 0; k < max_series_terms; ++k) {
        const double kk = static_cast<double>(k);
        const ComplexValue term = coefficient * bracket;
        sum.add(term);
        if (check.done(term, sum.value())) {
            if (sum.magnitude() > cancellation_limit * std::abs(sum.value())) {
                return std::nullopt;
            }
            return gamma_ratio({c}, {a, c - a}) * std::exp(-a * log_mz) * sum.value();
        }
        coefficient *= (a + kk) * (1.0 - c + a + kk) / ((kk + 1.0) * (kk + 1.0)) * inv;
        bracket += 2.0 / (kk + 1.0) - 1.0 / (a + kk) + 1.0 / (c - a - kk - 1.0);
    }
    throw_nonconvergence("hyp2f1 logarithmic connection at infinity");
}

// Connection to the point 1; z in the closed upper half-plane, omz = 1 - z.
inline std::optional<ComplexValue> via_one_minus(double a, double b, double c, ComplexValue omz)
{
    const double m = c - a - b;
    const ComplexValue log_w = log_lower(omz);
    if (is_near_integer(m)) {
        if (std::nearbyint(m) != 0.0) {
            return std::nullopt;
        }
        return log_case_one_minus(a, b, omz, log_w);
    }
    const ComplexValue first = gamma_ratio({c, m}, {c - a, c - b}) * power_series(a, b, 1.0 - m, omz);
    const ComplexValue second =
        std::exp(m * log_w) * gamma_ratio({c, -m}, {a, b}) * power_series(c - a, c - b, 1.0 + m, omz);
    return combine(first, second);
}

// Connection to infinity; z in the closed upper half-plane.
inline std::optional<ComplexValue> via_inverse(double a, double b, double c, ComplexValue z)
{
    const ComplexValue inv = 1.0 / z;
    const ComplexValue log_mz = log_lower(-z);
    const double m = b - a;
    if (is_near_integer(m)) {
        if (std::nearbyint(m) != 0.0 || is_near_integer(c - a)) {
            return std::nullopt;
        }
        return log_case_inverse(a, c, inv, log_mz);
    }
    const ComplexValue first =
        gamma_ratio({c, b - a}, {b, c - a}) * std::exp(-a * log_mz) * power_series(a, a - c + 1.0, a - b + 1.0, inv);
    const ComplexValue second =
        gamma_ratio({c, a - b}, {a, c - b}) * std::exp(-b * log_mz) * power_series(b, b - c + 1.0, b - a + 1.0, inv);
    return combine(first, second);
}

// One Taylor step of the hypergeometric equation z(1-z)w'' + [c-(a+b+1)z]w' - ab w = 0
// from `here` to `here + h`, advancing (w, dw) in place.
inline void taylor_step(double a, double b, double c, ComplexValue here, ComplexValue h, ComplexValue &w,
                        ComplexValue &dw)
{
    const ComplexValue p0 = here * (1.0 - here);
    const ComplexValue p1 = 1.0 - 2.0 * here;
    const ComplexValue q0 = c - (a + b + 1.0) * here;
    const double q1 = -(a + b + 1.0);
    const double ab = a * b;

    // Coefficients scaled by h^k.
    ComplexValue prev = w;
    ComplexValue curr = dw * h;
    ComplexValue value = prev + curr;
    ComplexValue slope = curr;
    for (int k = 0; k < 4000; ++k) {
        const double kk = static_cast<double>(k);
        const ComplexValue next =
            -((p1 * kk + q0) * (kk + 1.0) * curr * h + (-kk * (kk - 1.0) + q1 * kk - ab) * prev * h * h) /
            (p0 * (kk + 1.0) * (kk + 2.0));
        value += next;
        slope += (kk + 2.0) * next;
        if (k >= 2 && std::abs(curr) + std::abs(next) < 1e-17 * std::abs(value)) {
            w = value;
            dw = slope / h;
            return;
        }
        prev = curr;
        curr = next;
    }
    throw NonConvergenceError("hyp2f1 continuation: Taylor step did not converge");
}

// Continues (w, dw) along the segment [from, to]; each step stays within half
// the distance to the singular points 0 and 1.
inline void taylor_walk(double a, double b, double c, ComplexValue from, ComplexValue to, ComplexValue &w,
                        ComplexValue &dw)
{
    ComplexValue here = from;
    for (int step = 0; step < 100000; ++step) {
        const ComplexValue remaining = to - here;
        if (std::abs(remaining) == 0.0) {
            return;
        }
        const double reach = 0.5 * std::min(std::abs(here), std::abs(1.0 - here));
        if (!(reach > 1e-300)) {
            throw PathError("hyp2f1 continuation: path runs into a singular point");
        }
        const bool last = std::abs(remaining) <= reach;
        const ComplexValue h = last ? remaining : remaining * (reach / std::abs(remaining));
        taylor_step(a, b, c, here, h, w, dw);
        here = last ? to : here + h;
    }
    throw NonConvergenceError("hyp2f1 continuation: too many steps");
}

// Analytic continuation from the series disk by integrating the differential
// equation; z in the closed upper half-plane with |z| > 1/2.
inline ComplexValue continuation(double a, double b, double c, ComplexValue z)
{
    const bool straight = z.imag() > 0.0 || z.real() <= 0.0;
    const ComplexValue anchor = straight ? 0.5 * z / std::abs(z) : ComplexValue(0.0, 0.5);
    ComplexValue w = power_series(a, b, c, anchor);
    ComplexValue dw = a * b / c * power_series(a + 1.0, b + 1.0, c + 1.0, anchor);
    if (straight) {
        taylor_walk(a, b, c, anchor, z, w, dw);
    } else {
        const ComplexValue above(z.real(), 0.5);
        taylor_walk(a, b, c, anchor, above, w, dw);
        taylor_walk(a, b, c, above, z, w, dw);
    }
    return w;
}

// Single route evaluation; z in the closed upper half-plane, omz = 1 - z.
inline std::optional<ComplexValue> evaluate_route(const HypergeometricParams &p, ComplexValue z, ComplexValue omz,
                                                  Hyp2f1Strategy route)
{
    const double a = p.a;
    const double b = p.b;
    const double c = p.c;
    switch (route) {
    case Hyp2f1Strategy::series:
        return power_series(a, b, c, z);
    case Hyp2f1Strategy::one_minus:
        return via_one_minus(a, b, c, omz);
    case Hyp2f1Strategy::inverse:
        return via_inverse(a, b, c, z);
    case Hyp2f1Strategy::continuation:
        return continuation(a, b, c, z);
    case Hyp2f1Strategy::pfaff:
    case Hyp2f1Strategy::pfaff_one_minus:
    case Hyp2f1Strategy::pfaff_inverse: {
        // F(a,b;c;z) = (1-z)^(-a) F(a, c-b; c; z/(z-1)). The image point lies
        // in the lower half-plane, so evaluate at its conjugate and reflect.
        const ComplexValue image = std::conj(-z / omz);
        const ComplexValue image_omz = std::conj(1.0 / omz);
        const Hyp2f1Strategy inner = route == Hyp2f1Strategy::pfaff         ? Hyp2f1Strategy::series
                                     : route == Hyp2f1Strategy::pfaff_inverse ? Hyp2f1Strategy::inverse
                                                                               : Hyp2f1Strategy::one_minus;
        const std::optional<ComplexValue> reflected =
            evaluate_route({a, c - b, c}, ComplexValue(image.real(), std::abs(image.imag())), image_omz, inner);
        if (!reflected) {
            return std::nullopt;
        }
        return std::exp(-a * log_lower(omz)) * std::conj(*reflected);
    }
    case Hyp2f1Strategy::automatic:
        break;
    }
    return std::nullopt;
}

inline ComplexValue evaluate_upper(const HypergeometricParams &p, ComplexValue z, ComplexValue omz,
                                   Hyp2f1Strategy strategy)
{
    if (strategy != Hyp2f1Strategy::automatic) {
        const std::optional<ComplexValue> forced = evaluate_route(p, z, omz, strategy);
        if (!forced) {
            throw NonConvergenceError("hyp2f1: forced route is not applicable (cancellation or degenerate parameters)");
        }
        return *forced;
    }
    const double abs_z = std::abs(z);
    if (abs_z <= direct_series_radius) {
        return power_series(p.a, p.b, p.c, z);
    }
    const ComplexValue corner = std::polar(1.0, std::numbers::pi / 3.0);
    if (std::abs(z - corner) < corner_exclusion_radius) {
        return continuation(p.a, p.b, p.c, z);
    }
    const double abs_omz = std::abs(omz);
    const std::array<std::pair<double, Hyp2f1Strategy>, 6> routes = {{
        {abs_z, Hyp2f1Strategy::series},
        {abs_z / abs_omz, Hyp2f1Strategy::pfaff},
        {abs_omz, Hyp2f1Strategy::one_minus},
        {1.0 / abs_z, Hyp2f1Strategy::inverse},
        {1.0 / abs_omz, Hyp2f1Strategy::pfaff_one_minus},
        {abs_omz / abs_z, Hyp2f1Strategy::pfaff_inverse},
    }};
    const auto best = std::min_element(routes.begin(), routes.end(),
                                       [](const auto &x, const auto &y) { return x.first < y.first; });
    if (const std::optional<ComplexValue> value = evaluate_route(p, z, omz, best->second)) {
        return *value;
    }
    return continuation(p.a, p.b, p.c, z);
}

inline void validate(const HypergeometricParams &p)
{
    if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c)) {
        throw DomainError("hyp2f1: parameters must be finite");
    }
    if (is_gamma_pole(p.c)) {
        throw DomainError("hyp2f1: c must not be zero or a negative integer");
    }
}

// Evaluates 2F1 at z with 1 - z supplied separately (callers that know 1 - z
// exactly keep its relative accuracy). For z on (1, +inf) the limit from the
// upper side is taken unless `lower_side` is set.
inline BranchedValue evaluate(const HypergeometricParams &p, ComplexValue z, ComplexValue omz, bool lower_side,
                              Hyp2f1Strategy strategy = Hyp2f1Strategy::automatic)
{
    validate(p);
    require_finite(z, "hyp2f1");
    require_finite(omz, "hyp2f1");
    if (z == 0.0) {
        return {1.0, false};
    }
    if (omz == 0.0) {
        if (p.c - p.a - p.b <= 0.0) {
            throw BranchPointError("hyp2f1: divergent at z = 1 (c - a - b <= 0)");
        }
        // Gauss summation.
        return {gamma_ratio({p.c, p.c - p.a - p.b}, {p.c - p.a, p.c - p.b}), false};
    }
    const bool on_cut = z.imag() == 0.0 && z.real() > 1.0;
    if (is_nonpositive_integer(p.a) || is_nonpositive_integer(p.b)) {
        // Terminating series: a polynomial, valid everywhere.
        return {power_series(p.a, p.b, p.c, z), false};
    }
    const bool flip = z.imag() < 0.0 || (on_cut && lower_side);
    const ComplexValue upper = flip ? std::conj(z) : ComplexValue(z.real(), std::abs(z.imag()));
    const ComplexValue upper_omz = flip ? std::conj(omz) : ComplexValue(omz.real(), -std::abs(omz.imag()));
    const ComplexValue value = evaluate_upper(p, upper, upper_omz, strategy);
    return {flip ? std::conj(value) : value, on_cut};
}

inline HypergeometricParams phi1_params(PunctureIndex n)
{
    const double alpha = (n.as_double() - 1.0) / (2.0 * n.as_double());
    return {alpha, alpha, 2.0 * alpha};
}

inline HypergeometricParams phi2_params(PunctureIndex n)
{
    const double alpha = (n.as_double() - 1.0) / (2.0 * n.as_double());
    return {alpha, alpha, 1.0};
}

} // namespace detail

/// Gauss hypergeometric function 2F1(a, b; c; z), continued to C \ [1, +inf)
/// on the principal branch. On the cut the limit from above is returned and
/// `on_cut` is set.
///
/// Routes: the power series for |z| <= 0.6; otherwise whichever of the five
/// linear transformations (z/(z-1), 1-z, 1/z, 1/(1-z), 1-1/z) gives the
/// smallest argument, with explicit logarithmic expansions when c - a - b = 0
/// or a = b. Near exp(i pi/3), or when a connection formula cancels by more
/// than four digits, the differential equation is integrated from the series
/// disk instead.
inline BranchedValue hyp2f1(const HypergeometricParams &p, ComplexValue z)
{
    return detail::evaluate(p, z, 1.0 - z, false);
}

/// Same as hyp2f1 but restricted to one evaluation route.
inline BranchedValue hyp2f1(const HypergeometricParams &p, ComplexValue z, Hyp2f1Strategy strategy)
{
    return detail::evaluate(p, z, 1.0 - z, false, strategy);
}

/// phi1(z) = 2F1((n-1)/2n, (n-1)/2n; (n-1)/n; z), analytic on C \ [1, +inf).
inline BranchedValue phi1(PunctureIndex n, ComplexValue z) { return hyp2f1(detail::phi1_params(n), z); }

/// phi2(z) = 2F1((n-1)/2n, (n-1)/2n; 1; 1 - z), analytic on C \ (-inf, 0].
/// On the cut the limit from Im z > 0 is returned.
inline BranchedValue phi2(PunctureIndex n, ComplexValue z)
{
    require_finite(z, "phi2");
    // Upper side in z is the lower side of the 2F1 argument 1 - z.
    return detail::evaluate(detail::phi2_params(n), 1.0 - z, z, true);
}

} // namespace punctured

#endif
