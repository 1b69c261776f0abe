#ifndef PUNCTURED_DOUBLE_DOUBLE_HPP
#define PUNCTURED_DOUBLE_DOUBLE_HPP

#include <cmath>
#include <complex>

namespace punctured
{

// Unevaluated sum hi + lo of two doubles with |lo| <= ulp(hi)/2, giving about
// 32 significant decimal digits. Only the operations needed for compensated
// accumulation and the reference evaluations are provided.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double h) : hi(h) {}
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace dd_detail
{

inline DoubleDouble two_sum(double a, double b)
{
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DoubleDouble quick_two_sum(double a, double b)
{
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b)
{
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace dd_detail

inline DoubleDouble operator+(DoubleDouble a, DoubleDouble b)
{
    DoubleDouble s = dd_detail::two_sum(a.hi, b.hi);
    const DoubleDouble t = dd_detail::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = dd_detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return dd_detail::quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }
inline DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

inline DoubleDouble operator*(DoubleDouble a, DoubleDouble b)
{
    DoubleDouble p = dd_detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return dd_detail::quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(DoubleDouble a, DoubleDouble b)
{
    const double q1 = a.hi / b.hi;
    DoubleDouble r = a - b * DoubleDouble(q1);
    const double q2 = r.hi / b.hi;
    r = r - b * DoubleDouble(q2);
    const double q3 = r.hi / b.hi;
    return dd_detail::quick_two_sum(q1, q2) + DoubleDouble(q3);
}

inline DoubleDouble &operator+=(DoubleDouble &a, DoubleDouble b) { return a = a + b; }
inline DoubleDouble &operator-=(DoubleDouble &a, DoubleDouble b) { return a = a - b; }
inline DoubleDouble &operator*=(DoubleDouble &a, DoubleDouble b) { return a = a * b; }
inline DoubleDouble &operator/=(DoubleDouble &a, DoubleDouble b) { return a = a / b; }

inline bool operator<(DoubleDouble a, DoubleDouble b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(DoubleDouble a, DoubleDouble b) { return b < a; }

inline DoubleDouble abs(DoubleDouble a) { return a.hi < 0.0 ? -a : a; }

inline DoubleDouble ldexp(DoubleDouble a, int e) { return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)}; }

inline constexpr DoubleDouble dd_pi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline constexpr DoubleDouble dd_ln2{6.931471805599452862e-01, 2.319046813846299558e-17};

inline DoubleDouble sqrt(DoubleDouble a)
{
    if (a.hi <= 0.0) {
        return {0.0, 0.0};
    }
    const double x = std::sqrt(a.hi);
    const DoubleDouble r = a - dd_detail::two_prod(x, x);
    return dd_detail::quick_two_sum(x, r.hi / (2.0 * x));
}

inline DoubleDouble exp(DoubleDouble a)
{
    constexpr int squarings = 10;
    const double k = std::nearbyint(a.hi / dd_ln2.hi);
    DoubleDouble r = ldexp(a - dd_ln2 * DoubleDouble(k), -squarings);

    // Taylor series of exp(r) - 1; |r| < 4e-4 so 14 terms exceed 32 digits.
    DoubleDouble term = r;
    DoubleDouble sum = r;
    for (int j = 2; j <= 14; ++j) {
        term = term * r / DoubleDouble(static_cast<double>(j));
        sum += term;
    }
    // (1 + s)^2 - 1 = 2s + s^2 keeps the small part exact through squaring.
    for (int j = 0; j < squarings; ++j) {
        sum = ldexp(sum, 1) + sum * sum;
    }
    return ldexp(sum + DoubleDouble(1.0), static_cast<int>(k));
}

inline DoubleDouble log(DoubleDouble a)
{
    DoubleDouble y(std::log(a.hi));
    for (int i = 0; i < 2; ++i) {
        y = y + a * exp(-y) - DoubleDouble(1.0);
    }
    return y;
}

// Taylor series; intended for |x| <= pi/2.
inline DoubleDouble sin(DoubleDouble x)
{
    const DoubleDouble x2 = x * x;
    DoubleDouble term = x;
    DoubleDouble sum = x;
    for (int j = 1; j < 40; ++j) {
        term = -term * x2 / DoubleDouble(static_cast<double>((2 * j) * (2 * j + 1)));
        sum += term;
        if (std::abs(term.hi) < 1e-34 * std::abs(sum.hi)) {
            break;
        }
    }
    return sum;
}

// Taylor series; intended for |x| <= pi/2.
inline DoubleDouble cos(DoubleDouble x)
{
    const DoubleDouble x2 = x * x;
    DoubleDouble term(1.0);
    DoubleDouble sum(1.0);
    for (int j = 1; j < 40; ++j) {
        term = -term * x2 / DoubleDouble(static_cast<double>((2 * j - 1) * (2 * j)));
        sum += term;
        if (std::abs(term.hi) < 1e-34 * std::abs(sum.hi)) {
            break;
        }
    }
    return sum;
}

struct ComplexDoubleDouble {
    DoubleDouble re;
    DoubleDouble im;

    constexpr ComplexDoubleDouble() = default;
    constexpr ComplexDoubleDouble(DoubleDouble r, DoubleDouble i = DoubleDouble()) : re(r), im(i) {}
    ComplexDoubleDouble(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_complex() const { return {static_cast<double>(re), static_cast<double>(im)}; }
    // Magnitude to double precision; enough for convergence tests.
    double magnitude() const { return std::hypot(re.hi, im.hi); }
};

inline ComplexDoubleDouble operator+(const ComplexDoubleDouble &a, const ComplexDoubleDouble &b)
{
    return {a.re + b.re, a.im + b.im};
}

inline ComplexDoubleDouble operator-(const ComplexDoubleDouble &a, const ComplexDoubleDouble &b)
{
    return {a.re - b.re, a.im - b.im};
}

inline ComplexDoubleDouble operator*(const ComplexDoubleDouble &a, const ComplexDoubleDouble &b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ComplexDoubleDouble operator*(const ComplexDoubleDouble &a, DoubleDouble s) { return {a.re * s, a.im * s}; }
inline ComplexDoubleDouble operator/(const ComplexDoubleDouble &a, DoubleDouble s) { return {a.re / s, a.im / s}; }

inline ComplexDoubleDouble operator/(const ComplexDoubleDouble &a, const ComplexDoubleDouble &b)
{
    const DoubleDouble denom = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom};
}

inline ComplexDoubleDouble &operator+=(ComplexDoubleDouble &a, const ComplexDoubleDouble &b) { return a = a + b; }

} // namespace punctured

#endif
