#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <punctured/metrics.hpp>

using punctured::ComplexValue;
using punctured::PunctureIndex;

namespace
{

constexpr double pi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double lambda(int n, ComplexValue z) { return punctured::lambda_punctured(PunctureIndex(n), z).value; }

double gamma_of(int n) { return punctured::root_constants(PunctureIndex(n)).gamma_n; }

struct FrozenDensity {
    int n;
    ComplexValue w;
    double value;
};

// lambda_general from a 30-digit evaluation of the hypergeometric formula;
// real points on the cuts are one-sided limits.
const std::vector<FrozenDensity> frozen = {
    {2, {0.5, 0}, 0.56658419549740326408},      {2, {-1, 0}, 0.14164604887435081602},
    {2, {0.3, 0.4}, 0.39034024913382403386},    {2, {3, 0}, 0.085934182864278599348},
    {2, {-5, 0}, 0.030347797842772083549},      {2, {2, -1.5}, 0.10073257885509171362},
    {2, {0.999, 0.001}, 65.988103273881711241}, {2, {1e-06, 1e-06}, 192.1225292560760135},
    {2, {-50, 20}, 0.0022526236740210903514},   {3, {0.5, 0}, 0.74333446069532455177},
    {3, {-1, 0}, 0.18583361517383113794},       {3, {0.3, 0.4}, 0.52531103447929776814},
    {3, {3, 0}, 0.10036447705489145647},        {3, {-5, 0}, 0.036117188820581585669},
    {3, {2, -1.5}, 0.11899798717372434287},     {3, {0.999, 0.001}, 71.771501187202000711},
    {3, {1e-06, 1e-06}, 2050.1063653693170359}, {3, {-50, 20}, 0.0025226169280674976212},
    {7, {0.5, 0}, 0.88028340643744949051},      {7, {-1, 0}, 0.22007085160936237263},
    {7, {0.3, 0.4}, 0.63367120075284231748},    {7, {3, 0}, 0.10957440421356495122},
    {7, {-5, 0}, 0.039966843088667178406},      {7, {2, -1.5}, 0.13091367725794472992},
    {7, {0.999, 0.001}, 75.094412881745911034}, {7, {1e-06, 1e-06}, 20007.184033219199193},
    {7, {-50, 20}, 0.0026853151938815107558},   {70, {0.5, 0}, 0.91355154738411489751},
    {70, {-1, 0}, 0.22838788684602872438},      {70, {0.3, 0.4}, 0.66048169065562240437},
    {70, {3, 0}, 0.11160373134568386932},       {70, {-5, 0}, 0.040834634788755281759},
    {70, {2, -1.5}, 0.13356779351798066291},    {70, {0.999, 0.001}, 75.792859550884418964},
    {70, {1e-06, 1e-06}, 43148.469544196027381}, {70, {-50, 20}, 0.002720257643409640479},
};

} // namespace

TEST(LambdaGeneral, MatchesFrozenValues)
{
    for (const auto &f : frozen) {
        const auto d = punctured::lambda_general(PunctureIndex(f.n), f.w);
        EXPECT_LT(rel(d.value, f.value), 1e-11) << "n=" << f.n << " w=" << f.w;
        EXPECT_FALSE(d.at_equality_locus);
    }
}

TEST(LambdaGeneral, ValuesAtMinusOneAndOneHalf)
{
    for (int n : {2, 3, 4, 5, 10, 100, 1000}) {
        const PunctureIndex idx(n);
        const double at_minus_one = punctured::lambda_general(idx, -1.0).value;
        EXPECT_LT(rel(at_minus_one, 1.0 / (n * gamma_of(n))), 1e-12) << n;
        EXPECT_LT(rel(punctured::lambda_general(idx, 0.5).value, 4.0 * at_minus_one), 1e-12) << n;
    }
}

TEST(LambdaGeneral, ContinuousAcrossBothCuts)
{
    const PunctureIndex n(5);
    for (const double x : {-7.0, -0.4, 1.5, 9.0}) {
        const double on = punctured::lambda_general(n, x).value;
        const double above = punctured::lambda_general(n, ComplexValue(x, 1e-9)).value;
        const double below = punctured::lambda_general(n, ComplexValue(x, -1e-9)).value;
        EXPECT_LT(rel(above, on), 1e-7) << x;
        EXPECT_LT(rel(below, on), 1e-7) << x;
    }
}

TEST(LambdaGeneral, MobiusFunctionalEquation)
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coord(-4.0, 4.0);
    for (int n : {2, 5, 12}) {
        const PunctureIndex idx(n);
        int checked = 0;
        while (checked < 100) {
            const ComplexValue w(coord(rng), coord(rng));
            if (std::abs(w) < 0.05 || std::abs(w - 1.0) < 0.05 || std::abs(w.imag()) < 1e-3) {
                continue;
            }
            const ComplexValue image = w / (w - 1.0);
            const double lhs = punctured::lambda_general(idx, w).value;
            const double rhs = punctured::lambda_general(idx, image).value / std::norm(w - 1.0);
            EXPECT_LT(rel(lhs, rhs), 1e-8) << "n=" << n << " w=" << w;
            ++checked;
        }
    }
}

TEST(LambdaGeneral, Punctures)
{
    EXPECT_THROW(punctured::lambda_general(PunctureIndex(3), 0.0), punctured::PunctureError);
    EXPECT_THROW(punctured::lambda_general(PunctureIndex(3), 1.0), punctured::PunctureError);
    EXPECT_TRUE(punctured::lambda_general(PunctureIndex(3), ComplexValue(1.0, 1e-4)).near_puncture);
}

TEST(LambdaPunctured, EqualityPointAndOrigin)
{
    for (int n : {2, 3, 7, 10, 70}) {
        const auto d = punctured::lambda_punctured(PunctureIndex(n), std::polar(1.0, pi / n));
        EXPECT_LT(rel(d.value, 1.0 / gamma_of(n)), 1e-12) << n;
        EXPECT_TRUE(d.at_equality_locus);
    }
    // 2 / (Gamma(1/4)^4 / (4 pi^2)).
    EXPECT_LT(rel(lambda(2, 0.0), 2.0 / 4.3768792304529532777), 1e-14);
    EXPECT_LT(rel(lambda(2, ComplexValue(0.0, 1.0)), 0.28329209774870201), 1e-12);
}

TEST(LambdaPunctured, SymmetriesAreExactToRoundoff)
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> radius(0.05, 3.0);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int n : {2, 3, 5, 9}) {
        const ComplexValue rotation = std::polar(1.0, 2.0 * pi / n);
        int checked = 0;
        while (checked < 100) {
            const ComplexValue z = std::polar(radius(rng), angle(rng));
            if (punctured::detail::distance_to_roots(PunctureIndex(n), z) < 0.02) {
                continue;
            }
            const double v = lambda(n, z);
            EXPECT_LT(rel(lambda(n, z * rotation), v), 1e-12) << z;
            EXPECT_LT(rel(lambda(n, std::conj(z)), v), 1e-12) << z;
            ++checked;
        }
    }
}

TEST(LambdaPunctured, PullbackConsistency)
{
    for (int n : {2, 3, 6}) {
        const PunctureIndex idx(n);
        for (const double r : {0.5, 2.0}) {
            for (const double theta : {0.3, 1.1, 2.9}) {
                const ComplexValue z = std::polar(r, theta);
                const double pulled =
                    n * std::pow(r, n - 1.0) * punctured::lambda_general(idx, std::pow(z, n)).value;
                EXPECT_LT(rel(lambda(n, z), pulled), 1e-12) << z;
            }
        }
        // Richardson extrapolation along z = t e^{i pi / 2n} recovers the closed form at 0.
        auto sample = [&](double t) {
            const ComplexValue z = std::polar(t, pi / (2.0 * n));
            return n * std::pow(t, n - 1.0) * punctured::lambda_general(idx, std::pow(z, n)).value;
        };
        const double extrapolated = (4.0 * sample(1e-3) - sample(2e-3)) / 3.0;
        EXPECT_LT(rel(extrapolated, lambda(n, 0.0)), 1e-6) << n;
    }
}

TEST(LambdaPunctured, UnderflowAndOverflow)
{
    // z^n underflows: the density has reached its value at the origin.
    EXPECT_EQ(lambda(50, ComplexValue(1e-10, 0.0)), lambda(50, 0.0));
    EXPECT_THROW(lambda(1000, ComplexValue(10.0, 0.0)), punctured::DomainError);
}

TEST(LambdaPunctured, PuncturesAndFlags)
{
    EXPECT_THROW(lambda(2, 1.0), punctured::PunctureError);
    EXPECT_THROW(lambda(2, -1.0), punctured::PunctureError);
    EXPECT_THROW(lambda(3, std::polar(1.0, 2.0 * pi / 3.0)), punctured::PunctureError);
    const auto near = punctured::lambda_punctured(PunctureIndex(4), ComplexValue(0.0, 1.0 + 5e-4));
    EXPECT_TRUE(near.near_puncture);
    EXPECT_FALSE(punctured::lambda_punctured(PunctureIndex(4), ComplexValue(0.0, 1.1)).near_puncture);
    EXPECT_FALSE(punctured::lambda_punctured(PunctureIndex(4), ComplexValue(0.3, 0.3)).at_equality_locus);
}

TEST(LowerBound, BranchesAndSpecialPoints)
{
    for (int n : {2, 3, 10}) {
        const PunctureIndex idx(n);
        const double g = gamma_of(n);
        EXPECT_LT(rel(punctured::lower_bound(idx, std::polar(1.0, 0.7)), 1.0 / g), 1e-14);
        // Both branch formulas meet at |z| = 1.
        const double inside = punctured::lower_bound(idx, 1.0 - 1e-12);
        const double outside = punctured::lower_bound(idx, 1.0 + 1e-12);
        EXPECT_LT(rel(inside, outside), 1e-10);
        const double root = std::sqrt(1.0 + g * g);
        EXPECT_LT(rel(punctured::lower_bound(idx, 0.0), 2.0 * (g + root) / (1.0 + 2.0 * g * g + 2.0 * g * root)),
                  1e-14);
        // Branch formulas as written.
        const double r = 0.37;
        EXPECT_LT(rel(punctured::lower_bound(idx, r), 1.0 / (r * std::sinh(std::asinh(g) - std::log(r)))), 1e-13);
        EXPECT_LT(rel(punctured::lower_bound(idx, 3.0), 1.0 / (3.0 * (g + std::log(3.0)))), 1e-15);
        const ComplexValue e = std::polar(1.0, pi / n);
        EXPECT_LT(rel(lambda(n, e), punctured::lower_bound(idx, e)), 1e-12);
    }
}

TEST(LowerBound, DominanceProperty)
{
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> log_radius(std::log(1e-3), std::log(1e3));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    for (int n : {2, 5, 10}) {
        const PunctureIndex idx(n);
        int checked = 0;
        while (checked < 2000) {
            const ComplexValue z = std::polar(std::exp(log_radius(rng)), angle(rng));
            if (punctured::detail::distance_to_roots(idx, z) < 1e-2) {
                continue;
            }
            const double v = lambda(n, z);
            const double b = punctured::lower_bound(idx, z);
            ASSERT_GE(v, b * (1.0 - 1e-9)) << "n=" << n << " z=" << z;
            // Distance to the locus z^n = -1 (rotations of e^{i pi/n}).
            const double locus = std::abs(z - std::polar(1.0, (2.0 * std::round((std::arg(z) * n / pi - 1.0) / 2.0) + 1.0) * pi / n));
            if (locus > 1e-2) {
                EXPECT_GT(v / b - 1.0, 1e-6) << "n=" << n << " z=" << z;
            }
            ++checked;
        }
    }
}

TEST(LambdaPunctured, CurvatureMinusOne)
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> coord(-1.8, 1.8);
    const double h = 1e-3;
    for (int n : {2, 7}) {
        int checked = 0;
        while (checked < 20) {
            const ComplexValue z(coord(rng), coord(rng));
            if (punctured::detail::distance_to_roots(PunctureIndex(n), z) < 0.1) {
                continue;
            }
            auto log_lambda = [&](double dx, double dy) { return std::log(lambda(n, z + ComplexValue(dx, dy))); };
            // Fourth-order central differences along each axis.
            auto second = [&](double ux, double uy) {
                return (-log_lambda(2 * h * ux, 2 * h * uy) + 16.0 * log_lambda(h * ux, h * uy) - 30.0 * log_lambda(0, 0) +
                        16.0 * log_lambda(-h * ux, -h * uy) - log_lambda(-2 * h * ux, -2 * h * uy)) /
                       (12.0 * h * h);
            };
            const double laplacian = second(1, 0) + second(0, 1);
            const double v = lambda(n, z);
            EXPECT_NEAR(laplacian / (v * v), 1.0, 1e-4) << "n=" << n << " z=" << z;
            ++checked;
        }
    }
}

TEST(CircleMin, LocatesMidpointBetweenPunctures)
{
    for (int n : {2, 3, 10}) {
        const auto m = punctured::circle_min(PunctureIndex(n));
        EXPECT_NEAR(m.angle, pi / n, 1e-6) << n;
        EXPECT_LT(rel(m.density, 1.0 / gamma_of(n)), 1e-8) << n;
    }
}

TEST(CircleMin, CuspNearPunctures)
{
    for (int n : {2, 10}) {
        const auto m = punctured::circle_min(PunctureIndex(n));
        const double near_root = lambda(n, std::polar(1.0, 1e-4));
        EXPECT_GT(near_root, 100.0 * m.density) << n;
    }
}
