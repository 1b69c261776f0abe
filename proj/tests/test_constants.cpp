#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include <punctured/constants.hpp>

using punctured::PunctureIndex;

namespace
{

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Reference values from a 40-digit evaluation of the closed forms.
struct Frozen {
    int n;
    double gamma_n;
    double r_n;
    double schwarz_factor;
    double covering_derivative;
    double k2;
    double k3;
};

const std::vector<Frozen> frozen = {
    {2, 3.5299255007355147526, 0.1117556259781051937, 21.751551241821535134, 4.3768792304529532777, -0.84721308479397908661, 0.13483815029709483917},
    {3, 1.7937192526848766004, 0.18510520249996176181, 12.203536061731888227, 2.5810565398404644619, -0.68446340597972572701, 0.18868222678771990015},
    {4, 1.2280139136119906484, 0.23702270337307577447, 9.0482977331842290252, 2.0196741483651578455, -0.56758569664663050207, 0.21808573512665801821},
    {5, 0.94224549380534086349, 0.27721769877993878018, 7.4315501175018480829, 1.7497171579809067344, -0.48306884160049436425, 0.23662090936858434098},
    {7, 0.64914159150309459553, 0.33778047082528537232, 5.7406854425850831895, 1.4886353960447709999, -0.37097609755586878057, 0.25868288174597534315},
    {10, 0.44578866999990937629, 0.40161201909255124215, 4.5297047643600041982, 1.3203063826559988896, -0.27454202327025204729, 0.2758776051509761569},
    {50, 0.087601755925933651626, 0.65995987363050862259, 2.1289233228858906393, 1.0570231242725804693, -0.06112362170475613876, 0.30955400557519243233},
    {51, 0.085881630488072668363, 0.66263357623213732326, 2.1146716256659100399, 1.0558741655548546241, -0.059957331324762596726, 0.30972436097888716808},
    {100, 0.043776811264118149243, 0.74466139585947786182, 1.7335377631827030509, 1.0281144446218944188, -0.030984679121123101075, 0.31391461534234672693},
    {1000, 0.0043768872486027025966, 0.9107129580165211236, 1.2005917471327451596, 1.0027764365037752471, -0.003137241787986681535, 0.31786878989415598975},
    {10000, 0.00043768793106343697949, 0.97084769920426814354, 1.0604973256294666197, 1.0002772973126187959, -0.00031411571794746379944, 0.31826576081336655531},
    {100000, 0.000043768792312547674347, 0.99068751418203842113, 1.0188439517798063645, 1.0000277262715889623, -0.000031415491022990533877, 0.31830547348928418242},
};

constexpr double hempel = 4.3768792304529532777; // Gamma(1/4)^4 / (4 pi^2)
constexpr double gamma_quarter = 3.6256099082219083119;

} // namespace

TEST(PunctureIndex, RejectsSmallN)
{
    EXPECT_THROW(PunctureIndex(1), punctured::DomainError);
    EXPECT_THROW(PunctureIndex(-4), punctured::DomainError);
    EXPECT_EQ(PunctureIndex(2).value(), 2);
}

TEST(Constants, MatchHighPrecisionReference)
{
    for (const auto &f : frozen) {
        const PunctureIndex n(f.n);
        EXPECT_LT(rel(punctured::gamma_n(n), f.gamma_n), 1e-12) << f.n;
        EXPECT_LT(rel(punctured::r_n(n), f.r_n), 1e-12) << f.n;
        EXPECT_LT(rel(punctured::schwarz_factor(n), f.schwarz_factor), 1e-12) << f.n;
        EXPECT_LT(rel(punctured::covering_derivative(n), f.covering_derivative), 1e-13) << f.n;
        const auto k = punctured::k_constants(n);
        EXPECT_LT(rel(k.k2, f.k2), 1e-13) << f.n;
        EXPECT_LT(rel(k.k3, f.k3), 1e-13) << f.n;
    }
}

TEST(Constants, PublishedGammaTable)
{
    const std::vector<std::pair<int, double>> table = {{2, 3.52993},  {3, 1.79372},     {4, 1.22801},
                                                       {5, 0.942245}, {10, 0.445789},   {100, 0.0437768},
                                                       {1000, 0.00437689}};
    for (const auto &[n, value] : table) {
        EXPECT_LE(rel(punctured::gamma_n(PunctureIndex(n)), value), 5e-6) << n;
    }
}

TEST(Constants, PublishedRadiusAndFactorTable)
{
    struct Row {
        int n;
        double r_n;
        double factor;
    };
    const std::vector<Row> table = {{2, 0.111756, 21.7516}, {3, 0.185105, 12.2035},  {4, 0.237023, 9.0483},
                                    {5, 0.277218, 7.43155}, {10, 0.401612, 4.5297},  {100, 0.744661, 1.73354},
                                    {1000, 0.910713, 1.20059}};
    for (const auto &row : table) {
        EXPECT_LE(rel(punctured::r_n(PunctureIndex(row.n)), row.r_n), 5e-6) << row.n;
        EXPECT_LE(rel(punctured::schwarz_factor(PunctureIndex(row.n)), row.factor), 5e-6) << row.n;
    }
}

TEST(Constants, KAlternateForms)
{
    constexpr double pi = std::numbers::pi;
    for (int k = 2; k <= 1000; k += (k < 50 ? 1 : 37)) {
        const PunctureIndex n(k);
        const auto kc = punctured::k_constants(n);
        const double alpha = (k - 1.0) / (2.0 * k);
        const double g_alpha = std::tgamma(alpha);
        const double k3_alt = pi / std::sin(pi / k) / (std::tgamma(1.0 / k) * g_alpha * g_alpha);
        EXPECT_LT(rel(kc.k3, k3_alt), 1e-12) << k;
        EXPECT_LT(rel(kc.k2 / kc.k3, -2.0 * pi * std::tan(pi / (2.0 * k))), 1e-12) << k;
        EXPECT_LT(kc.k2, 0.0);
        EXPECT_GT(kc.k3, 0.0);
    }
}

TEST(Constants, KSpecialValues)
{
    const auto k = punctured::k_constants(PunctureIndex(2));
    EXPECT_LT(rel(k.k2 / k.k3, -2.0 * std::numbers::pi), 1e-14);
    EXPECT_LT(rel(k.k3, std::sqrt(std::numbers::pi) / (gamma_quarter * gamma_quarter)), 1e-14);
    const auto k1000 = punctured::k_constants(PunctureIndex(1000));
    EXPECT_LE(std::abs(k1000.k2 / k1000.k3 + std::numbers::pi * std::numbers::pi / 1000.0), 1.0 / (1000.0 * 1000.0));
}

TEST(Constants, MonotoneSequences)
{
    double previous_gamma = INFINITY;
    double previous_r = 0.0;
    double previous_factor = INFINITY;
    for (int k = 2; k <= 51; ++k) {
        const PunctureIndex n(k);
        const double g = punctured::gamma_n(n);
        const double r = punctured::r_n(n);
        const double f = punctured::schwarz_factor(n);
        EXPECT_GT(g, 0.0);
        EXPECT_LT(g, previous_gamma) << k;
        EXPECT_GT(r, previous_r) << k;
        EXPECT_LT(r, 1.0);
        EXPECT_LT(f, previous_factor) << k;
        EXPECT_GT(f, 1.0);
        previous_gamma = g;
        previous_r = r;
        previous_factor = f;
    }
}

TEST(Constants, CompensatedThresholdIsSmooth)
{
    // n = 50 uses plain arithmetic, n = 51 the compensated path.
    EXPECT_LT(rel(punctured::gamma_n(PunctureIndex(50)), frozen[6].gamma_n), 1e-13);
    EXPECT_LT(rel(punctured::gamma_n(PunctureIndex(51)), frozen[7].gamma_n), 1e-13);
}

TEST(Constants, HempelLimit)
{
    EXPECT_LT(rel(punctured::hempel_constant(), hempel), 1e-14);
    EXPECT_LE(std::abs(1000.0 * punctured::gamma_n(PunctureIndex(1000)) - punctured::hempel_constant()), 1e-4);
    // n gamma_n approaches the limit from above: 7.06, 4.46, 4.378, 4.3769.
    double previous = INFINITY;
    for (int k : {2, 10, 100, 1000}) {
        const double scaled = k * punctured::gamma_n(PunctureIndex(k));
        EXPECT_LT(scaled, previous) << k;
        EXPECT_GT(scaled, punctured::hempel_constant()) << k;
        previous = scaled;
    }
}

TEST(Constants, CoveringDerivative)
{
    EXPECT_LT(rel(punctured::covering_derivative(PunctureIndex(2)), hempel), 1e-10);
    const double target = 4.0 * std::numbers::ln2;
    double previous_gap = INFINITY;
    for (int k : {100, 1000, 10000}) {
        const double scaled = (punctured::covering_derivative(PunctureIndex(k)) - 1.0) * k;
        const double gap = std::abs(scaled - target);
        EXPECT_LT(gap, previous_gap) << k;
        previous_gap = gap;
    }
    EXPECT_LT(previous_gap, 0.1 * target);
    for (int k = 2; k <= 60; ++k) {
        EXPECT_GT(punctured::covering_derivative(PunctureIndex(k)), 1.0);
    }
}

TEST(Constants, SchwarzAsymptoticResidual)
{
    EXPECT_LT(rel(8.0 * std::tgamma(1.25) / std::tgamma(0.75), 5.917350238377277784621642715454), 1e-14);
    const std::vector<std::pair<int, double>> expected = {
        {100, 1.418027393}, {1000, 0.4259177693}, {10000, 0.1323823246}, {100000, 0.04163053588}};
    double previous = INFINITY;
    for (const auto &[k, value] : expected) {
        const double residual = punctured::schwarz_factor_asymptotic_residual(PunctureIndex(k));
        EXPECT_NEAR(residual, value, 1e-8) << k;
        EXPECT_LT(std::abs(residual), previous) << k;
        previous = std::abs(residual);
    }
}

TEST(RootConstants, InvariantsAndCache)
{
    for (int k : {2, 3, 7, 40, 1000}) {
        const PunctureIndex n(k);
        const auto &rc = punctured::root_constants(n);
        EXPECT_EQ(&rc, &punctured::root_constants(n));
        const auto fresh = punctured::compute_root_constants(n);
        // Recomputation is bit-identical.
        EXPECT_EQ(rc.gamma_n, fresh.gamma_n);
        EXPECT_EQ(rc.schwarz_factor, fresh.schwarz_factor);
        EXPECT_EQ(rc.r_n, 1.0 + rc.gamma_n - std::sqrt(rc.gamma_n * rc.gamma_n + 2.0 * rc.gamma_n));
        EXPECT_EQ(rc.schwarz_factor,
                  std::exp(std::sqrt(rc.gamma_n * rc.gamma_n + 2.0 * rc.gamma_n) - rc.gamma_n) / rc.r_n);
        EXPECT_EQ(rc.lambda_at_zero, 2.0 / rc.covering_derivative);
        EXPECT_GT(rc.r_n, 0.0);
        EXPECT_LT(rc.r_n, 1.0);
    }
}

TEST(RootConstants, ConcurrentReadersSeeCompleteEntries)
{
    std::vector<std::thread> threads;
    std::vector<double> seen(16);
    for (int t = 0; t < 16; ++t) {
        threads.emplace_back([t, &seen] { seen[t] = punctured::root_constants(PunctureIndex(300 + t % 4)).gamma_n; });
    }
    for (auto &th : threads) {
        th.join();
    }
    for (int t = 0; t < 16; ++t) {
        EXPECT_EQ(seen[t], punctured::compute_root_constants(PunctureIndex(300 + t % 4)).gamma_n);
    }
}
