// Prints the constants for a few n and checks the sharp lower bound at a
// handful of points.

#include <cstdio>
#include <numbers>

#include <punctured/punctured.hpp>

int main()
{
    using namespace punctured;

    for (int k : {2, 3, 10}) {
        const PunctureIndex n(k);
        const RootConstants &rc = root_constants(n);
        std::printf("n = %-3d gamma_n = %.6g  R_n = %.6g  |f'(0)| = %.6g\n", k, rc.gamma_n, rc.r_n,
                    rc.covering_derivative);

        // The density on the unit circle is smallest halfway between punctures.
        const ComplexValue mid = std::polar(1.0, std::numbers::pi / k);
        std::printf("        lambda(e^{i pi/n}) * gamma_n = %.15f\n", lambda_punctured(n, mid).value * rc.gamma_n);

        for (const ComplexValue z : {ComplexValue(0.0, 0.0), ComplexValue(0.4, 0.3), ComplexValue(-2.0, 1.0)}) {
            const double density = lambda_punctured(n, z).value;
            const double bound = lower_bound(n, z);
            if (density < bound * (1.0 - 1e-9)) {
                std::printf("lower bound violated at (%g, %g)\n", z.real(), z.imag());
                return 1;
            }
        }
    }

    const BoundComparison c = compare_bounds({-0.99, 0.0});
    std::printf("a0 = -0.99: Landau %.6g, Hempel %.6g, %s\n", c.landau_bound, c.hempel_bound.value_or(0.0),
                to_string(c.winner));
    return 0;
}
