#include <doctest.h>

#include <cmath>

#include "laghank/quadrature.hpp"
#include "laghank/special_functions.hpp"
#include "support/oracles.hpp"

using namespace laghank;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("generalized gauss-laguerre rules") {
    for (double a : {-0.5, 0.0, 0.5, 1.0, 2.5}) {
        const AlphaParam alpha(a);
        const QuadratureRule rule = gauss_gen_laguerre(24, alpha);
        REQUIRE(rule.order == 24);
        REQUIRE((int)rule.nodes.size() == 24);

        double wsum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            CHECK(rule.weights[i] > 0.0);
            CHECK(rule.nodes[i] > 0.0);
            if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
            wsum += rule.weights[i];
        }
        CHECK(wsum == doctest::Approx(std::tgamma(a + 1.0)).epsilon(1e-12));

        // moment exactness up to degree 2 * order - 1
        double moment = std::tgamma(a + 1.0);
        for (int m = 1; m <= 2 * 24 - 1; ++m) {
            moment *= a + m; // Gamma(a + m + 1) via the recurrence
            const double got = rule.integrate([m](double x) { return std::pow(x, m); });
            CHECK(std::fabs(got - moment) <= 1e-11 * moment);
        }
    }

    SUBCASE("third moment example") {
        const QuadratureRule rule = gauss_gen_laguerre(8, AlphaParam(0.0));
        CHECK(rule.integrate([](double x) { return x * x * x; }) ==
              doctest::Approx(6.0).epsilon(1e-13));
    }

    SUBCASE("orthogonality of the normalized polynomials") {
        const AlphaParam alpha(0.7);
        const QuadratureRule rule = gauss_gen_laguerre(8, alpha);
        const double got = rule.integrate(
            [&](double x) { return laguerre_r(2, alpha, x) * laguerre_r(2, alpha, x); });
        const double want = std::tgamma(1.7) * weight_w(alpha, 2) /
                            (weight_w(alpha, 2) * weight_w(alpha, 2));
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }

    CHECK_THROWS_AS(gauss_gen_laguerre(0, AlphaParam(0.5)), std::invalid_argument);
}

TEST_CASE("symmetric gauss-jacobi rules") {
    for (double a : {-0.49, 0.0, 0.5, 1.0, 3.0}) {
        const AlphaParam alpha(a);
        const QuadratureRule rule = gauss_jacobi_sym(20, alpha);
        double wsum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            CHECK(rule.weights[i] > 0.0);
            CHECK(rule.nodes[i] > -1.0);
            CHECK(rule.nodes[i] < 1.0);
            wsum += rule.weights[i];
        }
        const double want = std::sqrt(M_PI) * std::exp(std::lgamma(a + 0.5) - std::lgamma(a + 1.0));
        CHECK(wsum == doctest::Approx(want).epsilon(1e-12));
        CHECK(angular_normalization(alpha) * wsum == doctest::Approx(1.0).epsilon(1e-12));

        // odd moments vanish, even moments match the Beta closed form
        CHECK(std::fabs(rule.integrate([](double u) { return u; })) <= 1e-13);
        for (int m = 2; m <= 10; m += 2) {
            const double got = rule.integrate([m](double u) { return std::pow(u, m); });
            const double beta = std::exp(std::lgamma((m + 1.0) / 2.0) + std::lgamma(a + 0.5) -
                                         std::lgamma((m + 2.0) / 2.0 + a));
            CHECK(got == doctest::Approx(beta).epsilon(1e-11));
        }
    }
    CHECK_THROWS_AS(gauss_jacobi_sym(8, AlphaParam(-0.5)), std::domain_error);
}

TEST_CASE("panel rules on the half line") {
    const QuadratureRule r1 = panel_halfline(10.0, 32, 8);
    CHECK(r1.integrate([](double x) { return std::exp(-x); }) ==
          doctest::Approx(1.0 - std::exp(-10.0)).epsilon(1e-12));

    const QuadratureRule r2 = panel_halfline(1.0, 4, 2);
    CHECK(r2.integrate([](double x) { return x * x; }) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    CHECK_THROWS_AS(panel_halfline(10.0, 0, 8), std::invalid_argument);
    CHECK_THROWS_AS(panel_halfline(-1.0, 4, 8), std::invalid_argument);

    SUBCASE("oscillation capping keeps half-wavelength panels") {
        const double y = 5.0;
        const QuadratureRule osc = panel_halfline(40.0, 16, 8, y);
        // every panel must be narrower than pi / y; nodes of one panel span less
        CHECK(osc.order >= (int)std::ceil(40.0 / (M_PI / y)) * 8);

        // refinement stability of an oscillatory kernel integral
        auto f = [y](double x) {
            return std::exp(-0.5 * x * x) * bessel_j_entire(AlphaParam(0.0), x * y) * x;
        };
        const double v1 = panel_halfline(40.0, 16, 8, y).integrate(f);
        const double v2 = panel_halfline(40.0, 32, 8, y).integrate(f);
        CHECK(std::fabs(v1 - v2) <= 1e-8 * std::max(1e-8, std::fabs(v2)));
    }

    SUBCASE("breakpoints align panels with jumps") {
        const QuadratureRule rb = panel_interval(0.0, 4.0, 8, 6, {1.0});
        const double got = rb.integrate([](double x) { return x <= 1.0 ? 1.0 : 0.0; });
        CHECK(got == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("cross-check gauss rules on non-polynomial integrands") {
    // int_0^inf cos(x) e^{-x} dx = 1/2
    CHECK(gauss_gen_laguerre(48, AlphaParam(0.0)).integrate([](double x) { return std::cos(x); }) ==
          doctest::Approx(0.5).epsilon(1e-12));

    // int_0^inf cos(x) e^{-x} sqrt(x) dx = Re Gamma(3/2) (1-i)^{-3/2}
    // (value frozen from 30-digit quadrature)
    CHECK(gauss_gen_laguerre(48, AlphaParam(0.5)).integrate([](double x) { return std::cos(x); }) ==
          doctest::Approx(0.20165644396539353).epsilon(1e-12));

    // and a plain brute-force trapezoid agreement on a smooth decaying integrand
    const QuadratureRule rule = gauss_gen_laguerre(48, AlphaParam(0.0));
    const double got = rule.integrate([](double x) { return 1.0 / (1.0 + x * x); });
    const double brute = testing::trapezoid(
        [](double x) { return std::exp(-x) / (1.0 + x * x); }, 0.0, 50.0, 2000000);
    // gauss convergence on this integrand is limited by the poles at +-i
    CHECK(got == doctest::Approx(brute).epsilon(1e-5));
}

TEST_SUITE_END();
