#include <doctest.h>

#include <cmath>
#include <random>

#include "laghank/special_functions.hpp"
#include "support/frozen_values.hpp"
#include "support/oracles.hpp"

using namespace laghank;

TEST_SUITE_BEGIN("special_fn");

TEST_CASE("entire bessel function at zero and small arguments") {
    for (double a : {-0.9, -0.5, 0.0, 0.5, 1.0, 2.5})
        CHECK(bessel_j_entire(AlphaParam(a), 0.0) == 1.0);

    // against the independent long double series oracle (target accuracy is
    // relative 1e-12)
    for (double a : {-0.9, 0.3, 1.0, 2.5}) {
        for (double z = 0.1; z <= 9.0; z += 0.37) {
            const double want = (double)testing::bessel_j_series_oracle(a, z);
            const double got = bessel_j_entire(AlphaParam(a), z);
            CHECK(std::fabs(got - want) <= 1e-12 * std::max(1e-3, std::fabs(want)));
        }
    }
}

TEST_CASE("entire bessel function against frozen high-precision references") {
    for (const auto& ref : testing::kBesselRefs) {
        const double got = bessel_j_entire(AlphaParam(ref.alpha), ref.z);
        CHECK(std::fabs(got - ref.value) <= 5e-12 * std::max(1e-4, std::fabs(ref.value)));
    }
}

TEST_CASE("half-integer closed form to the target accuracy") {
    // j_{1/2}(z) = sin z / z; grid avoids the zeros of sin
    for (double z = 0.3; z <= 50.0; z += 0.59) {
        const double want = std::sin(z) / z;
        if (std::fabs(want) < 1e-3) continue;
        const double got = bessel_j_entire(AlphaParam(0.5), z);
        CHECK(std::fabs(got - want) <= 1e-12 * std::fabs(want));
    }
    CHECK(bessel_j_entire(AlphaParam(0.5), M_PI) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("bessel evaluation is even and rejects bad input") {
    CHECK(bessel_j_entire(AlphaParam(1.2), -3.0) == bessel_j_entire(AlphaParam(1.2), 3.0));
    CHECK_THROWS_AS(AlphaParam(-1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j_entire(AlphaParam(0.5), std::nan("")), std::invalid_argument);
}

TEST_CASE("sup bound |j_alpha| <= 1 on the half line") {
    for (double a : {0.0, 0.5, 1.0, 2.0}) {
        double sup = 0.0;
        for (double x = 0.0; x <= 60.0; x += 0.01)
            sup = std::max(sup, std::fabs(bessel_j_entire(AlphaParam(a), x)));
        CHECK(sup <= 1.0 + 1e-14);
    }
}

TEST_CASE("bessel derivative identity") {
    CHECK(bessel_j_derivative(AlphaParam(1.0), 0.0) == 0.0);

    // d/dz j_{1/2}(1) = -j_{3/2}(1) / 3
    const double want = -bessel_j_entire(AlphaParam(1.5), 1.0) / 3.0;
    CHECK(bessel_j_derivative(AlphaParam(0.5), 1.0) == doctest::Approx(want).epsilon(1e-14));

    for (double a : {0.0, 0.5, 1.0, 2.0}) {
        for (double z = 0.1; z <= 20.0; z += 0.83) {
            const double fd = testing::central_diff(
                [a](double x) { return bessel_j_entire(AlphaParam(a), x); }, z, 1e-5);
            const double an = bessel_j_derivative(AlphaParam(a), z);
            CHECK(std::fabs(fd - an) <= 1e-6 * std::max(1e-6, std::fabs(an)));
        }
    }
}

TEST_CASE("normalized laguerre polynomials") {
    CHECK(laguerre_r(7, AlphaParam(0.3), 0.0) == 1.0);
    CHECK(laguerre_r(0, AlphaParam(2.5), 17.2) == 1.0);
    CHECK(laguerre_r(1, AlphaParam(1.0), 1.0) == doctest::Approx(0.5).epsilon(1e-15));

    std::mt19937 gen(71);
    std::uniform_real_distribution<double> xd(0.0, 30.0);
    for (double a : {-0.3, 0.0, 1.0, 2.5}) {
        for (int n = 0; n <= 12; ++n) {
            const double x = xd(gen);
            const double want = testing::laguerre_series_oracle(n, a, x) /
                                testing::binom_weight_oracle(a, n);
            const double got = laguerre_r(n, AlphaParam(a), x);
            CHECK(std::fabs(got - want) <= 1e-10 * std::max(1.0, std::fabs(want)));
        }
    }
    CHECK_THROWS_AS(laguerre_r(3, AlphaParam(0.5), -1.0), std::invalid_argument);

    // batch evaluation agrees with the single-degree path
    const auto all = laguerre_r_all(10, AlphaParam(0.7), 3.2);
    for (int n = 0; n <= 10; ++n)
        CHECK(all[(std::size_t)n] == doctest::Approx(laguerre_r(n, AlphaParam(0.7), 3.2)).epsilon(1e-14));
}

TEST_CASE("binomial weights") {
    CHECK(weight_w(AlphaParam(0.0), 9) == 1.0);
    CHECK(weight_w(AlphaParam(1.0), 2) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(weight_w(AlphaParam(0.5), 1) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(weight_w(AlphaParam(0.7), 0) == 1.0);

    double prev = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double w = weight_w(AlphaParam(0.8), k);
        CHECK(w > prev);
        prev = w;
    }
    const auto ws = weight_w_all(AlphaParam(0.8), 20);
    CHECK(ws[20] == doctest::Approx(weight_w(AlphaParam(0.8), 20)).epsilon(1e-14));
}

TEST_CASE("derivative of the damped laguerre polynomial") {
    for (double a : {0.0, 0.5, 1.0}) {
        for (int j = 1; j <= 12; ++j) {
            for (double x = 0.5; x <= 10.0; x += 1.9) {
                const double fd = testing::central_diff(
                    [j, a](double t) { return laguerre_r(j, AlphaParam(a), t) * std::exp(-t); }, x,
                    1e-6);
                const double an = laguerre_r_exp_derivative(j, AlphaParam(a), x);
                CHECK(std::fabs(fd - an) <= 1e-6 * std::max(1e-4, std::fabs(an)));
            }
        }
    }
}

TEST_CASE("envelope predicate with a calibrated constant") {
    const AlphaParam alpha(1.0);
    const double c = calibrate_envelope_constant(alpha, 64);
    CHECK(c > 0.0);

    SUBCASE("uncalibrated params are a state error") {
        const EnvelopeParams raw = make_envelope_params(5, alpha, 0.0);
        CHECK_THROWS_AS(envelope_check(5, alpha, 1.0, raw), std::runtime_error);
    }

    SUBCASE("holds at the origin, in the oscillatory branch, and in the exponential branch") {
        const EnvelopeParams p5 = make_envelope_params(5, alpha, c);
        CHECK(envelope_check(5, alpha, 0.0, p5));

        const EnvelopeParams p20 = make_envelope_params(20, alpha, c);
        for (double x = 2.0 / p20.nu; x < 0.5 * p20.nu; x *= 1.3)
            CHECK(envelope_check(20, alpha, x, p20));

        const EnvelopeParams p10 = make_envelope_params(10, alpha, c);
        CHECK(envelope_check(10, alpha, 3.0 * p10.nu, p10));
    }

    SUBCASE("holds on a dense grid for all calibrated degrees") {
        for (int n : {1, 8, 33, 64}) {
            const EnvelopeParams p = make_envelope_params(n, alpha, c);
            for (double x = 1e-3; x <= 3.9 * p.nu; x *= 1.15)
                CHECK(envelope_check(n, alpha, x, p));
        }
    }

    SUBCASE("nu bookkeeping") {
        const EnvelopeParams p = make_envelope_params(7, alpha, c);
        CHECK(p.nu == doctest::Approx(4.0 * 7 + 2.0 * 1.0 + 2.0));
    }
}

TEST_SUITE_END();
