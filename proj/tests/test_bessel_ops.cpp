#include <doctest.h>

#include <cmath>

#include "laghank/bessel_ops.hpp"
#include "laghank/spaces.hpp"
#include "laghank/special_functions.hpp"
#include "support/oracles.hpp"

using namespace laghank;

TEST_SUITE_BEGIN("bessel_ops");

TEST_CASE("bessel translation basics") {
    const AlphaParam alpha(0.5);
    const BesselAngularRule angular = BesselAngularRule::make(alpha, 96);

    SUBCASE("t = 0 is the identity and constants are preserved") {
        const GridFunction f = GridFunction::gaussian(1.0);
        const GridFunction t0 = translate_bessel(f, 0.0, alpha, angular);
        for (double s : {0.0, 1.2, 3.3}) CHECK(t0(s) == f(s));

        const GridFunction one = GridFunction::constant(1.0);
        const GridFunction t = translate_bessel(one, 1.7, alpha, angular);
        for (double s : {0.0, 2.5, 6.0}) CHECK(t(s) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("product formula for the multiplicative kernel") {
        for (double a : {0.5, 1.0}) {
            const AlphaParam al(a);
            const BesselAngularRule ang = BesselAngularRule::make(al, 96);
            for (double lam : {0.25, 1.0, 4.0}) {
                const GridFunction jf = GridFunction::bessel_j_fn(al, lam);
                for (double t : {0.25, 1.0, 4.0})
                    for (double s : {0.25, 1.0, 4.0}) {
                        const double lhs = translate_bessel(jf, t, al, ang)(s);
                        const double want =
                            bessel_j_entire(al, lam * t) * bessel_j_entire(al, lam * s);
                        CHECK(std::fabs(lhs - want) <= 1e-8);
                    }
            }
        }
    }

    SUBCASE("symmetry in (s, t)") {
        const GridFunction f = GridFunction::bump(2.0, 1.5);
        for (double t : {0.4, 1.5, 3.2})
            for (double s : {0.7, 2.1}) {
                const double lhs = translate_bessel(f, t, alpha, angular)(s);
                const double rhs = translate_bessel(f, s, alpha, angular)(t);
                CHECK(std::fabs(lhs - rhs) <= 1e-8);
            }
    }

    SUBCASE("alpha = -1/2 degenerates to the even-extension average") {
        const AlphaParam ah(-0.5);
        const BesselAngularRule two = BesselAngularRule::make(ah);
        REQUIRE(two.nodes.size() == 2);
        const GridFunction f = GridFunction::gaussian(1.0);
        const double got = translate_bessel(f, 1.0, ah, two)(2.5);
        const double want = 0.5 * (f(1.5) + f(3.5));
        CHECK(got == doctest::Approx(want).epsilon(1e-14));
    }

    SUBCASE("contraction in every norm") {
        const GridFunction f = GridFunction::exp_decay(1.2);
        for (double p : {1.0, 2.0, 4.0}) {
            const NormSpec spec(p, alpha, Setting::bessel_fn);
            const double base = norm_bessel_fn(f, spec);
            for (double t : {0.5, 2.0, 5.0})
                CHECK(norm_bessel_fn(translate_bessel(f, t, alpha, angular), spec) <=
                      base * (1.0 + 1e-9));
        }
    }

    CHECK_THROWS_AS(translate_bessel(GridFunction::constant(1.0), -0.1, alpha, angular),
                    std::invalid_argument);
}

TEST_CASE("hankel transform of the gaussian fixed point") {
    for (double a : {0.0, 0.5, 1.0}) {
        const HankelParams hp = HankelParams::make(AlphaParam(a), 12.0);
        const GridFunction g = GridFunction::gaussian(1.0);
        CHECK(hankel(g, hp, 0.0) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(hankel(g, hp, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-9));
        for (double y = 0.0; y <= 8.0; y += 0.61)
            CHECK(std::fabs(hankel(g, hp, y) - std::exp(-0.5 * y * y)) <= 1e-6);
    }

    SUBCASE("zero transforms to zero") {
        const HankelParams hp = HankelParams::make(AlphaParam(0.5), 12.0);
        CHECK(hankel(GridFunction::zero(), hp, 1.0) == 0.0);
    }

    SUBCASE("normalization constant") {
        const HankelParams hp = HankelParams::make(AlphaParam(1.5), 12.0);
        CHECK(hp.c_alpha_hankel ==
              doctest::Approx(std::pow(2.0, -1.5) / std::tgamma(2.5)).epsilon(1e-12));
    }

    SUBCASE("brute-force cross-check of the kernel integral") {
        const AlphaParam a(0.5);
        const HankelParams hp = HankelParams::make(a, 12.0);
        const double y = 1.5;
        const double got = hankel(GridFunction::gaussian(1.0), hp, y);
        const double brute = testing::trapezoid(
            [&](double x) {
                return hp.c_alpha_hankel * std::exp(-0.5 * x * x) *
                       bessel_j_entire(a, x * y) * std::pow(x, 2.0);
            },
            0.0, 12.0, 2000000);
        CHECK(got == doctest::Approx(brute).epsilon(1e-10));
    }

    SUBCASE("refinement check reports stability") {
        const HankelParams hp = HankelParams::make(AlphaParam(0.5), 12.0);
        RefinementCheck check;
        hankel(GridFunction::gaussian(1.0), hp, 3.0, &check);
        CHECK_FALSE(check.unstable);
        CHECK(check.relative_shift <= 1e-5);
    }
}

TEST_CASE("inverse transform and round trip") {
    const AlphaParam alpha(0.5);
    const HankelParams hp = HankelParams::make(alpha, 12.0);
    const GridFunction g = GridFunction::gaussian(1.0);

    SUBCASE("round trip on the gaussian") {
        const GridFunction ghat = hankel_sampled(g, hp, 12.0, 1024);
        for (double x = 0.0; x <= 6.0; x += 0.43)
            CHECK(std::fabs(hankel_inverse(ghat, hp, x) - g(x)) <= 1e-6);
    }

    SUBCASE("zero and the kernel at the origin") {
        CHECK(hankel_inverse(GridFunction::zero(), hp, 1.0) == 0.0);
        // at x = 0 the kernel is 1: the inverse is the plain weighted integral
        const GridFunction fhat = GridFunction::exp_decay(1.0);
        const HankelParams wide = HankelParams::make(alpha, 44.0);
        const double got = hankel_inverse(fhat, wide, 0.0);
        const double want = wide.c_alpha_hankel *
                            testing::trapezoid(
                                [&](double y) { return std::exp(-y) * std::pow(y, 2.0); }, 0.0,
                                44.0, 1000000);
        CHECK(got == doctest::Approx(want).epsilon(1e-6));
    }
}

TEST_CASE("plancherel and the sampled hausdorff-young constants") {
    const AlphaParam alpha(0.5);
    const NormSpec l2(2.0, alpha, Setting::bessel_fn);
    for (const GridFunction& f : {GridFunction::gaussian(1.0), GridFunction::bump(2.0, 1.0)}) {
        const HankelParams hp = HankelParams::make(alpha, f.decay_radius() + 4.0);
        const GridFunction fh = hankel_sampled(f, hp, 48.0, 2048);
        const double lhs = norm_bessel_fn(fh, l2);
        const double rhs = norm_bessel_fn(f, l2);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-4));
    }

    // sampled inequality at p in {1, 1.5}: the constant is reported free
    for (double p : {1.0, 1.5}) {
        const GridFunction f = GridFunction::gaussian(1.0);
        const HankelParams hp = HankelParams::make(alpha, 12.0);
        const GridFunction fh = hankel_sampled(f, hp, 48.0, 1024);
        const NormSpec np(p, alpha, Setting::bessel_fn);
        const NormSpec npc(np.conjugate(), alpha, Setting::bessel_fn);
        const double ratio = norm_bessel_fn(fh, npc) / norm_bessel_fn(f, np);
        CHECK(std::isfinite(ratio));
        MESSAGE("sampled transform-bound constant at p=", p, ": ", ratio);
    }
}

TEST_CASE("transform of translation and of convolution") {
    const AlphaParam alpha(0.5);
    const BesselAngularRule angular = BesselAngularRule::make(alpha, 96);
    const HankelParams hp = HankelParams::make(alpha, 12.0);
    const GridFunction g = GridFunction::gaussian(1.0);

    SUBCASE("translation identity at t = 0 and beyond") {
        std::vector<double> ys;
        for (double y = 0.0; y <= 8.0; y += 0.5) ys.push_back(y);
        const TranslationTransformReport r0 = hankel_of_translation_check(g, 0.0, ys, hp, angular);
        CHECK(r0.max_residual <= 1e-10);
        const TranslationTransformReport r1 = hankel_of_translation_check(g, 1.0, ys, hp, angular);
        CHECK(r1.max_residual <= 1e-5);
        const GridFunction b = GridFunction::bump(2.0, 1.0);
        const TranslationTransformReport rb =
            hankel_of_translation_check(b, 0.5, ys, HankelParams::make(alpha, 8.0), angular);
        CHECK(rb.max_residual <= 1e-4);
    }

    SUBCASE("convolution maps to the c_alpha-consistent product") {
        const GridFunction conv = convolve_bessel(g, g, alpha, angular, 512);
        HankelParams hc = hp;
        hc.x_max = conv.decay_radius();
        for (double y : {0.0, 0.8, 2.0, 3.5}) {
            const double lhs = hankel(conv, hc, y);
            const double rhs = hankel(g, hp, y) * hankel(g, hp, y) / hp.c_alpha_hankel;
            CHECK(std::fabs(lhs - rhs) <= 1e-4);
        }
    }

    SUBCASE("convolution is symmetric and zero absorbs") {
        const GridFunction b = GridFunction::bump(1.5, 1.0);
        const GridFunction fg = convolve_bessel(g, b, alpha, angular, 256);
        const GridFunction gf = convolve_bessel(b, g, alpha, angular, 256);
        for (double x : {0.5, 1.5, 3.0}) CHECK(std::fabs(fg(x) - gf(x)) <= 1e-6);

        const GridFunction z = convolve_bessel(g, GridFunction::zero(), alpha, angular, 64);
        for (double x : {0.5, 2.0}) CHECK(z(x) == 0.0);
    }
}

TEST_CASE("transform values vanish at infinity for decaying families") {
    const AlphaParam alpha(0.5);
    for (const GridFunction& f :
         {GridFunction::gaussian(1.0), GridFunction::bump(2.0, 1.0), GridFunction::exp_decay(1.0)}) {
        const HankelParams hp = HankelParams::make(alpha, f.decay_radius() + 4.0);
        CHECK(std::fabs(hankel(f, hp, 24.0)) <= 1e-3);
    }
}

TEST_SUITE_END();
