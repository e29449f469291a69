#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "laghank/laguerre_ops.hpp"
#include "laghank/laguerre_seq.hpp"
#include "laghank/spaces.hpp"
#include "laghank/special_functions.hpp"

using namespace laghank;

TEST_SUITE_BEGIN("laguerre_seq");

TEST_CASE("single coefficients against the laplace-transform closed form") {
    // gamma(0,0,k) = 2^{-(alpha+k+1)}
    for (double a : {0.0, 1.0}) {
        for (int k = 0; k <= 20; ++k) {
            const double want = std::pow(2.0, -(a + k + 1.0));
            const double got = gamma_coeff(0, 0, k, AlphaParam(a));
            CHECK(std::fabs(got - want) <= 1e-10 * want);
        }
    }

    SUBCASE("permutation symmetry") {
        const AlphaParam a(0.5);
        const double v1 = gamma_coeff(2, 3, 5, a);
        const double v2 = gamma_coeff(5, 2, 3, a);
        const double v3 = gamma_coeff(3, 5, 2, a);
        CHECK(std::fabs(v1 - v2) <= 1e-14);
        CHECK(std::fabs(v1 - v3) <= 1e-14);
    }

    SUBCASE("positivity at a spot index") {
        CHECK(gamma_coeff(1, 1, 1, AlphaParam(1.0)) > 0.0);
    }

    SUBCASE("raw value differs by Gamma(alpha+1)") {
        const AlphaParam a(1.7);
        const double ratio = gamma_coeff_raw(1, 2, 3, a) / gamma_coeff(1, 2, 3, a);
        CHECK(ratio == doctest::Approx(std::tgamma(2.7)).epsilon(1e-12));
    }

    SUBCASE("domain guard at the positivity floor") {
        CHECK_THROWS_AS(gamma_coeff(1, 1, 1, AlphaParam(gamma_alpha_floor() - 0.01)),
                        std::domain_error);
    }
}

TEST_CASE("table build, positivity and the sum rule") {
    for (double a : {0.0, 0.5, 1.0}) {
        const GammaTable table = build_gamma_table(24, AlphaParam(a));
        CHECK(table.valid());

        double min_entry = 0.0;
        for (int n = 0; n <= 24; ++n)
            for (int m = 0; m <= 24; ++m)
                for (int k = 0; k <= 24; ++k) min_entry = std::min(min_entry, table(n, m, k));
        CHECK(min_entry >= -1e-12);
    }

    SUBCASE("geometric series identity at n = m = 0") {
        const GammaTable table = build_gamma_table(40, AlphaParam(1.0));
        const std::vector<double> w = weight_w_all(AlphaParam(1.0), 40);
        double sum = 0.0;
        for (int k = 0; k <= 40; ++k) {
            CHECK(table(0, 0, k) == doctest::Approx(std::pow(2.0, -(k + 2.0))).epsilon(1e-10));
            sum += table(0, 0, k) * w[(std::size_t)k];
        }
        // sum (k+1) 2^{-(k+2)} = 1, truncated at K = 40
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }

    SUBCASE("sum rule with the empirical tail allowance") {
        const GammaTable table = build_gamma_table(48, AlphaParam(0.5));
        const std::vector<double> w = weight_w_all(AlphaParam(0.5), 48);
        for (int n = 0; n <= 8; ++n)
            for (int m = 0; m <= 8; ++m) {
                std::vector<double> terms;
                double s = 0.0;
                for (int k = 0; k <= 48; ++k) {
                    terms.push_back(table(n, m, k) * w[(std::size_t)k]);
                    s += terms.back();
                }
                CHECK(std::fabs(s - 1.0) <= 1e-6 + geometric_tail_bound(terms));
            }
    }

    SUBCASE("partial sums increase monotonically (nonnegative terms)") {
        const GammaTable table = build_gamma_table(16, AlphaParam(1.0));
        const std::vector<double> w = weight_w_all(AlphaParam(1.0), 16);
        double prev = -1.0;
        double s = 0.0;
        for (int k = 0; k <= 16; ++k) {
            s += table(2, 3, k) * w[(std::size_t)k];
            CHECK(s >= prev - 1e-12);
            prev = s;
        }
    }

    SUBCASE("continuity near alpha = 0") {
        const GammaTable t0 = build_gamma_table(8, AlphaParam(0.0));
        const GammaTable t1 = build_gamma_table(8, AlphaParam(1e-12));
        double worst = 0.0;
        for (int n = 0; n <= 8; ++n)
            for (int m = 0; m <= 8; ++m)
                for (int k = 0; k <= 8; ++k)
                    worst = std::max(worst, std::fabs(t0(n, m, k) - t1(n, m, k)));
        CHECK(worst <= 1e-9);
    }

    CHECK_THROWS_AS(build_gamma_table(0, AlphaParam(1.0)), std::invalid_argument);
    CHECK_THROWS_AS(build_gamma_table(128, AlphaParam(1.0)), std::invalid_argument);
}

TEST_CASE("sequence translation") {
    const AlphaParam alpha(1.0);
    const GammaTable table = build_gamma_table(20, alpha);

    SUBCASE("unit sequence picks out a gamma slice") {
        const SeqVec e0({1.0}, alpha);
        const SeqVec t = translate_seq(e0, 3, table);
        for (int n = 0; n <= 20; ++n)
            CHECK(t((std::size_t)n) == doctest::Approx(table(n, 0, 3)).epsilon(1e-14));
    }

    SUBCASE("symmetry in (n, k)") {
        std::mt19937 gen(17);
        std::uniform_real_distribution<double> d(-1.0, 1.0);
        std::vector<double> v(10);
        for (double& x : v) x = d(gen);
        const SeqVec a(v, alpha);
        for (int k : {0, 2, 6})
            for (int n : {1, 4, 9}) {
                const double lhs = translate_seq(a, k, table)((std::size_t)n);
                const double rhs = translate_seq(a, n, table)((std::size_t)k);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
            }
    }

    SUBCASE("norm bound with slack") {
        std::mt19937 gen(23);
        std::uniform_real_distribution<double> d(-1.0, 1.0);
        const double inf = std::numeric_limits<double>::infinity();
        for (double p : {1.0, 2.0, inf}) {
            const NormSpec spec(p, alpha, Setting::laguerre_seq);
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<double> v(10);
                for (double& x : v) x = d(gen);
                const SeqVec a(v, alpha);
                for (int k : {0, 3, 11})
                    CHECK(norm_seq(translate_seq(a, k, table), spec) <=
                          norm_seq(a, spec) * (1.0 + 1e-9) + 1e-12);
            }
        }
    }

    SUBCASE("index guards") {
        const SeqVec a(std::vector<double>(25, 1.0), alpha);
        CHECK_THROWS_AS(translate_seq(a, 0, table), std::invalid_argument);
        const SeqVec b({1.0}, alpha);
        CHECK_THROWS_AS(translate_seq(b, 21, table), std::invalid_argument);
    }
}

TEST_CASE("sequence convolution") {
    const AlphaParam alpha(0.5);
    const GammaTable table = build_gamma_table(20, alpha);

    SUBCASE("unit sequences reproduce the closed form") {
        const SeqVec e0({1.0}, alpha);
        const SeqVec c = convolve_seq(e0, e0, table);
        for (int k = 0; k <= 20; ++k)
            CHECK(c((std::size_t)k) ==
                  doctest::Approx(std::pow(2.0, -(0.5 + k + 1.0))).epsilon(1e-12));
    }

    std::mt19937 gen(29);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    auto rnd = [&](int n) {
        std::vector<double> v((std::size_t)n);
        for (double& x : v) x = d(gen);
        return SeqVec(v, alpha);
    };

    SUBCASE("commutativity") {
        const SeqVec a = rnd(9), b = rnd(9);
        const SeqVec ab = convolve_seq(a, b, table);
        const SeqVec ba = convolve_seq(b, a, table);
        for (std::size_t k = 0; k < ab.values.size(); ++k)
            CHECK(ab.values[k] == doctest::Approx(ba.values[k]).epsilon(1e-12));
    }

    SUBCASE("agrees exactly with the pairing identity") {
        const SeqVec a = rnd(9), b = rnd(9);
        const SeqVec ab = convolve_seq(a, b, table);
        for (int k = 0; k <= 20; ++k)
            CHECK(ab((std::size_t)k) == pair_seq(b, translate_seq(a, k, table)));
    }

    SUBCASE("young inequality on random pairs") {
        const double inf = std::numeric_limits<double>::infinity();
        const double triples[3][3] = {{1, 1, 1}, {1, 2, 2}, {2, 2, inf}};
        for (const auto& tr : triples) {
            const NormSpec sp(tr[0], alpha, Setting::laguerre_seq);
            const NormSpec sq(tr[1], alpha, Setting::laguerre_seq);
            const NormSpec sr(tr[2], alpha, Setting::laguerre_seq);
            for (int trial = 0; trial < 40; ++trial) {
                const SeqVec a = rnd(10), b = rnd(10);
                const double lhs = norm_seq(convolve_seq(a, b, table), sr);
                const double rhs = norm_seq(a, sp) * norm_seq(b, sq);
                CHECK(lhs <= rhs * (1.0 + 1e-9) + 1e-12);
            }
        }
    }
}

TEST_CASE("coefficient-transform bridge is measured under both weights") {
    const AlphaParam alpha(1.0);
    const GammaTable table = build_gamma_table(12, alpha);
    const QuadratureRule rule = gauss_gen_laguerre(96, alpha);

    SUBCASE("zero function gives zero residuals under both conventions") {
        const BridgeTnkReport rep = bridge_check_tnk(GridFunction::zero(), 2, table, rule);
        CHECK(rep.residual_weight_2x == 0.0);
        CHECK(rep.residual_weight_3x2 == 0.0);
    }

    SUBCASE("the e^{-2x} convention is the consistent one") {
        for (int n : {0, 1, 4}) {
            const GridFunction f = GridFunction::laguerre_r_fn(1, alpha);
            const BridgeTnkReport rep = bridge_check_tnk(f, n, table, rule);
            CHECK(rep.residual_weight_2x <= 1e-9);
            CHECK(rep.residual_weight_3x2 > 100.0 * std::max(rep.residual_weight_2x, 1e-12));
        }
    }
}

TEST_CASE("csv export and cache round trip") {
    const AlphaParam alpha(0.75);
    const GammaTable table = build_gamma_table(6, alpha);
    const std::string path = "gamma_test_export.csv";
    table.save_csv(path);
    const GammaTable loaded = GammaTable::load_csv(path);
    CHECK(loaded.k_max() == 6);
    CHECK(loaded.alpha().value() == doctest::Approx(0.75));
    double worst = 0.0;
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m)
            for (int k = 0; k <= 6; ++k)
                worst = std::max(worst, std::fabs(loaded(n, m, k) - table(n, m, k)));
    CHECK(worst == 0.0);
    std::remove(path.c_str());

    const GammaTable c1 = GammaTable::load_or_build(5, alpha, "gamma_cache_test");
    const GammaTable c2 = GammaTable::load_or_build(5, alpha, "gamma_cache_test");
    CHECK(c1(1, 2, 3) == c2(1, 2, 3));
    std::remove("gamma_cache_test/gamma_alpha0.75_K5.csv");
    std::remove("gamma_cache_test");
}

TEST_SUITE_END();
