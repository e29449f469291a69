#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "laghank/spaces.hpp"
#include "laghank/special_functions.hpp"

using namespace laghank;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_SUITE_BEGIN("spaces");

TEST_CASE("laguerre-weighted function norms") {
    const GridFunction zero = GridFunction::zero();
    CHECK(norm_laguerre_fn(zero, NormSpec(2.0, AlphaParam(0.0), Setting::laguerre_fn)) == 0.0);

    // ||1||_{p,alpha} = (Gamma(alpha+1) (2/p)^{alpha+1})^{1/p}
    const GridFunction one = GridFunction::constant(1.0);
    for (double a : {0.0, 0.5, 1.0}) {
        for (double p : {1.0, 2.0, 4.0}) {
            const double want = std::pow(std::tgamma(a + 1.0) * std::pow(2.0 / p, a + 1.0), 1.0 / p);
            const double got = norm_laguerre_fn(one, NormSpec(p, AlphaParam(a), Setting::laguerre_fn));
            CHECK(got == doctest::Approx(want).epsilon(1e-10));
        }
    }
    CHECK(norm_laguerre_fn(one, NormSpec(2.0, AlphaParam(0.0), Setting::laguerre_fn)) ==
          doctest::Approx(1.0).epsilon(1e-12));

    // ||R_n||_{2,alpha} = sqrt(Gamma(alpha+1)/w(n))
    for (double a : {0.5, 1.0}) {
        for (int n : {1, 4, 9}) {
            const GridFunction rn = GridFunction::laguerre_r_fn(n, AlphaParam(a));
            const double want = std::sqrt(std::tgamma(a + 1.0) / weight_w(AlphaParam(a), n));
            const double got = norm_laguerre_fn(rn, NormSpec(2.0, AlphaParam(a), Setting::laguerre_fn));
            CHECK(got == doctest::Approx(want).epsilon(1e-9));
        }
    }

    // the sup norm of the damped polynomial is attained at zero
    const GridFunction r5 = GridFunction::laguerre_r_fn(5, AlphaParam(1.0));
    CHECK(norm_laguerre_fn(r5, NormSpec(kInf, AlphaParam(1.0), Setting::laguerre_fn)) ==
          doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("bessel-weighted function norms") {
    CHECK(norm_bessel_fn(GridFunction::zero(), NormSpec(2.0, AlphaParam(0.0), Setting::bessel_fn)) ==
          0.0);

    // gaussian(1), p = 2, alpha = 0: (int e^{-x^2} x dx)^{1/2} = sqrt(1/2)
    const GridFunction g = GridFunction::gaussian(1.0);
    CHECK(norm_bessel_fn(g, NormSpec(2.0, AlphaParam(0.0), Setting::bessel_fn)) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));

    // indicator mass: 1/(2 alpha + 2)
    const GridFunction ind = GridFunction::indicator(0.0, 1.0);
    CHECK(norm_bessel_fn(ind, NormSpec(1.0, AlphaParam(0.5), Setting::bessel_fn)) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    bool warn = false;
    norm_bessel_fn(GridFunction::constant(1.0), NormSpec(2.0, AlphaParam(0.0), Setting::bessel_fn),
                   &warn);
    CHECK(warn); // constant does not decay: truncated value flagged
}

TEST_CASE("sequence norms and pairing") {
    const AlphaParam a1(1.0);
    CHECK(norm_seq(SeqVec({1.0, 0.0, 0.0}, a1), NormSpec(1.0, a1, Setting::laguerre_seq)) == 1.0);
    CHECK(norm_seq(SeqVec({1.0, 1.0}, a1), NormSpec(1.0, a1, Setting::laguerre_seq)) ==
          doctest::Approx(3.0).epsilon(1e-15));
    const AlphaParam a0(0.0);
    std::vector<double> e5(6, 0.0);
    e5[5] = 1.0;
    CHECK(norm_seq(SeqVec(e5, a0), NormSpec(2.0, a0, Setting::laguerre_seq)) == 1.0);

    CHECK(pair_seq(SeqVec({1.0}, a1), SeqVec({1.0}, a1)) == 1.0);
    CHECK(pair_seq(SeqVec({0.0, 1.0}, a1), SeqVec({0.0, 1.0}, a1)) ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(pair_seq(SeqVec({1.0}, a1), SeqVec({1.0}, a0)), std::invalid_argument);

    // alpha = 0 coincides with the unweighted lp norm
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> v(12);
    for (double& x : v) x = d(gen);
    double plain = 0.0;
    for (double x : v) plain += std::pow(std::fabs(x), 1.5);
    plain = std::pow(plain, 1.0 / 1.5);
    CHECK(norm_seq(SeqVec(v, a0), NormSpec(1.5, a0, Setting::laguerre_seq)) ==
          doctest::Approx(plain).epsilon(1e-14));
}

TEST_CASE("holder, triangle, scaling and pairing symmetry on random data") {
    std::mt19937 gen(99);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    const AlphaParam alpha(0.7);
    auto rnd_seq = [&](int n) {
        std::vector<double> v((std::size_t)n);
        for (double& x : v) x = d(gen);
        return SeqVec(v, alpha);
    };

    for (int trial = 0; trial < 50; ++trial) {
        const SeqVec a = rnd_seq(10), b = rnd_seq(10);
        CHECK(pair_seq(a, b) == doctest::Approx(pair_seq(b, a)).epsilon(1e-15));
        for (double p : {1.0, 1.5, 2.0, 4.0}) {
            const NormSpec sp(p, alpha, Setting::laguerre_seq);
            const NormSpec sq(sp.conjugate(), alpha, Setting::laguerre_seq);
            CHECK(std::fabs(pair_seq(a, b)) <=
                  norm_seq(a, sp) * norm_seq(b, sq) * (1.0 + 1e-12) + 1e-15);

            SeqVec sum = a;
            for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += b.values[i];
            CHECK(norm_seq(sum, sp) <= norm_seq(a, sp) + norm_seq(b, sp) + 1e-12);
        }
    }

    // scaling homogeneity for the three norm families
    const GridFunction f = GridFunction::gaussian(1.3);
    const NormSpec lf(2.5, alpha, Setting::laguerre_fn);
    const NormSpec bf(2.5, alpha, Setting::bessel_fn);
    const double c = -3.7;
    CHECK(norm_laguerre_fn(f.scaled(c), lf) ==
          doctest::Approx(std::fabs(c) * norm_laguerre_fn(f, lf)).epsilon(1e-12));
    CHECK(norm_bessel_fn(f.scaled(c), bf) ==
          doctest::Approx(std::fabs(c) * norm_bessel_fn(f, bf)).epsilon(1e-12));
    const SeqVec s = rnd_seq(8);
    SeqVec cs = s;
    for (double& x : cs.values) x *= c;
    const NormSpec sn(3.0, alpha, Setting::laguerre_seq);
    CHECK(norm_seq(cs, sn) == doctest::Approx(std::fabs(c) * norm_seq(s, sn)).epsilon(1e-12));

    // triangle inequality for the function norms
    const GridFunction g = GridFunction::bump(2.0, 1.5);
    auto add_fn = [](const GridFunction& x, const GridFunction& y) {
        return GridFunction::subtract(x, y.scaled(-1.0));
    };
    CHECK(norm_laguerre_fn(add_fn(f, g), lf) <=
          norm_laguerre_fn(f, lf) + norm_laguerre_fn(g, lf) + 1e-10);
    CHECK(norm_bessel_fn(add_fn(f, g), bf) <=
          norm_bessel_fn(f, bf) + norm_bessel_fn(g, bf) + 1e-10);
}

TEST_CASE("conjugate exponents") {
    const NormSpec p1(1.0, AlphaParam(0.0), Setting::laguerre_seq);
    CHECK(std::isinf(p1.conjugate()));
    const NormSpec pinf(kInf, AlphaParam(0.0), Setting::laguerre_seq);
    CHECK(pinf.conjugate() == 1.0);
    const NormSpec p2(2.0, AlphaParam(0.0), Setting::laguerre_seq);
    CHECK(p2.conjugate() == 2.0);
    CHECK_THROWS_AS(NormSpec(0.5, AlphaParam(0.0), Setting::laguerre_fn), std::invalid_argument);
}

TEST_CASE("sampled functions and csv ingestion") {
    const GridFunction s = GridFunction::sampled({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0});
    CHECK(s(0.5) == doctest::Approx(0.5));
    CHECK(s(1.5) == doctest::Approx(0.5));
    CHECK(s(3.0) == 0.0); // zero extension
    CHECK(s.compact_support());

    CHECK_THROWS_AS(GridFunction::sampled({0.0, 0.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(GridFunction::sampled({-1.0, 1.0}, {1.0, 2.0}), std::invalid_argument);

    const std::string path = "spaces_test_sample.csv";
    {
        std::ofstream out(path);
        out << "x,value\n0,0\n0.5,2\n1.5,2\n2.5,0\n";
    }
    const GridFunction fromcsv = GridFunction::from_csv(path);
    CHECK(fromcsv(1.0) == doctest::Approx(2.0));
    CHECK(fromcsv(2.0) == doctest::Approx(1.0));
    std::remove(path.c_str());
    CHECK_THROWS_AS(GridFunction::from_csv("no_such_file.csv"), std::runtime_error);
}

TEST_SUITE_END();
