#include "laghank/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace laghank {

namespace {

constexpr double kSeriesMax = 10.0;   // power series is cancellation-safe up to here
constexpr double kAsympMin = 30.0;    // large-argument expansion takes over here

// Power series of the entire Bessel function, Kahan-compensated.
double bessel_j_series(double alpha, double z) {
    const double q = 0.25 * z * z;
    double term = 1.0, sum = 1.0, comp = 0.0;
    for (int k = 0; k < 200; ++k) {
        term *= -q / ((k + 1.0) * (k + 1.0 + alpha));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

// Large-argument expansion of J_nu. Accurate to ~1e-13 (relative, away from
// zeros) for z >= 30 and the moderate orders used here.
double besselJ_asymptotic(double nu, double z) {
    const double mu = 4.0 * nu * nu;
    const double w8z = 8.0 * z;
    double term = 1.0, p = 1.0, q = 0.0;
    for (int k = 1; k <= 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = term * (mu - odd * odd) / (k * w8z);
        if (std::fabs(next) >= std::fabs(term)) break; // past optimal truncation
        term = next;
        switch (k % 4) {
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
            case 0: p += term; break;
        }
        if (std::fabs(term) < 1e-18) break;
    }
    const double omega = z - (0.5 * nu + 0.25) * std::numbers::pi;
    return std::sqrt(2.0 / (std::numbers::pi * z)) * (p * std::cos(omega) - q * std::sin(omega));
}

// J_nu(z) for z > kSeriesMax, nu > -1. The standard library handles nu >= 0;
// negative orders go through the reflection formula.
double besselJ_large(double nu, double z) {
    if (z >= kAsympMin) return besselJ_asymptotic(nu, z);
    if (nu >= 0.0) return std::cyl_bessel_j(nu, z);
    const double m = -nu;
    return std::cos(m * std::numbers::pi) * std::cyl_bessel_j(m, z) -
           std::sin(m * std::numbers::pi) * std::cyl_neumann(m, z);
}

} // namespace

double bessel_j_entire(AlphaParam alpha, double z) {
    if (!std::isfinite(z)) throw std::invalid_argument("bessel_j_entire: z must be finite");
    const double a = alpha.value();
    z = std::fabs(z); // even function
    if (z == 0.0) return 1.0;
    // exact elementary forms at half-integer orders used heavily by the
    // translation kernels
    if (a == -0.5) return std::cos(z);
    if (a == 0.5) return std::sin(z) / z;
    if (z <= kSeriesMax) return bessel_j_series(a, z);
    const double scale = std::exp(std::lgamma(a + 1.0) + a * std::log(2.0 / z));
    return scale * besselJ_large(a, z);
}

double bessel_j_derivative(AlphaParam alpha, double z) {
    if (!std::isfinite(z)) throw std::invalid_argument("bessel_j_derivative: z must be finite");
    const double a = alpha.value();
    return -z * bessel_j_entire(AlphaParam(a + 1.0), z) / (2.0 * (a + 1.0));
}

double laguerre_l(int n, AlphaParam alpha, double x) {
    if (n < 0) throw std::invalid_argument("laguerre_l: n must be >= 0");
    if (x < 0.0 || !std::isfinite(x)) throw std::invalid_argument("laguerre_l: x must be finite and >= 0");
    const double a = alpha.value();
    if (n == 0) return 1.0;
    double lkm1 = 1.0;
    double lk = 1.0 + a - x;
    for (int k = 1; k < n; ++k) {
        const double lkp1 = ((2.0 * k + a + 1.0 - x) * lk - (k + a) * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

double laguerre_r(int n, AlphaParam alpha, double x) {
    if (x == 0.0) return 1.0;
    return laguerre_l(n, alpha, x) / weight_w(alpha, n);
}

std::vector<double> laguerre_r_all(int n_max, AlphaParam alpha, double x) {
    if (n_max < 0) throw std::invalid_argument("laguerre_r_all: n_max must be >= 0");
    if (x < 0.0 || !std::isfinite(x)) throw std::invalid_argument("laguerre_r_all: x must be finite and >= 0");
    const double a = alpha.value();
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    double lkm1 = 1.0, lk = 1.0 + a - x, w = 1.0;
    out[0] = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        w *= (n + a) / n;
        out[static_cast<std::size_t>(n)] = lk / w;
        const double lkp1 = ((2.0 * n + a + 1.0 - x) * lk - (n + a) * lkm1) / (n + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    if (x == 0.0) std::fill(out.begin(), out.end(), 1.0);
    return out;
}

double weight_w(AlphaParam alpha, int k) {
    if (k < 0) throw std::invalid_argument("weight_w: k must be >= 0");
    const double a = alpha.value();
    double w = 1.0;
    for (int i = 1; i <= k; ++i) w *= (i + a) / i;
    return w;
}

std::vector<double> weight_w_all(AlphaParam alpha, int k_max) {
    if (k_max < 0) throw std::invalid_argument("weight_w_all: k_max must be >= 0");
    const double a = alpha.value();
    std::vector<double> out(static_cast<std::size_t>(k_max) + 1);
    out[0] = 1.0;
    for (int k = 1; k <= k_max; ++k)
        out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k) - 1] * (k + a) / k;
    return out;
}

double laguerre_r_exp_derivative(int j, AlphaParam alpha, double x) {
    return -laguerre_l(j, AlphaParam(alpha.value() + 1.0), x) * std::exp(-x) / weight_w(alpha, j);
}

EnvelopeParams make_envelope_params(int n, AlphaParam alpha, double calibration_constant) {
    if (n < 0) throw std::invalid_argument("make_envelope_params: n must be >= 0");
    return EnvelopeParams{n, 4.0 * n + 2.0 * alpha.value() + 2.0, calibration_constant};
}

namespace {
constexpr double kEnvelopeDecayRate = 0.25; // fixed rate of the exponential branch
} // namespace

double envelope_bound(AlphaParam alpha, double x, const EnvelopeParams& params) {
    if (params.calibration_constant <= 0.0)
        throw std::runtime_error("envelope_bound: calibration constant not set");
    const double a = alpha.value();
    const double nu = params.nu;
    const double n_eff = std::max(params.n, 1);
    double branch;
    if (x <= 1.0 / nu)
        branch = std::pow(x * nu, 0.5 * a);
    else if (x <= 0.5 * nu)
        branch = std::pow(x * nu, -0.25);
    else if (x <= 1.5 * nu)
        branch = std::pow(nu * (std::cbrt(nu) + std::fabs(x - nu)), -0.25);
    else
        branch = std::exp(-kEnvelopeDecayRate * x);
    return params.calibration_constant * std::pow(n_eff, -0.5 * a) * branch;
}

bool envelope_check(int n, AlphaParam alpha, double x, const EnvelopeParams& params) {
    if (x < 0.0) throw std::invalid_argument("envelope_check: x must be >= 0");
    if (n != params.n) throw std::invalid_argument("envelope_check: n does not match params");
    const double lhs = std::fabs(laguerre_r(n, alpha, x) * std::exp(-0.5 * x) *
                                 std::pow(x, 0.5 * alpha.value()));
    return lhs <= envelope_bound(alpha, x, params);
}

double calibrate_envelope_constant(AlphaParam alpha, int n_max) {
    if (n_max < 1) throw std::invalid_argument("calibrate_envelope_constant: n_max must be >= 1");
    const double a = alpha.value();
    double worst = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const EnvelopeParams raw = make_envelope_params(n, alpha, 1.0);
        const double nu = raw.nu;
        const double x_hi = 4.0 * nu;
        const int pts = 1200;
        for (int i = 1; i <= pts; ++i) {
            // geometric grid resolves the 1/nu-scale first branch
            const double x = 1e-4 * std::pow(x_hi / 1e-4, static_cast<double>(i) / pts);
            const double lhs = std::fabs(laguerre_r(n, alpha, x) * std::exp(-0.5 * x) *
                                         std::pow(x, 0.5 * a));
            const double bound_unit = envelope_bound(alpha, x, raw);
            if (bound_unit > 0.0) worst = std::max(worst, lhs / bound_unit);
        }
    }
    return 1.1 * worst;
}

} // namespace laghank
