#include "laghank/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "laghank/quadrature.hpp"
#include "laghank/special_functions.hpp"

namespace laghank {

namespace {
constexpr int kNormPanels = 96;
constexpr int kNormPanelOrder = 10;

double finish_power(double acc, double p) { return std::pow(acc, 1.0 / p); }

void check_finite(double v, double x) {
    if (!std::isfinite(v))
        throw std::runtime_error("norm integrand is not finite at x = " + std::to_string(x));
}

// Uniform panels plus a geometrically graded prefix on the first panel: the
// prefix integrates the x^alpha (or x^{2 alpha + 1}) measure factor accurately
// for non-integer exponents.
QuadratureRule norm_rule(double x_hi, const std::vector<double>& breakpoints) {
    const double h1 = x_hi / kNormPanels;
    QuadratureRule rule = panel_interval(h1, x_hi, kNormPanels - 1, kNormPanelOrder, breakpoints);
    const QuadratureRule base = gauss_legendre(8);
    double hi = h1;
    for (int j = 0; j < 24; ++j) {
        const double lo = (j == 23) ? 0.0 : hi * 0.4;
        const double h = hi - lo, c = 0.5 * (lo + hi);
        for (int i = 0; i < base.order; ++i) {
            rule.nodes.push_back(c + 0.5 * h * base.nodes[static_cast<std::size_t>(i)]);
            rule.weights.push_back(0.5 * h * base.weights[static_cast<std::size_t>(i)]);
        }
        hi = lo;
    }
    rule.lo = 0.0;
    rule.order = static_cast<int>(rule.nodes.size());
    return rule;
}
} // namespace

NormSpec::NormSpec(double p_, AlphaParam alpha_, Setting setting_)
    : p(p_), alpha(alpha_), setting(setting_) {
    if (!(p >= 1.0)) throw std::invalid_argument("NormSpec: p must be >= 1");
}

double NormSpec::conjugate() const {
    if (std::isinf(p)) return 1.0;
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    return p / (p - 1.0);
}

std::vector<double> detail::sup_grid(double x_hi) {
    std::vector<double> xs;
    xs.reserve(4096);
    xs.push_back(0.0);
    const int half = 2048;
    const double tiny = 1e-6 * x_hi;
    for (int i = 0; i < half; ++i)
        xs.push_back(tiny * std::pow(x_hi / tiny, static_cast<double>(i) / (half - 1)));
    for (int i = 1; i < half; ++i) xs.push_back(x_hi * (i + 1.0) / half);
    std::sort(xs.begin(), xs.end());
    return xs;
}

double detail::norm_from_samples(const std::vector<double>& nodes,
                                 const std::vector<double>& weights,
                                 const std::vector<double>& values, double p, double alpha,
                                 Setting setting) {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double x = nodes[i];
        const double v = std::fabs(values[i]);
        check_finite(v, x);
        double meas;
        if (setting == Setting::laguerre_fn)
            meas = std::exp(-0.5 * p * x) * std::pow(x, alpha);
        else
            meas = std::pow(x, 2.0 * alpha + 1.0);
        acc += weights[i] * std::pow(v, p) * meas;
    }
    return finish_power(acc, p);
}

double norm_laguerre_fn(const GridFunction& f, const NormSpec& spec) {
    if (spec.setting != Setting::laguerre_fn)
        throw std::invalid_argument("norm_laguerre_fn: spec.setting mismatch");
    const double a = spec.alpha.value();
    const double x_hi = std::max(f.decay_radius() + 10.0, 40.0);
    if (spec.is_sup()) {
        double m = 0.0;
        for (double x : detail::sup_grid(x_hi)) {
            const double v = std::fabs(f(x)) * std::exp(-0.5 * x);
            check_finite(v, x);
            m = std::max(m, v);
        }
        return m;
    }
    const QuadratureRule rule = norm_rule(x_hi, f.breakpoints());
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        const double v = std::fabs(f(x));
        check_finite(v, x);
        acc += rule.weights[i] * std::pow(v, spec.p) * std::exp(-0.5 * spec.p * x) *
               std::pow(x, a);
    }
    return finish_power(acc, spec.p);
}

double norm_bessel_fn(const GridFunction& f, const NormSpec& spec, bool* tail_warning) {
    if (spec.setting != Setting::bessel_fn)
        throw std::invalid_argument("norm_bessel_fn: spec.setting mismatch");
    const double a = spec.alpha.value();
    const double x_hi = f.decay_radius() + (f.compact_support() ? 0.0 : 10.0);
    if (tail_warning) {
        // not decaying at the horizon: the truncated integral is suspect
        const double edge = std::fabs(f(x_hi)) * std::pow(x_hi, (2.0 * a + 1.0) / spec.p);
        *tail_warning = !f.compact_support() && std::isfinite(spec.p) && edge > 1e-6;
    }
    if (spec.is_sup()) {
        double m = 0.0;
        for (double x : detail::sup_grid(x_hi)) {
            const double v = std::fabs(f(x));
            check_finite(v, x);
            m = std::max(m, v);
        }
        return m;
    }
    const QuadratureRule rule = norm_rule(x_hi, f.breakpoints());
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        const double v = std::fabs(f(x));
        check_finite(v, x);
        acc += rule.weights[i] * std::pow(v, spec.p) * std::pow(x, 2.0 * a + 1.0);
    }
    return finish_power(acc, spec.p);
}

double norm_fn(const GridFunction& f, const NormSpec& spec) {
    switch (spec.setting) {
        case Setting::laguerre_fn: return norm_laguerre_fn(f, spec);
        case Setting::bessel_fn: return norm_bessel_fn(f, spec);
        default: throw std::invalid_argument("norm_fn: sequence setting passed a function");
    }
}

double norm_seq(const SeqVec& a, const NormSpec& spec) {
    if (spec.setting != Setting::laguerre_seq)
        throw std::invalid_argument("norm_seq: spec.setting mismatch");
    if (spec.is_sup()) {
        double m = 0.0;
        for (double v : a.values) m = std::max(m, std::fabs(v));
        return m;
    }
    const std::vector<double> w = weight_w_all(a.alpha, std::max<int>(0, static_cast<int>(a.size()) - 1));
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        acc += std::pow(std::fabs(a.values[k]), spec.p) * w[k];
    return finish_power(acc, spec.p);
}

double pair_seq(const SeqVec& a, const SeqVec& b) {
    if (!(a.alpha == b.alpha)) throw std::invalid_argument("pair_seq: alpha mismatch");
    const std::size_t n = std::min(a.size(), b.size()); // the longer tail pairs with zeros
    if (n == 0) return 0.0;
    const std::vector<double> w = weight_w_all(a.alpha, static_cast<int>(n) - 1);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += a.values[k] * b.values[k] * w[k];
    return acc;
}

} // namespace laghank
