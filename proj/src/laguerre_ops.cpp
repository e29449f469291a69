#include "laghank/laguerre_ops.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "laghank/special_functions.hpp"

namespace laghank {

LaguerreTranslationParams LaguerreTranslationParams::make(AlphaParam alpha, int angular_order) {
    if (alpha.value() <= -0.5)
        throw std::domain_error("LaguerreTranslationParams: requires alpha > -1/2");
    LaguerreTranslationParams p{alpha, gauss_jacobi_sym(angular_order, alpha),
                                angular_normalization(alpha), {}};
    p.sin_theta.reserve(p.angular_rule.nodes.size());
    for (double u : p.angular_rule.nodes) p.sin_theta.push_back(std::sqrt(1.0 - u * u));
    return p;
}

namespace {

// one point of T_t f; the hot loop of the Laguerre side
double translate_point(const GridFunction& f, double t, double x,
                       const LaguerreTranslationParams& params) {
    if (x < 0.0) return 0.0;
    if (t == 0.0) return f(x);
    if (x == 0.0) return f(t);
    if (f.compact_support() &&
        std::sqrt(x) > std::sqrt(f.decay_radius()) + std::sqrt(t))
        return 0.0; // support geometry
    const double s = std::sqrt(x * t);
    const AlphaParam kernel_order(params.alpha.value() - 0.5);
    const auto& rule = params.angular_rule;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = rule.nodes[i];
        const double fv = f(x + t + 2.0 * s * u);
        if (fv == 0.0) continue;
        acc += rule.weights[i] * fv * std::exp(-s * u) *
               bessel_j_entire(kernel_order, s * params.sin_theta[i]);
    }
    return params.c_alpha * acc;
}

} // namespace

GridFunction translate_laguerre(const GridFunction& f, double t,
                                const LaguerreTranslationParams& params) {
    if (t < 0.0 || !std::isfinite(t)) throw std::invalid_argument("translate_laguerre: t must be >= 0");
    if (t == 0.0) {
        GridFunction base = f;
        return GridFunction::from_callable([base](double x) { return base(x); }, f.decay_radius(),
                                           f.compact_support(), f.breakpoints());
    }
    const double radius = std::pow(std::sqrt(f.decay_radius()) + std::sqrt(t), 2);
    auto shared = std::make_shared<LaguerreTranslationParams>(params);
    GridFunction base = f;
    auto eval = [base, t, shared](double x) { return translate_point(base, t, x, *shared); };
    return GridFunction::from_callable(eval, radius, f.compact_support());
}

GridFunction convolve_laguerre(const GridFunction& f, const GridFunction& g,
                               const LaguerreTranslationParams& params,
                               const QuadratureRule& rule) {
    if (rule.weight_kind != WeightKind::gen_laguerre)
        throw std::invalid_argument("convolve_laguerre: rule must be gauss_gen_laguerre");
    if (rule.alpha != params.alpha.value())
        throw std::invalid_argument("convolve_laguerre: rule alpha mismatch");
    auto shared = std::make_shared<LaguerreTranslationParams>(params);
    auto rule_ptr = std::make_shared<QuadratureRule>(rule);
    GridFunction ff = f, gg = g;
    const double radius = std::pow(std::sqrt(f.decay_radius()) + std::sqrt(g.decay_radius()), 2);
    const bool compact = f.compact_support() && g.compact_support();
    auto eval = [ff, gg, shared, rule_ptr](double t) {
        if (t < 0.0) return 0.0;
        double acc = 0.0;
        for (std::size_t i = 0; i < rule_ptr->nodes.size(); ++i) {
            const double x = rule_ptr->nodes[i];
            const double gv = gg(x);
            if (gv == 0.0) continue;
            acc += rule_ptr->weights[i] * translate_point(ff, t, x, *shared) * gv;
        }
        return acc;
    };
    return GridFunction::from_callable(eval, radius, compact);
}

CoeffVec analyze(const GridFunction& f, AlphaParam alpha, int coeff_count,
                 const QuadratureRule& rule) {
    if (coeff_count < 0) throw std::invalid_argument("analyze: coeff_count must be >= 0");
    if (rule.weight_kind != WeightKind::gen_laguerre || rule.alpha != alpha.value())
        throw std::invalid_argument("analyze: rule must be gauss_gen_laguerre with matching alpha");
    std::vector<double> out(static_cast<std::size_t>(coeff_count) + 1, 0.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        const double fv = f(x);
        if (fv == 0.0) continue;
        const std::vector<double> r = laguerre_r_all(coeff_count, alpha, x);
        const double wf = rule.weights[i] * fv;
        for (std::size_t n = 0; n < out.size(); ++n) out[n] += wf * r[n];
    }
    return CoeffVec(std::move(out), alpha);
}

GridFunction synthesize(const CoeffVec& a) {
    const AlphaParam alpha = a.alpha;
    const int n_max = static_cast<int>(a.size()) - 1;
    if (n_max < 0) return GridFunction::zero();
    auto coeffs = std::make_shared<std::vector<double>>(a.values);
    const std::vector<double> w = weight_w_all(alpha, n_max);
    auto scaled = std::make_shared<std::vector<double>>(a.size());
    const double inv_gamma = std::exp(-std::lgamma(alpha.value() + 1.0));
    for (std::size_t n = 0; n < a.size(); ++n) (*scaled)[n] = inv_gamma * (*coeffs)[n] * w[n];
    const double nu = 4.0 * n_max + 2.0 * alpha.value() + 2.0;
    auto eval = [scaled, alpha, n_max](double x) {
        const std::vector<double> r = laguerre_r_all(n_max, alpha, x);
        double acc = 0.0;
        for (std::size_t n = 0; n < scaled->size(); ++n) acc += (*scaled)[n] * r[n];
        return acc;
    };
    return GridFunction::from_callable(eval, 1.5 * nu + 40.0, false);
}

QuadratureRule detail::graded_panels(double a, int panels, int panel_order) {
    if (!(a > 0.0)) throw std::invalid_argument("graded_panels: a must be > 0");
    if (panels < 2) throw std::invalid_argument("graded_panels: panels must be >= 2");
    const QuadratureRule base = gauss_legendre(panel_order);
    constexpr double ratio = 0.65;
    std::vector<double> edges(static_cast<std::size_t>(panels) + 1);
    edges[0] = 0.0;
    for (int j = 1; j <= panels; ++j)
        edges[static_cast<std::size_t>(j)] = a * std::pow(ratio, panels - j);
    QuadratureRule rule;
    rule.weight_kind = WeightKind::plain;
    rule.lo = 0.0;
    rule.hi = a;
    for (int j = 0; j < panels; ++j) {
        const double lo = edges[static_cast<std::size_t>(j)], hi = edges[static_cast<std::size_t>(j) + 1];
        const double h = hi - lo, c = 0.5 * (lo + hi);
        for (int i = 0; i < base.order; ++i) {
            rule.nodes.push_back(c + 0.5 * h * base.nodes[static_cast<std::size_t>(i)]);
            rule.weights.push_back(0.5 * h * base.weights[static_cast<std::size_t>(i)]);
        }
    }
    rule.order = static_cast<int>(rule.nodes.size());
    return rule;
}

GridFunction average_v(const GridFunction& f, double a, double cutoff_radius,
                       const LaguerreTranslationParams& params) {
    if (!(a > 0.0)) throw std::invalid_argument("average_v: a must be > 0");
    if (!(cutoff_radius > 0.0)) throw std::invalid_argument("average_v: cutoff_radius must be > 0");
    const double alpha = params.alpha.value();
    const QuadratureRule t_rule = detail::graded_panels(a, 32, 8);
    auto t_nodes = std::make_shared<std::vector<double>>(t_rule.nodes);
    auto t_weights = std::make_shared<std::vector<double>>(t_rule.nodes.size());
    double norm_a = 0.0;
    for (std::size_t j = 0; j < t_rule.nodes.size(); ++j) {
        const double t = t_rule.nodes[j];
        (*t_weights)[j] = t_rule.weights[j] * std::exp(-0.5 * t) * std::pow(t, alpha);
        norm_a += (*t_weights)[j];
    }
    auto shared = std::make_shared<LaguerreTranslationParams>(params);
    GridFunction base = f;
    auto eval = [base, shared, t_nodes, t_weights, norm_a, cutoff_radius](double x) {
        if (x > cutoff_radius) return 0.0;
        double acc = 0.0;
        for (std::size_t j = 0; j < t_nodes->size(); ++j)
            acc += (*t_weights)[j] * translate_point(base, (*t_nodes)[j], x, *shared);
        return acc / norm_a;
    };
    return GridFunction::from_callable(eval, cutoff_radius, true, {cutoff_radius});
}

} // namespace laghank
