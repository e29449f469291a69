#include "laghank/bessel_ops.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "laghank/special_functions.hpp"

namespace laghank {

HankelParams HankelParams::make(AlphaParam alpha, double x_max, int panels, int panel_order) {
    if (alpha.value() < -0.5) throw std::domain_error("HankelParams: requires alpha >= -1/2");
    if (!(x_max > 0.0)) throw std::invalid_argument("HankelParams: x_max must be > 0");
    HankelParams p;
    p.alpha = alpha;
    p.c_alpha_hankel = std::exp(-alpha.value() * std::log(2.0) - std::lgamma(alpha.value() + 1.0));
    p.x_max = x_max;
    p.panels = panels;
    p.panel_order = panel_order;
    return p;
}

BesselAngularRule BesselAngularRule::make(AlphaParam alpha, int order) {
    const double a = alpha.value();
    if (a < -0.5) throw std::domain_error("BesselAngularRule: requires alpha >= -1/2");
    BesselAngularRule out;
    if (a == -0.5) {
        // the angular measure degenerates to point masses at the endpoints
        out.nodes = {-1.0, 1.0};
        out.weights = {0.5, 0.5};
        return out;
    }
    const QuadratureRule rule = gauss_jacobi_sym(order, alpha);
    const double c = angular_normalization(alpha);
    out.nodes = rule.nodes;
    out.weights.reserve(rule.weights.size());
    for (double w : rule.weights) out.weights.push_back(c * w);
    return out;
}

double translate_bessel_point(const GridFunction& f, double t, double s,
                              const BesselAngularRule& angular) {
    if (t == 0.0) return f(s);
    if (s < 0.0) return 0.0;
    if (f.compact_support() && s > f.decay_radius() + t) return 0.0;
    const double q = t * t + s * s;
    const double r = 2.0 * s * t;
    double acc = 0.0;
    for (std::size_t i = 0; i < angular.nodes.size(); ++i) {
        const double arg2 = q - r * angular.nodes[i];
        acc += angular.weights[i] * f(std::sqrt(std::max(arg2, 0.0)));
    }
    return acc;
}

GridFunction translate_bessel(const GridFunction& f, double t, AlphaParam alpha,
                              const BesselAngularRule& angular) {
    if (t < 0.0 || !std::isfinite(t)) throw std::invalid_argument("translate_bessel: t must be >= 0");
    (void)alpha; // order is baked into the angular rule; kept for call-site clarity
    if (t == 0.0) {
        GridFunction base = f;
        return GridFunction::from_callable([base](double s) { return base(s); }, f.decay_radius(),
                                           f.compact_support(), f.breakpoints());
    }
    auto rule = std::make_shared<BesselAngularRule>(angular);
    GridFunction base = f;
    auto eval = [base, t, rule](double s) { return translate_bessel_point(base, t, s, *rule); };
    return GridFunction::from_callable(eval, f.decay_radius() + t, f.compact_support());
}

namespace {

double hankel_integral(const GridFunction& f, const HankelParams& params, double y, double x_max,
                       int panels) {
    const QuadratureRule rule =
        panel_interval(0.0, x_max, panels, params.panel_order, f.breakpoints(),
                       y > 0.0 ? std::optional<double>(y) : std::nullopt);
    const double a = params.alpha.value();
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        const double fv = f(x);
        if (fv == 0.0) continue;
        acc += rule.weights[i] * fv * bessel_j_entire(params.alpha, x * y) *
               std::pow(x, 2.0 * a + 1.0);
    }
    return params.c_alpha_hankel * acc;
}

double transform_with_check(const GridFunction& f, const HankelParams& params, double y,
                            RefinementCheck* check) {
    const double x_max = std::max(params.x_max, f.compact_support() ? f.decay_radius() : params.x_max);
    const double value = hankel_integral(f, params, y, x_max, params.panels);
    if (check) {
        const double refined = hankel_integral(f, params, y, x_max, 2 * params.panels);
        const double scale = std::max(std::fabs(refined), 1e-12);
        check->refined_value = refined;
        check->relative_shift = std::fabs(refined - value) / scale;
        check->unstable = check->relative_shift > 1e-5;
    }
    return value;
}

} // namespace

double hankel(const GridFunction& f, const HankelParams& params, double y,
              RefinementCheck* check) {
    if (y < 0.0 || !std::isfinite(y)) throw std::invalid_argument("hankel: y must be >= 0");
    return transform_with_check(f, params, y, check);
}

double hankel_inverse(const GridFunction& fhat, const HankelParams& params, double x,
                      RefinementCheck* check) {
    if (x < 0.0 || !std::isfinite(x)) throw std::invalid_argument("hankel_inverse: x must be >= 0");
    // same kernel and measure, integrating over the transform variable
    return transform_with_check(fhat, params, x, check);
}

GridFunction hankel_sampled(const GridFunction& f, const HankelParams& params, double y_max,
                            int samples) {
    if (!(y_max > 0.0)) throw std::invalid_argument("hankel_sampled: y_max must be > 0");
    if (samples < 16) throw std::invalid_argument("hankel_sampled: samples must be >= 16");
    std::vector<double> ys(static_cast<std::size_t>(samples)), vs(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        ys[static_cast<std::size_t>(i)] = y_max * i / (samples - 1.0);
        vs[static_cast<std::size_t>(i)] = hankel(f, params, ys[static_cast<std::size_t>(i)]);
    }
    return GridFunction::sampled(std::move(ys), std::move(vs));
}

GridFunction convolve_bessel(const GridFunction& f, const GridFunction& g, AlphaParam alpha,
                             const BesselAngularRule& angular, int output_samples, int t_panels,
                             int t_panel_order) {
    if (output_samples < 16)
        throw std::invalid_argument("convolve_bessel: output_samples must be >= 16");
    const double a = alpha.value();
    const double x_hi = f.decay_radius() + g.decay_radius();
    const double t_hi = g.decay_radius() + (g.compact_support() ? 0.0 : 5.0);
    const QuadratureRule t_rule =
        panel_interval(0.0, t_hi, t_panels, t_panel_order, g.breakpoints());
    std::vector<double> xs(static_cast<std::size_t>(output_samples));
    std::vector<double> vs(static_cast<std::size_t>(output_samples));
    for (int i = 0; i < output_samples; ++i) {
        const double x = x_hi * i / (output_samples - 1.0);
        double acc = 0.0;
        for (std::size_t j = 0; j < t_rule.nodes.size(); ++j) {
            const double t = t_rule.nodes[j];
            const double gv = g(t);
            if (gv == 0.0) continue;
            acc += t_rule.weights[j] * translate_bessel_point(f, x, t, angular) * gv *
                   std::pow(t, 2.0 * a + 1.0);
        }
        xs[static_cast<std::size_t>(i)] = x;
        vs[static_cast<std::size_t>(i)] = acc;
    }
    return GridFunction::sampled(std::move(xs), std::move(vs));
}

TranslationTransformReport hankel_of_translation_check(const GridFunction& f, double t,
                                                       const std::vector<double>& y_grid,
                                                       const HankelParams& params,
                                                       const BesselAngularRule& angular) {
    TranslationTransformReport rep;
    rep.t = t;
    rep.y_grid = y_grid;
    const GridFunction tf = translate_bessel(f, t, params.alpha, angular);
    HankelParams tp = params;
    tp.x_max = params.x_max + t; // translated support widens by t
    for (double y : y_grid) {
        const double lhs = hankel(tf, tp, y);
        const double rhs = bessel_j_entire(params.alpha, t * y) * hankel(f, params, y);
        rep.residuals.push_back(std::fabs(lhs - rhs));
        rep.max_residual = std::max(rep.max_residual, rep.residuals.back());
    }
    return rep;
}

} // namespace laghank
