#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laghank/alpha.hpp"

namespace laghank {

enum class WeightKind {
    gen_laguerre,  // exp(-x) x^alpha on (0, inf)
    jacobi_sym,    // (1-u^2)^(alpha-1/2) on (-1, 1)
    plain          // 1 on [a, b]
};

/// Immutable node/weight table. Gauss rules are exact for polynomials of
/// degree <= 2*order - 1 against their weight function; panel rules are
/// composite Gauss-Legendre.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    WeightKind weight_kind = WeightKind::plain;
    double alpha = 0.0;       // parameter of the weighted kinds
    double lo = 0.0, hi = 0.0;
    int order = 0;            // node count

    /// Sum of w_i * f(x_i).
    template <class F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

/// Gauss rule for integral_0^inf g(x) exp(-x) x^alpha dx (Golub-Welsch on the
/// symmetric Jacobi matrix with a_k = 2k + alpha + 1, b_k = k (k + alpha)).
QuadratureRule gauss_gen_laguerre(int order, AlphaParam alpha);

/// Gauss rule for integral_{-1}^{1} g(u) (1-u^2)^{alpha-1/2} du. Requires
/// alpha > -1/2.
QuadratureRule gauss_jacobi_sym(int order, AlphaParam alpha);

/// Normalization making c_alpha * (1-u^2)^{alpha-1/2} du a probability
/// measure: Gamma(alpha+1) / (Gamma(alpha+1/2) Gamma(1/2)).
double angular_normalization(AlphaParam alpha);

/// Composite Gauss-Legendre rule on [0, x_max]. When oscillation_scale = y is
/// given, panel widths are capped at pi / max(y, 1) so a panel never spans
/// more than half an oscillation of j_alpha(x y).
QuadratureRule panel_halfline(double x_max, int panels, int panel_order,
                              std::optional<double> oscillation_scale = std::nullopt);

/// Composite Gauss-Legendre rule on [lo, hi]; interior breakpoints become
/// panel boundaries (used to integrate across jumps of indicator-type
/// integrands exactly).
QuadratureRule panel_interval(double lo, double hi, int panels, int panel_order,
                              const std::vector<double>& breakpoints = {},
                              std::optional<double> oscillation_scale = std::nullopt);

/// Gauss-Legendre rule on [-1, 1] (building block of the panel rules).
QuadratureRule gauss_legendre(int order);

} // namespace laghank
