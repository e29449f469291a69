#include "laghank/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace laghank {

namespace {

// Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal Jacobi
// matrix, weights are mu0 times the squared first eigenvector components.
QuadratureRule golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag_sq,
                            double mu0) {
    const int n = static_cast<int>(diag.size());
    Eigen::VectorXd d(n), sub(std::max(n - 1, 0));
    for (int i = 0; i < n; ++i) d(i) = diag[static_cast<std::size_t>(i)];
    for (int i = 1; i < n; ++i) sub(i - 1) = std::sqrt(offdiag_sq[static_cast<std::size_t>(i)]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(d, sub);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("golub_welsch: eigensolver failed to converge");

    QuadratureRule rule;
    rule.order = n;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
    }
    return rule;
}

} // namespace

namespace {

// L_n^alpha(x) and L_{n-1}^alpha(x) in long double
std::pair<long double, long double> laguerre_pair(int n, long double a, long double x) {
    long double lkm1 = 1.0L, lk = 1.0L + a - x;
    if (n == 0) return {1.0L, 0.0L};
    for (int k = 1; k < n; ++k) {
        const long double lkp1 = ((2.0L * k + a + 1.0L - x) * lk - (k + a) * lkm1) / (k + 1.0L);
        lkm1 = lk;
        lk = lkp1;
    }
    return {lk, lkm1};
}

} // namespace

QuadratureRule gauss_gen_laguerre(int order, AlphaParam alpha) {
    if (order < 1) throw std::invalid_argument("gauss_gen_laguerre: order must be >= 1");
    const double a = alpha.value();
    std::vector<double> diag(static_cast<std::size_t>(order)), off(static_cast<std::size_t>(order));
    for (int k = 0; k < order; ++k) {
        diag[static_cast<std::size_t>(k)] = 2.0 * k + a + 1.0;
        off[static_cast<std::size_t>(k)] = k * (k + a);
    }
    QuadratureRule rule = golub_welsch(diag, off, std::tgamma(a + 1.0));

    // Newton polish in extended precision; the eigenvector route loses
    // relative accuracy in the exponentially small extreme weights, which the
    // derivative-form weights recover.
    const long double la = a;
    const long double weight_scale =
        std::exp(static_cast<long double>(std::lgamma(order + a + 1.0)) -
                 static_cast<long double>(std::lgamma(order + 1.0))) /
        (static_cast<long double>(order + 1) * (order + 1));
    for (int i = 0; i < order; ++i) {
        long double x = rule.nodes[static_cast<std::size_t>(i)];
        for (int it = 0; it < 4; ++it) {
            const auto [ln, lnm1] = laguerre_pair(order, la, x);
            const long double deriv = (order * ln - (order + la) * lnm1) / x;
            const long double step = ln / deriv;
            x -= step;
            if (std::fabs(static_cast<double>(step)) < 1e-15 * std::fabs(static_cast<double>(x)))
                break;
        }
        const auto [lnp1, ln_at] = laguerre_pair(order + 1, la, x);
        (void)ln_at;
        rule.nodes[static_cast<std::size_t>(i)] = static_cast<double>(x);
        rule.weights[static_cast<std::size_t>(i)] =
            static_cast<double>(weight_scale * x / (lnp1 * lnp1));
    }

    rule.weight_kind = WeightKind::gen_laguerre;
    rule.alpha = a;
    rule.lo = 0.0;
    rule.hi = std::numeric_limits<double>::infinity();
    return rule;
}

QuadratureRule gauss_jacobi_sym(int order, AlphaParam alpha) {
    if (order < 1) throw std::invalid_argument("gauss_jacobi_sym: order must be >= 1");
    const double lam = alpha.value();
    if (lam <= -0.5) throw std::domain_error("gauss_jacobi_sym: requires alpha > -1/2");
    std::vector<double> diag(static_cast<std::size_t>(order), 0.0);
    std::vector<double> off(static_cast<std::size_t>(order), 0.0);
    for (int k = 1; k < order; ++k) {
        // monic Gegenbauer recurrence; k = 1 in the cancelled form (safe at lam = 0)
        off[static_cast<std::size_t>(k)] =
            (k == 1) ? 1.0 / (2.0 * (lam + 1.0))
                     : k * (k + 2.0 * lam - 1.0) / (4.0 * (k + lam) * (k + lam - 1.0));
    }
    const double mu0 = std::sqrt(std::numbers::pi) *
                       std::exp(std::lgamma(lam + 0.5) - std::lgamma(lam + 1.0));
    QuadratureRule rule = golub_welsch(diag, off, mu0);
    // enforce the exact symmetry of the measure
    for (int i = 0; i < order / 2; ++i) {
        const int m = order - 1 - i;
        const double u = 0.5 * (rule.nodes[static_cast<std::size_t>(m)] -
                                rule.nodes[static_cast<std::size_t>(i)]);
        rule.nodes[static_cast<std::size_t>(i)] = -u;
        rule.nodes[static_cast<std::size_t>(m)] = u;
        const double w = 0.5 * (rule.weights[static_cast<std::size_t>(i)] +
                                rule.weights[static_cast<std::size_t>(m)]);
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(m)] = w;
    }
    if (order % 2 == 1) rule.nodes[static_cast<std::size_t>(order / 2)] = 0.0;
    rule.weight_kind = WeightKind::jacobi_sym;
    rule.alpha = lam;
    rule.lo = -1.0;
    rule.hi = 1.0;
    return rule;
}

double angular_normalization(AlphaParam alpha) {
    const double a = alpha.value();
    if (a <= -0.5) throw std::domain_error("angular_normalization: requires alpha > -1/2");
    return std::exp(std::lgamma(a + 1.0) - std::lgamma(a + 0.5)) / std::sqrt(std::numbers::pi);
}

QuadratureRule gauss_legendre(int order) {
    static std::mutex mu;
    static std::map<int, QuadratureRule> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(order);
        if (it != cache.end()) return it->second;
    }
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    std::vector<double> diag(static_cast<std::size_t>(order), 0.0);
    std::vector<double> off(static_cast<std::size_t>(order), 0.0);
    for (int k = 1; k < order; ++k)
        off[static_cast<std::size_t>(k)] = k * k / (4.0 * k * k - 1.0);
    QuadratureRule rule = golub_welsch(diag, off, 2.0);
    rule.weight_kind = WeightKind::plain;
    rule.lo = -1.0;
    rule.hi = 1.0;
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(order, rule);
    return rule;
}

QuadratureRule panel_interval(double lo, double hi, int panels, int panel_order,
                              const std::vector<double>& breakpoints,
                              std::optional<double> oscillation_scale) {
    if (!(hi > lo)) throw std::invalid_argument("panel_interval: requires hi > lo");
    if (panels < 1) throw std::invalid_argument("panel_interval: panels must be >= 1");
    if (panel_order < 1) throw std::invalid_argument("panel_interval: panel_order must be >= 1");

    double width_cap = std::numeric_limits<double>::infinity();
    if (oscillation_scale)
        width_cap = std::numbers::pi / std::max(*oscillation_scale, 1.0);

    std::vector<double> edges{lo, hi};
    for (double b : breakpoints)
        if (b > lo && b < hi) edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const QuadratureRule base = gauss_legendre(panel_order);
    QuadratureRule rule;
    rule.weight_kind = WeightKind::plain;
    rule.lo = lo;
    rule.hi = hi;

    const double span = hi - lo;
    for (std::size_t seg = 0; seg + 1 < edges.size(); ++seg) {
        const double a = edges[seg], b = edges[seg + 1];
        // distribute the requested panel count proportionally, then apply the
        // half-oscillation cap
        int np = std::max(1, static_cast<int>(std::lround(panels * (b - a) / span)));
        if (std::isfinite(width_cap))
            np = std::max(np, static_cast<int>(std::ceil((b - a) / width_cap)));
        const double h = (b - a) / np;
        for (int p = 0; p < np; ++p) {
            const double c = a + (p + 0.5) * h;
            for (int i = 0; i < base.order; ++i) {
                rule.nodes.push_back(c + 0.5 * h * base.nodes[static_cast<std::size_t>(i)]);
                rule.weights.push_back(0.5 * h * base.weights[static_cast<std::size_t>(i)]);
            }
        }
    }
    rule.order = static_cast<int>(rule.nodes.size());
    return rule;
}

QuadratureRule panel_halfline(double x_max, int panels, int panel_order,
                              std::optional<double> oscillation_scale) {
    if (!(x_max > 0.0)) throw std::invalid_argument("panel_halfline: x_max must be > 0");
    return panel_interval(0.0, x_max, panels, panel_order, {}, oscillation_scale);
}

} // namespace laghank
