#pragma once

#include <string>
#include <vector>

#include "laghank/alpha.hpp"
#include "laghank/grid_function.hpp"
#include "laghank/quadrature.hpp"

namespace laghank {

/// Shared state of the Laguerre translation: the angular Jacobi rule (under
/// u = cos theta) and the probability normalization c_alpha. Requires
/// alpha > -1/2.
struct LaguerreTranslationParams {
    AlphaParam alpha{0.0};
    QuadratureRule angular_rule;
    double c_alpha = 0.0;
    std::vector<double> sin_theta; // sqrt(1 - u_i^2) cached per node

    static LaguerreTranslationParams make(AlphaParam alpha, int angular_order = 96);
};

/// Laguerre-Fourier coefficient vector f^(0..N). The analysis integral is
/// kept exactly as written (no normalization constant); the compensating
/// 1/Gamma(alpha+1) lives in synthesize(), so analyze(synthesize(a)) = a.
struct CoeffVec {
    std::vector<double> values;
    AlphaParam alpha{0.0};
    static constexpr const char* convention = "analysis-unnormalized";

    CoeffVec(std::vector<double> v, AlphaParam a) : values(std::move(v)), alpha(a) {}
    std::size_t size() const { return values.size(); }
};

/// T_t f(x) = c_alpha int_0^pi f(x + t + 2 sqrt(xt) cos v) e^{-sqrt(xt) cos v}
///            j_{alpha-1/2}(sqrt(xt) sin v) sin^{2 alpha} v dv.
/// Exact passthrough at t = 0; exact zero where the support geometry forces it
/// for compactly supported f.
GridFunction translate_laguerre(const GridFunction& f, double t,
                                const LaguerreTranslationParams& params);

/// (f * g)(t) = int_0^inf T_t f(x) g(x) e^{-x} x^alpha dx, with the given
/// generalized Gauss-Laguerre rule.
GridFunction convolve_laguerre(const GridFunction& f, const GridFunction& g,
                               const LaguerreTranslationParams& params,
                               const QuadratureRule& rule);

/// f^(n) = int_0^inf f(x) R_n^alpha(x) e^{-x} x^alpha dx, n = 0..N.
CoeffVec analyze(const GridFunction& f, AlphaParam alpha, int coeff_count,
                 const QuadratureRule& rule);

/// x -> (1/Gamma(alpha+1)) sum_m a(m) w(m) R_m^alpha(x).
GridFunction synthesize(const CoeffVec& a);

/// V_a f(x) = (1/A) int_0^a T_t f(x) e^{-t/2} t^alpha dt for x <= cutoff_radius,
/// 0 beyond; A is the same integral of the weight alone (same panel rule, so
/// V_a maps the constant 1 to 1 exactly on [0, cutoff_radius]).
GridFunction average_v(const GridFunction& f, double a, double cutoff_radius,
                       const LaguerreTranslationParams& params);

namespace detail {
/// Geometrically graded composite Gauss-Legendre rule on [0, a]; resolves
/// the t^alpha endpoint behavior of the averaging integrals.
QuadratureRule graded_panels(double a, int panels, int panel_order);
} // namespace detail

} // namespace laghank
