#pragma once

#include <optional>
#include <vector>

#include "laghank/alpha.hpp"
#include "laghank/grid_function.hpp"
#include "laghank/quadrature.hpp"

namespace laghank {

/// Hankel transform configuration. The transform constant is not pinned by
/// the classical definitions; here c_alpha_hankel = 2^{-alpha} / Gamma(alpha+1),
/// the unique choice under which the Gaussian e^{-x^2/2} is a fixed point and
/// the transform is an involution.
struct HankelParams {
    AlphaParam alpha{0.0};
    double c_alpha_hankel = 0.0;
    double x_max = 12.0;
    int panels = 64;
    int panel_order = 8;

    static HankelParams make(AlphaParam alpha, double x_max = 12.0, int panels = 64,
                             int panel_order = 8);
};

/// Probability angular rule for the Bessel translation: nodes u_i = cos(phi_i)
/// with weights summing to 1. alpha > -1/2 uses the symmetric Jacobi rule;
/// alpha = -1/2 degenerates to the two-point endpoint rule (u = +-1, weight 1/2).
struct BesselAngularRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    static BesselAngularRule make(AlphaParam alpha, int order = 96);
};

/// T_{t,alpha} f(s) = int_0^pi f(sqrt(t^2 + s^2 - 2 s t cos phi)) dmu(phi)
/// with dmu the probability measure c_alpha sin^{2 alpha} phi dphi.
GridFunction translate_bessel(const GridFunction& f, double t, AlphaParam alpha,
                              const BesselAngularRule& angular);

/// Single point of T_{t,alpha} f (hot path shared by the averaging and
/// convolution loops).
double translate_bessel_point(const GridFunction& f, double t, double s,
                              const BesselAngularRule& angular);

/// Refinement diagnostic attached to transform values: value under panel
/// doubling moved by more than the stability threshold.
struct RefinementCheck {
    double refined_value = 0.0;
    double relative_shift = 0.0;
    bool unstable = false;
};

/// H_alpha f(y) = c_alpha int_0^{x_max} f(x) j_alpha(x y) x^{2 alpha + 1} dx,
/// panel widths capped at half an oscillation of j_alpha(x y). When check is
/// given, the integral is recomputed with doubled panels and flagged if the
/// value moves by more than 1e-5 relative.
double hankel(const GridFunction& f, const HankelParams& params, double y,
              RefinementCheck* check = nullptr);

/// Inverse transform: c_alpha int_0^{y_max} fhat(y) j_alpha(x y) y^{2 alpha + 1} dy
/// (same kernel and measure in the integration variable).
double hankel_inverse(const GridFunction& fhat, const HankelParams& params, double x,
                      RefinementCheck* check = nullptr);

/// Sample H_alpha f on a uniform grid over [0, y_max] and wrap as a
/// GridFunction (linear interpolation).
GridFunction hankel_sampled(const GridFunction& f, const HankelParams& params, double y_max,
                            int samples = 1024);

/// (f*g)(x) = int_0^inf T_{x,alpha} f(t) g(t) t^{2 alpha + 1} dt, evaluated on
/// a uniform output grid over [0, f.radius + g.radius] and wrapped as a
/// sampled GridFunction.
GridFunction convolve_bessel(const GridFunction& f, const GridFunction& g, AlphaParam alpha,
                             const BesselAngularRule& angular, int output_samples = 128,
                             int t_panels = 48, int t_panel_order = 6);

/// Max residual over the y grid of H(T_t f)(y) - j_alpha(t y) H(f)(y), the two
/// sides computed through independent quadrature paths.
struct TranslationTransformReport {
    double t = 0.0;
    double max_residual = 0.0;
    std::vector<double> y_grid;
    std::vector<double> residuals;
};
TranslationTransformReport hankel_of_translation_check(const GridFunction& f, double t,
                                                       const std::vector<double>& y_grid,
                                                       const HankelParams& params,
                                                       const BesselAngularRule& angular);

} // namespace laghank
