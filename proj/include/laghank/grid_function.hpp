#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "laghank/alpha.hpp"

namespace laghank {

/// Real-valued function on the half-line: either a closed-form family or a
/// sampled table with linear interpolation and zero extension. Carries a
/// declared decay horizon so integrals have reproducible truncation points,
/// and an exact-support flag for compactly supported members.
class GridFunction {
public:
    GridFunction() = default;

    double operator()(double x) const { return eval_ ? eval_(x) : 0.0; }

    /// Declared decay/support horizon.
    double decay_radius() const { return decay_radius_; }
    /// True when the function is exactly zero beyond decay_radius().
    bool compact_support() const { return compact_support_; }
    /// Integration panel boundaries (jumps / support edges), if any.
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    // ---- built-in families ------------------------------------------------
    static GridFunction zero();
    static GridFunction constant(double c);
    /// exp(-x^2 / (2 sigma^2))
    static GridFunction gaussian(double sigma);
    /// Smooth bump supported on [center-radius, center+radius]:
    /// exp(sharpness * (1 - 1/(1-u^2))), u = (x-center)/radius; value 1 at center.
    static GridFunction bump(double center, double radius, double sharpness = 1.0);
    /// exp(-rate * x)
    static GridFunction exp_decay(double rate);
    /// Normalized Laguerre polynomial R_n^alpha.
    static GridFunction laguerre_r_fn(int n, AlphaParam alpha);
    /// Entire Bessel kernel j_alpha(lambda x).
    static GridFunction bessel_j_fn(AlphaParam alpha, double lambda);
    /// Indicator of [a, b].
    static GridFunction indicator(double a, double b);
    /// Sampled values with linear interpolation, zero beyond the last node.
    /// xs must be strictly increasing and nonnegative.
    static GridFunction sampled(std::vector<double> xs, std::vector<double> values);
    /// Two-column CSV `x,value` (header optional, x strictly increasing, x >= 0).
    static GridFunction from_csv(const std::string& path);
    /// Wrap an arbitrary evaluator (library-internal plumbing for operator
    /// results).
    static GridFunction from_callable(std::function<double(double)> f, double decay_radius,
                                      bool compact_support = false,
                                      std::vector<double> breakpoints = {});

    // ---- wrappers ---------------------------------------------------------
    /// x -> f(x - s), zero for x < s.
    GridFunction shifted(double s) const;
    /// c * f
    GridFunction scaled(double c) const;
    /// Pointwise product.
    static GridFunction multiply(const GridFunction& a, const GridFunction& b);
    /// Pointwise difference a - b.
    static GridFunction subtract(const GridFunction& a, const GridFunction& b);

private:
    std::function<double(double)> eval_;
    double decay_radius_ = 0.0;
    bool compact_support_ = false;
    std::vector<double> breakpoints_;
};

} // namespace laghank
