#pragma once

#include <limits>
#include <vector>

#include "laghank/alpha.hpp"
#include "laghank/grid_function.hpp"

namespace laghank {

enum class Setting { laguerre_fn, laguerre_seq, bessel_fn };

/// Which norm family: p, order parameter, and the measure it runs against.
struct NormSpec {
    double p = 2.0;
    AlphaParam alpha{0.0};
    Setting setting = Setting::laguerre_fn;

    NormSpec(double p_, AlphaParam alpha_, Setting setting_);

    bool is_sup() const { return std::isinf(p); }
    /// Conjugate exponent p' = p / (p - 1), with the usual 1 <-> inf pairing.
    double conjugate() const;
};

/// Finite real sequence a(0..K) tagged with alpha.
struct SeqVec {
    std::vector<double> values;
    AlphaParam alpha{0.0};

    SeqVec(std::vector<double> v, AlphaParam a) : values(std::move(v)), alpha(a) {}
    std::size_t size() const { return values.size(); }
    double operator()(std::size_t k) const { return k < values.size() ? values[k] : 0.0; }
};

/// (integral_0^inf |f(x) e^{-x/2}|^p x^alpha dx)^{1/p}; sup of |f e^{-x/2}|
/// over the evaluation grid when p = inf.
double norm_laguerre_fn(const GridFunction& f, const NormSpec& spec);

/// (integral_0^inf |f|^p x^{2 alpha + 1} dx)^{1/p}; plain sup when p = inf.
/// When tail_warning is given it is set when the integrand has not decayed
/// by the declared horizon (truncated value is then a lower bound).
double norm_bessel_fn(const GridFunction& f, const NormSpec& spec, bool* tail_warning = nullptr);

/// (sum |a(k)|^p w(k))^{1/p}; plain sup when p = inf.
double norm_seq(const SeqVec& a, const NormSpec& spec);

/// Dispatch on spec.setting (function settings only).
double norm_fn(const GridFunction& f, const NormSpec& spec);

/// sum a(k) b(k) w(k); the shorter sequence is zero-padded. Alphas must match.
double pair_seq(const SeqVec& a, const SeqVec& b);

namespace detail {
/// Weighted p-th power integral helpers shared by the compactness module:
/// integrate |values|^p against the setting's measure over given nodes.
double norm_from_samples(const std::vector<double>& nodes, const std::vector<double>& weights,
                         const std::vector<double>& values, double p, double alpha,
                         Setting setting);
/// The sup-norm evaluation grid on [0, x_hi]: 4096 points, half geometric,
/// half linear.
std::vector<double> sup_grid(double x_hi);
} // namespace detail

} // namespace laghank
