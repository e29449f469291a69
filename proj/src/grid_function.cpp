#include "laghank/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "laghank/special_functions.hpp"

namespace laghank {

GridFunction GridFunction::from_callable(std::function<double(double)> f, double decay_radius,
                                         bool compact_support, std::vector<double> breakpoints) {
    if (!(decay_radius > 0.0) || !std::isfinite(decay_radius))
        throw std::invalid_argument("GridFunction: decay_radius must be finite and > 0");
    GridFunction g;
    g.eval_ = std::move(f);
    g.decay_radius_ = decay_radius;
    g.compact_support_ = compact_support;
    g.breakpoints_ = std::move(breakpoints);
    return g;
}

GridFunction GridFunction::zero() {
    return from_callable([](double) { return 0.0; }, 1.0, true);
}

GridFunction GridFunction::constant(double c) {
    // no intrinsic decay; the horizon serves the exponentially weighted norms
    return from_callable([c](double) { return c; }, 80.0, false);
}

GridFunction GridFunction::gaussian(double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian: sigma must be > 0");
    const double inv = 1.0 / (2.0 * sigma * sigma);
    return from_callable([inv](double x) { return std::exp(-x * x * inv); }, 9.0 * sigma, false);
}

GridFunction GridFunction::bump(double center, double radius, double sharpness) {
    if (!(radius > 0.0)) throw std::invalid_argument("bump: radius must be > 0");
    if (!(sharpness > 0.0)) throw std::invalid_argument("bump: sharpness must be > 0");
    const double lo = center - radius, hi = center + radius;
    auto f = [center, radius, sharpness](double x) {
        const double u = (x - center) / radius;
        const double d = 1.0 - u * u;
        if (d <= 0.0) return 0.0;
        return std::exp(sharpness * (1.0 - 1.0 / d));
    };
    return from_callable(f, hi, true, {std::max(lo, 0.0), hi});
}

GridFunction GridFunction::exp_decay(double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("exp_decay: rate must be > 0");
    return from_callable([rate](double x) { return std::exp(-rate * x); },
                         std::max(40.0 / rate, 1.0), false);
}

GridFunction GridFunction::laguerre_r_fn(int n, AlphaParam alpha) {
    // R~_n = R_n e^{-x/2} decays exponentially past 3 nu / 2
    const double nu = 4.0 * n + 2.0 * alpha.value() + 2.0;
    return from_callable([n, alpha](double x) { return laguerre_r(n, alpha, x); },
                         1.5 * nu + 40.0, false);
}

GridFunction GridFunction::bessel_j_fn(AlphaParam alpha, double lambda) {
    // oscillatory with only algebraic decay; horizon is a working cutoff
    return from_callable([alpha, lambda](double x) { return bessel_j_entire(alpha, lambda * x); },
                         64.0, false);
}

GridFunction GridFunction::indicator(double a, double b) {
    if (!(b > a)) throw std::invalid_argument("indicator: requires b > a");
    auto f = [a, b](double x) { return (x >= a && x <= b) ? 1.0 : 0.0; };
    return from_callable(f, std::max(b, 1e-6), true, {std::max(a, 0.0), b});
}

GridFunction GridFunction::sampled(std::vector<double> xs, std::vector<double> values) {
    if (xs.size() != values.size() || xs.size() < 2)
        throw std::invalid_argument("sampled: need matching xs/values with at least 2 nodes");
    if (xs.front() < 0.0) throw std::invalid_argument("sampled: x must be >= 0");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) throw std::invalid_argument("sampled: x must be strictly increasing");
    auto xp = std::make_shared<std::vector<double>>(std::move(xs));
    auto vp = std::make_shared<std::vector<double>>(std::move(values));
    const double hi = xp->back();
    auto f = [xp, vp](double x) {
        const auto& xs = *xp;
        const auto& vs = *vp;
        if (x < xs.front() || x > xs.back()) return 0.0;
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        if (it == xs.begin()) return vs.front();
        if (it == xs.end()) return vs.back();
        const std::size_t i = static_cast<std::size_t>(it - xs.begin());
        const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
        return (1.0 - t) * vs[i - 1] + t * vs[i];
    };
    return from_callable(f, hi, true, {xp->front(), hi});
}

GridFunction GridFunction::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("from_csv: cannot open " + path);
    std::vector<double> xs, vs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double x, v;
        if (!(ss >> x >> v)) {
            if (lineno == 1) continue; // header row
            throw std::runtime_error("from_csv: bad row " + std::to_string(lineno) + " in " + path);
        }
        xs.push_back(x);
        vs.push_back(v);
    }
    if (xs.size() < 2) throw std::runtime_error("from_csv: fewer than 2 samples in " + path);
    return sampled(std::move(xs), std::move(vs));
}

GridFunction GridFunction::shifted(double s) const {
    if (s < 0.0) throw std::invalid_argument("shifted: shift must be >= 0");
    auto base = *this;
    std::vector<double> bps;
    for (double b : base.breakpoints_) bps.push_back(b + s);
    return from_callable([base, s](double x) { return x < s ? 0.0 : base(x - s); },
                         base.decay_radius_ + s, base.compact_support_, std::move(bps));
}

GridFunction GridFunction::scaled(double c) const {
    auto base = *this;
    return from_callable([base, c](double x) { return c * base(x); }, base.decay_radius_,
                         base.compact_support_, base.breakpoints_);
}

GridFunction GridFunction::multiply(const GridFunction& a, const GridFunction& b) {
    const bool compact = a.compact_support_ || b.compact_support_;
    double radius;
    if (a.compact_support_ && b.compact_support_)
        radius = std::min(a.decay_radius_, b.decay_radius_);
    else if (a.compact_support_)
        radius = a.decay_radius_;
    else if (b.compact_support_)
        radius = b.decay_radius_;
    else
        radius = std::min(a.decay_radius_, b.decay_radius_);
    std::vector<double> bps = a.breakpoints_;
    bps.insert(bps.end(), b.breakpoints_.begin(), b.breakpoints_.end());
    GridFunction fa = a, fb = b;
    return from_callable([fa, fb](double x) { return fa(x) * fb(x); }, radius, compact,
                         std::move(bps));
}

GridFunction GridFunction::subtract(const GridFunction& a, const GridFunction& b) {
    const double radius = std::max(a.decay_radius_, b.decay_radius_);
    std::vector<double> bps = a.breakpoints_;
    bps.insert(bps.end(), b.breakpoints_.begin(), b.breakpoints_.end());
    GridFunction fa = a, fb = b;
    return from_callable([fa, fb](double x) { return fa(x) - fb(x); }, radius,
                         a.compact_support_ && b.compact_support_, std::move(bps));
}

} // namespace laghank
