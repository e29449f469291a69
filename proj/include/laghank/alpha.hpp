#pragma once

#include <cmath>
#include <stdexcept>

namespace laghank {

/// Order/exponent parameter shared by the Laguerre and Bessel settings.
/// Constructible only for finite values > -1; operations with stricter
/// lower bounds (> -1/2, >= -1/2, > (-5+sqrt(17))/2, ...) check those
/// themselves.
class AlphaParam {
public:
    explicit AlphaParam(double value) : value_(value) {
        if (!std::isfinite(value_))
            throw std::invalid_argument("AlphaParam: value must be finite");
        if (value_ <= -1.0)
            throw std::domain_error("AlphaParam: value must be > -1");
    }

    double value() const { return value_; }

    friend bool operator==(AlphaParam a, AlphaParam b) { return a.value_ == b.value_; }

private:
    double value_;
};

/// Smallest order for which the gamma linearization coefficients are
/// guaranteed nonnegative: (-5 + sqrt(17)) / 2.
inline double gamma_alpha_floor() { return 0.5 * (-5.0 + std::sqrt(17.0)); }

} // namespace laghank
