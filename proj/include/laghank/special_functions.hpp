#pragma once

#include <vector>

#include "laghank/alpha.hpp"

namespace laghank {

/// Entire Bessel function j_alpha(z) = Gamma(alpha+1) (2/z)^alpha J_alpha(z),
/// normalized so j_alpha(0) = 1. Even in z. Requires alpha > -1.
///
/// Evaluation: power series up to |z| = 10 (compensated summation, terms
/// summed until below 1e-18 of the partial sum), the standard-library
/// cylinder Bessel evaluation on (10, 30], and the large-argument expansion
/// beyond 30.
double bessel_j_entire(AlphaParam alpha, double z);

/// d/dz j_alpha(z) = -z j_{alpha+1}(z) / (2 (alpha+1)).
double bessel_j_derivative(AlphaParam alpha, double z);

/// Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence.
double laguerre_l(int n, AlphaParam alpha, double x);

/// Normalized Laguerre polynomial R_n^alpha(x) = L_n^alpha(x) / binom(n+alpha, n),
/// so R_n^alpha(0) = 1 exactly. Requires x >= 0.
double laguerre_r(int n, AlphaParam alpha, double x);

/// R_n^alpha(x) for all n = 0..n_max in one recurrence pass.
std::vector<double> laguerre_r_all(int n_max, AlphaParam alpha, double x);

/// Binomial weight w(k) = binom(k+alpha, k), by the stable product
/// recurrence w(0) = 1, w(k) = w(k-1) (k+alpha) / k. Strictly positive.
double weight_w(AlphaParam alpha, int k);

/// w(0..k_max) in one pass.
std::vector<double> weight_w_all(AlphaParam alpha, int k_max);

/// Derivative of R_j^alpha(x) e^{-x}: equals -L_j^{alpha+1}(x) e^{-x} / binom(j+alpha, j).
double laguerre_r_exp_derivative(int j, AlphaParam alpha, double x);

/// Parameters of the four-branch test envelope for |R~_n^alpha(x) x^{alpha/2}|,
/// where R~_n = R_n e^{-x/2} and nu = 4n + 2 alpha + 2. The constant is not
/// pinned analytically; it comes from calibrate_envelope_constant and the last
/// branch uses the fixed decay rate 1/4.
struct EnvelopeParams {
    int n = 0;
    double nu = 0.0;
    double calibration_constant = 0.0; // <= 0 means uncalibrated
};

/// Build EnvelopeParams for degree n (nu = 4n + 2 alpha + 2).
EnvelopeParams make_envelope_params(int n, AlphaParam alpha, double calibration_constant);

/// Empirical envelope constant: 1.1 times the maximum observed ratio of
/// |R~_n(x) x^{alpha/2}| to the unscaled branch value over n <= n_max and a
/// dense grid per branch.
double calibrate_envelope_constant(AlphaParam alpha, int n_max);

/// The envelope value C n^{-alpha/2} * branch(x) at x.
double envelope_bound(AlphaParam alpha, double x, const EnvelopeParams& params);

/// Test predicate: |R~_n^alpha(x) x^{alpha/2}| <= envelope_bound(x).
/// Throws if params are uncalibrated. Never used as an evaluation shortcut.
bool envelope_check(int n, AlphaParam alpha, double x, const EnvelopeParams& params);

} // namespace laghank
