#pragma once

#include <string>
#include <vector>

#include "laghank/alpha.hpp"
#include "laghank/grid_function.hpp"
#include "laghank/quadrature.hpp"
#include "laghank/spaces.hpp"

namespace laghank {

/// Cached tensor of linearization coefficients
///   gamma(n,m,k) = (1/Gamma(alpha+1)) int_0^inf R_n R_m R_k e^{-2x} x^alpha dx,
/// fully symmetric in (n,m,k) and nonnegative for alpha > (-5+sqrt(17))/2.
/// The 1/Gamma(alpha+1) normalization makes sum_k gamma(n,m,k) w(k) = 1.
class GammaTable {
public:
    GammaTable(AlphaParam alpha, int k_max, std::vector<double> values, double sum_residual);

    static constexpr const char* normalization = "divided-by-Gamma(alpha+1)";

    AlphaParam alpha() const { return alpha_; }
    int k_max() const { return k_max_; }
    double operator()(int n, int m, int k) const;
    /// Worst |sum_k gamma(n,m,k) w(k) - 1| over n, m <= k_max/2 at build time.
    double sum_residual() const { return sum_residual_; }
    bool valid() const { return sum_residual_ <= 1e-4; }

    /// CSV export: header comments record alpha, K and the normalization tag,
    /// then `n,m,k,value` rows.
    void save_csv(const std::string& path) const;
    static GammaTable load_csv(const std::string& path);
    /// Load from the cache directory (keyed by alpha and K) or build and cache.
    static GammaTable load_or_build(int k_max, AlphaParam alpha, const std::string& cache_dir);

private:
    AlphaParam alpha_;
    int k_max_;
    std::vector<double> values_; // dense (K+1)^3
    double sum_residual_;
};

/// Single coefficient by its own quadrature (order >= ceil((n+m+k)/2) + 1
/// after the substitution x = u/2, so the integrand is integrated exactly).
double gamma_coeff(int n, int m, int k, AlphaParam alpha);

/// The un-normalized integral int R_n R_m R_k e^{-2x} x^alpha dx (audit hook).
double gamma_coeff_raw(int n, int m, int k, AlphaParam alpha);

/// Build the full symmetric tensor for n, m, k <= k_max with one rule of
/// order ceil(3 k_max / 2) + 1. Requires alpha > (-5+sqrt(17))/2, k_max <= 64.
GammaTable build_gamma_table(int k_max, AlphaParam alpha);

/// T_k(a)(n) = sum_m a(m) w(m) gamma(n,m,k), n = 0..table.k_max.
SeqVec translate_seq(const SeqVec& a, int k, const GammaTable& table);

/// (a*b)(k) = sum_m sum_n a(m) b(n) gamma(n,m,k) w(n) w(m), evaluated as
/// pair_seq(b, translate_seq(a, k)) so the two agree by construction.
SeqVec convolve_seq(const SeqVec& a, const SeqVec& b, const GammaTable& table);

/// Residuals of the coefficient-transform identity
///   T_n(a_f)(k) = transform of x -> f R_n against e^{-c x} x^alpha dx
/// under both candidate weights c = 2 and c = 3/2. A measurement (the smaller
/// residual identifies the consistent convention), never an assertion.
struct BridgeTnkReport {
    int n = 0;
    int k_max = 0;
    double residual_weight_2x = 0.0;   // against e^{-2x}
    double residual_weight_3x2 = 0.0;  // against e^{-3x/2}
};
BridgeTnkReport bridge_check_tnk(const GridFunction& f, int n, const GammaTable& table,
                                 const QuadratureRule& rule);

/// Empirical geometric tail bound for truncated sum_k identities: estimates
/// the ratio from the last terms of |series| and returns last * r / (1 - r).
double geometric_tail_bound(const std::vector<double>& terms);

} // namespace laghank
