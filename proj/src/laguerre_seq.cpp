#include "laghank/laguerre_seq.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "laghank/laguerre_ops.hpp"
#include "laghank/special_functions.hpp"

namespace laghank {

namespace {

void require_gamma_alpha(AlphaParam alpha) {
    if (alpha.value() <= gamma_alpha_floor())
        throw std::domain_error("gamma coefficients: requires alpha > (-5+sqrt(17))/2");
}

// R_n(u/2) for all n <= n_max in long double; the triple products suffer
// heavy cancellation relative to the tiny high-k coefficients, so the whole
// quadrature runs in extended precision.
std::vector<long double> laguerre_r_all_ld(int n_max, double alpha, long double x) {
    std::vector<long double> out(static_cast<std::size_t>(n_max) + 1);
    out[0] = 1.0L;
    if (n_max == 0) return out;
    const long double a = alpha;
    long double lkm1 = 1.0L, lk = 1.0L + a - x, w = 1.0L;
    for (int n = 1; n <= n_max; ++n) {
        w *= (n + a) / n;
        out[static_cast<std::size_t>(n)] = lk / w;
        const long double lkp1 = ((2.0L * n + a + 1.0L - x) * lk - (n + a) * lkm1) / (n + 1.0L);
        lkm1 = lk;
        lk = lkp1;
    }
    return out;
}

// gamma for all k <= k_max at fixed (n, m), one quadrature pass
std::vector<double> gamma_row(int n, int m, int k_max, const QuadratureRule& rule,
                              const std::vector<std::vector<long double>>& r_at_nodes,
                              long double prefactor) {
    std::vector<long double> acc(static_cast<std::size_t>(k_max) + 1, 0.0L);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const auto& r = r_at_nodes[i];
        const long double f = static_cast<long double>(rule.weights[i]) *
                              r[static_cast<std::size_t>(n)] * r[static_cast<std::size_t>(m)];
        for (int k = 0; k <= k_max; ++k) acc[static_cast<std::size_t>(k)] += f * r[static_cast<std::size_t>(k)];
    }
    std::vector<double> out(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k)
        out[static_cast<std::size_t>(k)] = static_cast<double>(prefactor * acc[static_cast<std::size_t>(k)]);
    return out;
}

long double gamma_prefactor(double alpha, bool normalized) {
    // substitution x = u/2 gives 2^{-(alpha+1)}; normalization divides by Gamma(alpha+1)
    long double p = std::exp(-(static_cast<long double>(alpha) + 1.0L) * std::log(2.0L));
    if (normalized) p *= std::exp(-static_cast<long double>(std::lgamma(alpha + 1.0)));
    return p;
}

double gamma_quadrature(int n, int m, int k, AlphaParam alpha, bool normalized) {
    if (n < 0 || m < 0 || k < 0) throw std::invalid_argument("gamma_coeff: indices must be >= 0");
    const int order = (n + m + k) / 2 + 2;
    const QuadratureRule rule = gauss_gen_laguerre(order, alpha);
    const int top = std::max({n, m, k});
    long double acc = 0.0L;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const auto r = laguerre_r_all_ld(top, alpha.value(), 0.5L * static_cast<long double>(rule.nodes[i]));
        acc += static_cast<long double>(rule.weights[i]) * r[static_cast<std::size_t>(n)] *
               r[static_cast<std::size_t>(m)] * r[static_cast<std::size_t>(k)];
    }
    return static_cast<double>(gamma_prefactor(alpha.value(), normalized) * acc);
}

} // namespace

double gamma_coeff(int n, int m, int k, AlphaParam alpha) {
    require_gamma_alpha(alpha);
    return gamma_quadrature(n, m, k, alpha, true);
}

double gamma_coeff_raw(int n, int m, int k, AlphaParam alpha) {
    return gamma_quadrature(n, m, k, alpha, false);
}

GammaTable::GammaTable(AlphaParam alpha, int k_max, std::vector<double> values,
                       double sum_residual)
    : alpha_(alpha), k_max_(k_max), values_(std::move(values)), sum_residual_(sum_residual) {
    const std::size_t expected = static_cast<std::size_t>(k_max_ + 1) * (k_max_ + 1) * (k_max_ + 1);
    if (values_.size() != expected)
        throw std::invalid_argument("GammaTable: value count does not match k_max");
}

double GammaTable::operator()(int n, int m, int k) const {
    if (n < 0 || m < 0 || k < 0 || n > k_max_ || m > k_max_ || k > k_max_)
        throw std::out_of_range("GammaTable: index beyond table");
    const std::size_t s = static_cast<std::size_t>(k_max_) + 1;
    return values_[(static_cast<std::size_t>(n) * s + static_cast<std::size_t>(m)) * s +
                   static_cast<std::size_t>(k)];
}

GammaTable build_gamma_table(int k_max, AlphaParam alpha) {
    require_gamma_alpha(alpha);
    if (k_max < 1 || k_max > 64)
        throw std::invalid_argument("build_gamma_table: k_max must be in [1, 64]");
    const int order = (3 * k_max) / 2 + 2;
    const QuadratureRule rule = gauss_gen_laguerre(order, alpha);

    std::vector<std::vector<long double>> r_at_nodes(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        r_at_nodes[i] = laguerre_r_all_ld(k_max, alpha.value(),
                                          0.5L * static_cast<long double>(rule.nodes[i]));
    const long double pre = gamma_prefactor(alpha.value(), true);

    const std::size_t s = static_cast<std::size_t>(k_max) + 1;
    std::vector<double> values(s * s * s);
    for (int n = 0; n <= k_max; ++n) {
        for (int m = n; m <= k_max; ++m) {
            const std::vector<double> row = gamma_row(n, m, k_max, rule, r_at_nodes, pre);
            for (int k = 0; k <= k_max; ++k) {
                const double v = row[static_cast<std::size_t>(k)];
                values[(static_cast<std::size_t>(n) * s + static_cast<std::size_t>(m)) * s +
                       static_cast<std::size_t>(k)] = v;
                values[(static_cast<std::size_t>(m) * s + static_cast<std::size_t>(n)) * s +
                       static_cast<std::size_t>(k)] = v;
            }
        }
    }

    // validate the truncated sum rule sum_k gamma(n,m,k) w(k) = 1 on the
    // low-index block, where the k <= k_max truncation tail is negligible
    const std::vector<double> w = weight_w_all(alpha, k_max);
    double residual = 0.0;
    for (int n = 0; n <= k_max / 2; ++n) {
        for (int m = 0; m <= k_max / 2; ++m) {
            double sum = 0.0;
            for (int k = 0; k <= k_max; ++k)
                sum += values[(static_cast<std::size_t>(n) * s + static_cast<std::size_t>(m)) * s +
                              static_cast<std::size_t>(k)] *
                       w[static_cast<std::size_t>(k)];
            residual = std::max(residual, std::fabs(sum - 1.0));
        }
    }
    return GammaTable(alpha, k_max, std::move(values), residual);
}

SeqVec translate_seq(const SeqVec& a, int k, const GammaTable& table) {
    if (!(a.alpha == table.alpha()))
        throw std::invalid_argument("translate_seq: alpha mismatch with table");
    if (k < 0 || k > table.k_max()) throw std::invalid_argument("translate_seq: k beyond table");
    if (static_cast<int>(a.size()) > table.k_max() + 1)
        throw std::invalid_argument("translate_seq: sequence longer than table");
    const std::vector<double> w =
        weight_w_all(a.alpha, std::max<int>(0, static_cast<int>(a.size()) - 1));
    std::vector<double> out(static_cast<std::size_t>(table.k_max()) + 1, 0.0);
    for (int n = 0; n <= table.k_max(); ++n) {
        double acc = 0.0;
        for (std::size_t m = 0; m < a.size(); ++m)
            acc += a.values[m] * w[m] * table(n, static_cast<int>(m), k);
        out[static_cast<std::size_t>(n)] = acc;
    }
    return SeqVec(std::move(out), a.alpha);
}

SeqVec convolve_seq(const SeqVec& a, const SeqVec& b, const GammaTable& table) {
    if (!(a.alpha == b.alpha)) throw std::invalid_argument("convolve_seq: alpha mismatch");
    std::vector<double> out(static_cast<std::size_t>(table.k_max()) + 1, 0.0);
    for (int k = 0; k <= table.k_max(); ++k)
        out[static_cast<std::size_t>(k)] = pair_seq(b, translate_seq(a, k, table));
    return SeqVec(std::move(out), a.alpha);
}

BridgeTnkReport bridge_check_tnk(const GridFunction& f, int n, const GammaTable& table,
                                 const QuadratureRule& rule) {
    const AlphaParam alpha = table.alpha();
    const int k_top = std::min(8, table.k_max());
    // sequence side: a_f from the analysis transform, then T_n
    const CoeffVec a_f = analyze(f, alpha, table.k_max(), rule);
    const SeqVec a_seq(a_f.values, alpha);
    const SeqVec translated = translate_seq(a_seq, n, table);

    // function side: transform of f R_n against e^{-c x} x^alpha for both c
    BridgeTnkReport rep;
    rep.n = n;
    rep.k_max = k_top;
    for (int k = 0; k <= k_top; ++k) {
        double i2 = 0.0, i32 = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double x = rule.nodes[i];
            // rule carries e^{-x} x^alpha; the remaining factor is e^{-(c-1)x}
            const double core = rule.weights[i] * f(x) * laguerre_r(n, alpha, x) *
                                laguerre_r(k, alpha, x);
            i2 += core * std::exp(-x);
            i32 += core * std::exp(-0.5 * x);
        }
        // match the table normalization: the sequence side carries 1/Gamma(alpha+1)
        // through gamma; translated(k) reproduces the raw integral as-is
        rep.residual_weight_2x = std::max(rep.residual_weight_2x,
                                          std::fabs(i2 - translated(static_cast<std::size_t>(k))));
        rep.residual_weight_3x2 = std::max(rep.residual_weight_3x2,
                                           std::fabs(i32 - translated(static_cast<std::size_t>(k))));
    }
    return rep;
}

double geometric_tail_bound(const std::vector<double>& terms) {
    if (terms.size() < 2) return 0.0;
    const std::size_t look = std::min<std::size_t>(8, terms.size() - 1);
    double ratio = 0.0;
    for (std::size_t i = terms.size() - look; i < terms.size(); ++i) {
        const double prev = std::fabs(terms[i - 1]);
        if (prev > 0.0) ratio = std::max(ratio, std::fabs(terms[i]) / prev);
    }
    ratio = std::min(ratio, 0.9);
    const double last = std::fabs(terms.back());
    return last * ratio / (1.0 - ratio);
}

void GammaTable::save_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("GammaTable::save_csv: cannot open " + path);
    out.precision(17);
    out << "# alpha=" << alpha_.value() << "\n";
    out << "# K=" << k_max_ << "\n";
    out << "# normalization=" << normalization << "\n";
    out << "# sum_residual=" << sum_residual_ << "\n";
    out << "n,m,k,value\n";
    const std::size_t s = static_cast<std::size_t>(k_max_) + 1;
    for (int n = 0; n <= k_max_; ++n)
        for (int m = 0; m <= k_max_; ++m)
            for (int k = 0; k <= k_max_; ++k)
                out << n << ',' << m << ',' << k << ','
                    << values_[(static_cast<std::size_t>(n) * s + static_cast<std::size_t>(m)) * s +
                               static_cast<std::size_t>(k)]
                    << "\n";
}

GammaTable GammaTable::load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("GammaTable::load_csv: cannot open " + path);
    double alpha = 0.0, residual = 0.0;
    int k_max = -1;
    std::string line;
    std::vector<double> values;
    while (std::getline(in, line)) {
        if (line.rfind("# alpha=", 0) == 0) alpha = std::stod(line.substr(8));
        else if (line.rfind("# K=", 0) == 0) k_max = std::stoi(line.substr(4));
        else if (line.rfind("# sum_residual=", 0) == 0) residual = std::stod(line.substr(15));
        else if (line.rfind("#", 0) == 0 || line.rfind("n,m,k", 0) == 0) continue;
        else if (!line.empty()) {
            if (k_max < 0) throw std::runtime_error("GammaTable::load_csv: missing K header");
            if (values.empty())
                values.reserve(static_cast<std::size_t>(k_max + 1) * (k_max + 1) * (k_max + 1));
            std::replace(line.begin(), line.end(), ',', ' ');
            std::istringstream ss(line);
            int n, m, k;
            double v;
            if (!(ss >> n >> m >> k >> v))
                throw std::runtime_error("GammaTable::load_csv: bad row");
            const std::size_t s = static_cast<std::size_t>(k_max) + 1;
            if (values.size() < s * s * s) values.resize(s * s * s, 0.0);
            values[(static_cast<std::size_t>(n) * s + static_cast<std::size_t>(m)) * s +
                   static_cast<std::size_t>(k)] = v;
        }
    }
    return GammaTable(AlphaParam(alpha), k_max, std::move(values), residual);
}

GammaTable GammaTable::load_or_build(int k_max, AlphaParam alpha, const std::string& cache_dir) {
    std::filesystem::create_directories(cache_dir);
    std::ostringstream name;
    name << "gamma_alpha" << alpha.value() << "_K" << k_max << ".csv";
    const std::filesystem::path path = std::filesystem::path(cache_dir) / name.str();
    if (std::filesystem::exists(path)) {
        GammaTable t = load_csv(path.string());
        if (t.k_max() == k_max && t.alpha().value() == alpha.value()) return t;
    }
    GammaTable t = build_gamma_table(k_max, alpha);
    t.save_csv(path.string());
    return t;
}

} // namespace laghank
