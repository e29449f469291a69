#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "laghank/alpha.hpp"
#include "laghank/bessel_ops.hpp"
#include "laghank/grid_function.hpp"
#include "laghank/laguerre_seq.hpp"
#include "laghank/spaces.hpp"

namespace laghank {

/// A finite family of functions or sequences, homogeneous in setting.
struct FamilySpec {
    Setting setting = Setting::laguerre_fn;
    AlphaParam alpha{0.0};
    double p = 2.0;
    std::vector<GridFunction> fn_members;
    std::vector<SeqVec> seq_members;
    std::vector<std::string> labels;
    std::string family_label;

    std::size_t size() const {
        return setting == Setting::laguerre_seq ? seq_members.size() : fn_members.size();
    }
};

/// Grids and thresholds of a diagnostics run. The sup-over-continuum
/// conditions are evaluated on these explicit grids and reported as sampled
/// lower bounds.
struct DiagnosticsConfig {
    double epsilon = 1e-2;
    double m0 = 4.0;    // translation horizon
    double r_max = 64.0;
    std::vector<double> delta_grid{0.5, 0.25, 0.1, 0.05, 0.02};
    int t_points = 33;
    int h_points_per_delta = 9;
    int n_max = 24;     // sequence index cap
    std::vector<double> r_grid; // empty: 1, 2, ..., r_max
    bool compute_head = false;
    bool refinement_check = true;
};

/// Quadrature budgets of a diagnostics run (separate from the grids so the
/// verdict logic never depends on them implicitly; they are recorded in the
/// report).
struct DiagnosticsResources {
    int angular_order = 64;
    int norm_panels = 48;
    int norm_panel_order = 6;
    int transform_samples = 1024;
    int coeff_count = 48;          // analysis depth for bridge directions
    double transform_y_max = 16.0;
    std::shared_ptr<const GammaTable> gamma; // sequence translation table
};

enum class VerdictKind { pass, fail, inconclusive };
std::string to_string(VerdictKind v);

struct TailReport {
    std::string condition; // P_a, P_A or P_as
    double epsilon = 0.0;
    std::vector<double> r_grid;
    std::vector<double> sup_tail;        // family sup at each probed grid R
    std::optional<double> found_r;
    double sup_at_r_max = 0.0;
    std::vector<double> per_member_r;    // -1 when not found below r_max
    VerdictKind verdict = VerdictKind::inconclusive;
};

struct EqcReport {
    std::string condition; // P_b or P_B
    std::vector<double> delta_grid;
    std::vector<double> omega;           // sampled lower bound of the sup
    std::vector<double> t_grid;
    std::vector<double> h_union;
    double refinement_shift = 0.0;       // relative change under halved h spacing
    VerdictKind verdict = VerdictKind::inconclusive;
};

struct SeqEqcReport {
    std::vector<double> curve;           // j -> sup_a ||T_j(a) - a||_{p,alpha}
    std::optional<int> found_n;
    VerdictKind verdict = VerdictKind::inconclusive;
};

struct HeadReport {
    std::vector<double> delta_grid;
    std::vector<double> head;            // sup over members per delta
    VerdictKind verdict = VerdictKind::inconclusive;
};

struct BoundednessReport {
    double max_norm = 0.0;
    std::vector<double> per_member;
};

struct L2CriterionReport {
    int coeff_count = 0;
    std::vector<double> per_member_max_coeff;
    double max_coeff = 0.0;
    VerdictKind combined = VerdictKind::inconclusive; // eqc pass + finite coefficient bound
};

/// Full diagnostics record: every verdict is a function of the recorded
/// numbers only. A sampled necessary-condition checker, not a proof of
/// precompactness.
struct DiagnosticsReport {
    Setting setting = Setting::laguerre_fn;
    double alpha = 0.0;
    double p = 2.0;
    std::string family_label;
    std::vector<std::string> member_labels;
    DiagnosticsConfig config;
    DiagnosticsResources resources_used; // gamma pointer not serialized
    BoundednessReport boundedness;
    std::optional<TailReport> tail;
    std::optional<EqcReport> eqc;
    std::optional<HeadReport> head;
    std::optional<SeqEqcReport> seq_eqc;
    std::optional<L2CriterionReport> l2;
    std::map<std::string, std::string> verdicts;

    /// Versioned JSON (schema 1); the timestamp lives in a separate metadata
    /// block so reports excluding it compare byte-identically.
    std::string to_json(bool with_timestamp = true) const;
};

// ---- moduli -----------------------------------------------------------------

/// Setting-appropriate tail beyond R (functions) or index floor(R) (sequences).
double tail_mass_fn(const GridFunction& f, double r, Setting setting, AlphaParam alpha, double p,
                    const DiagnosticsResources& res);
double tail_mass_seq(const SeqVec& a, int n, double p);
double tail_mass(std::size_t member_index, double r, const FamilySpec& family,
                 const DiagnosticsResources& res);

/// Smallest grid R with sup-over-members tail below cfg.epsilon.
TailReport find_tail_radius(const FamilySpec& family, const DiagnosticsConfig& cfg,
                            const DiagnosticsResources& res);

/// delta -> omega(delta) = max over members, t in t_grid, h <= delta of
/// ||T_{t+h} f - T_t f|| in the setting's norm.
EqcReport eqc_modulus_fn(const FamilySpec& family, const DiagnosticsConfig& cfg,
                         const DiagnosticsResources& res);

/// j -> sup over members of ||T_j(a) - a||_{p,alpha}; the curve is recorded
/// without a decay assertion.
SeqEqcReport eqc_modulus_seq(const FamilySpec& family, const GammaTable& table,
                             const DiagnosticsConfig& cfg);

/// (int_0^delta |f e^{-x/2}|^p x^alpha dx)^{1/p}.
double head_mass(const GridFunction& f, double delta, AlphaParam alpha, double p);

/// M_a f(s) = (1/A) int_0^a T_{t,alpha} f(s) t^{2 alpha + 1} dt with the exact
/// normalizer A = a^{2 alpha + 2} / (2 alpha + 2).
GridFunction average_m(const GridFunction& f, double a, AlphaParam alpha,
                       const BesselAngularRule& angular);

/// Assemble the full report for a family.
DiagnosticsReport verdict(const FamilySpec& family, const DiagnosticsConfig& cfg,
                          const DiagnosticsResources& res);

// ---- cross-checks -----------------------------------------------------------

enum class PegoDirection { lL_a, lL_b, lL_c, lL_d, He_forward, He_backward };
std::string to_string(PegoDirection d);

/// Hypothesis-side and conclusion-side moduli of one implication, computed on
/// the input family and its transform (synthesis / analysis / Hankel).
struct PegoReport {
    PegoDirection direction = PegoDirection::He_forward;
    std::optional<TailReport> hypothesis_tail;
    std::optional<EqcReport> hypothesis_eqc;
    std::optional<SeqEqcReport> hypothesis_seq_eqc;
    std::optional<HeadReport> hypothesis_head;
    std::optional<TailReport> conclusion_tail;
    std::optional<EqcReport> conclusion_eqc;
    std::optional<SeqEqcReport> conclusion_seq_eqc;
    std::map<std::string, double> notes; // e.g. the S1/S2 bound shapes
    std::string to_json() const;
};

PegoReport pego_cross_check(PegoDirection direction, const FamilySpec& family,
                            const DiagnosticsConfig& cfg, const DiagnosticsResources& res);

/// Image family {u . H_alpha(v . f)} and its diagnostics, with the input
/// family's tail search for contrast.
struct CompactOperatorReport {
    TailReport input_tail;
    DiagnosticsReport image_report;
    std::string to_json() const;
};

CompactOperatorReport compact_operator_demo(const GridFunction& u, const GridFunction& v,
                                            const FamilySpec& family, const HankelParams& params,
                                            const DiagnosticsConfig& cfg,
                                            const DiagnosticsResources& res);

} // namespace laghank
