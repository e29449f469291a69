#include "laghank/compactness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "laghank/laguerre_ops.hpp"
#include "laghank/special_functions.hpp"

namespace laghank {

using nlohmann::json;

std::string to_string(VerdictKind v) {
    switch (v) {
        case VerdictKind::pass: return "pass";
        case VerdictKind::fail: return "fail";
        default: return "inconclusive";
    }
}

std::string to_string(PegoDirection d) {
    switch (d) {
        case PegoDirection::lL_a: return "lL_a";
        case PegoDirection::lL_b: return "lL_b";
        case PegoDirection::lL_c: return "lL_c";
        case PegoDirection::lL_d: return "lL_d";
        case PegoDirection::He_forward: return "He_forward";
        default: return "He_backward";
    }
}

namespace {

std::string tail_condition_name(Setting s) {
    switch (s) {
        case Setting::laguerre_fn: return "P_a";
        case Setting::bessel_fn: return "P_A";
        default: return "P_as";
    }
}

std::string eqc_condition_name(Setting s) {
    return s == Setting::laguerre_fn ? "P_b" : "P_B";
}

double translate_horizon(const GridFunction& f, double t, Setting s) {
    if (s == Setting::laguerre_fn)
        return std::pow(std::sqrt(f.decay_radius()) + std::sqrt(t), 2);
    return f.decay_radius() + t;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1.0);
    return out;
}

// translation dispatch shared by the moduli
GridFunction translate_member(const GridFunction& f, double t, Setting setting,
                              const LaguerreTranslationParams* lag,
                              const BesselAngularRule* bes, AlphaParam alpha) {
    if (setting == Setting::laguerre_fn) return translate_laguerre(f, t, *lag);
    return translate_bessel(f, t, alpha, *bes);
}

} // namespace

double tail_mass_fn(const GridFunction& f, double r, Setting setting, AlphaParam alpha, double p,
                    const DiagnosticsResources& res) {
    if (r < 0.0) throw std::invalid_argument("tail_mass_fn: r must be >= 0");
    const double x_hi = f.decay_radius() + (f.compact_support() ? 0.0 : 10.0);
    if (r >= x_hi) return 0.0;
    if (std::isinf(p)) {
        double m = 0.0;
        for (double x : detail::sup_grid(x_hi)) {
            if (x < r) continue;
            const double v = std::fabs(f(x)) * (setting == Setting::laguerre_fn
                                                    ? std::exp(-0.5 * x)
                                                    : 1.0);
            m = std::max(m, v);
        }
        return m;
    }
    const QuadratureRule rule =
        panel_interval(r, x_hi, res.norm_panels, res.norm_panel_order, f.breakpoints());
    std::vector<double> values(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) values[i] = f(rule.nodes[i]);
    return detail::norm_from_samples(rule.nodes, rule.weights, values, p, alpha.value(), setting);
}

double tail_mass_seq(const SeqVec& a, int n, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (std::size_t k = static_cast<std::size_t>(n) + 1; k < a.size(); ++k)
            m = std::max(m, std::fabs(a.values[k]));
        return m;
    }
    if (a.size() == 0) return 0.0;
    const std::vector<double> w = weight_w_all(a.alpha, static_cast<int>(a.size()) - 1);
    double acc = 0.0;
    for (std::size_t k = static_cast<std::size_t>(n) + 1; k < a.size(); ++k)
        acc += std::pow(std::fabs(a.values[k]), p) * w[k];
    return std::pow(acc, 1.0 / p);
}

double tail_mass(std::size_t member_index, double r, const FamilySpec& family,
                 const DiagnosticsResources& res) {
    if (family.setting == Setting::laguerre_seq)
        return tail_mass_seq(family.seq_members.at(member_index), static_cast<int>(std::floor(r)),
                             family.p);
    return tail_mass_fn(family.fn_members.at(member_index), r, family.setting, family.alpha,
                        family.p, res);
}

TailReport find_tail_radius(const FamilySpec& family, const DiagnosticsConfig& cfg,
                            const DiagnosticsResources& res) {
    TailReport rep;
    rep.condition = tail_condition_name(family.setting);
    rep.epsilon = cfg.epsilon;
    rep.r_grid = cfg.r_grid;
    if (rep.r_grid.empty())
        for (double r = 1.0; r <= cfg.r_max + 1e-12; r += 1.0) rep.r_grid.push_back(r);

    const std::size_t n = family.size();
    rep.per_member_r.assign(n, -1.0);
    bool family_found = false;
    for (double r : rep.r_grid) {
        double sup = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double tm = tail_mass(i, r, family, res);
            if (rep.per_member_r[i] < 0.0 && tm < cfg.epsilon) rep.per_member_r[i] = r;
            sup = std::max(sup, tm);
        }
        rep.sup_tail.push_back(sup);
        if (!family_found && sup < cfg.epsilon) {
            rep.found_r = r;
            family_found = true;
            break; // per-member radii at or below this point are already recorded
        }
    }
    rep.sup_at_r_max = rep.sup_tail.empty() ? 0.0 : rep.sup_tail.back();
    rep.verdict = family_found ? VerdictKind::pass : VerdictKind::fail;
    return rep;
}

namespace {

// modulus of one (t, h) pair over a fixed node set
double pair_modulus(const std::vector<double>& nodes, const std::vector<double>& weights,
                    const std::vector<double>& vt, const std::vector<double>& vth, double p,
                    double alpha, Setting setting) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            double v = std::fabs(vth[i] - vt[i]);
            if (setting == Setting::laguerre_fn) v *= std::exp(-0.5 * nodes[i]);
            m = std::max(m, v);
        }
        return m;
    }
    std::vector<double> diff(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) diff[i] = vth[i] - vt[i];
    return detail::norm_from_samples(nodes, weights, diff, p, alpha, setting);
}

std::vector<double> eval_on(const GridFunction& g, const std::vector<double>& nodes) {
    std::vector<double> out(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) out[i] = g(nodes[i]);
    return out;
}

} // namespace

EqcReport eqc_modulus_fn(const FamilySpec& family, const DiagnosticsConfig& cfg,
                         const DiagnosticsResources& res) {
    if (family.setting == Setting::laguerre_seq)
        throw std::invalid_argument("eqc_modulus_fn: function settings only");
    EqcReport rep;
    rep.condition = eqc_condition_name(family.setting);
    rep.delta_grid = cfg.delta_grid;
    std::sort(rep.delta_grid.begin(), rep.delta_grid.end(), std::greater<>());
    rep.t_grid = linspace(0.0, cfg.m0, cfg.t_points);

    // one shared h grid (9 points per delta by default); omega(delta) maxes
    // over the union restricted to [0, delta], so the table is monotone by
    // construction
    std::vector<double> h_union;
    for (double d : rep.delta_grid)
        for (int j = 1; j < cfg.h_points_per_delta; ++j)
            h_union.push_back(d * j / (cfg.h_points_per_delta - 1.0));
    std::sort(h_union.begin(), h_union.end());
    h_union.erase(std::unique(h_union.begin(), h_union.end()), h_union.end());
    rep.h_union = h_union;

    const double delta_max = rep.delta_grid.front();
    const double delta_min = rep.delta_grid.back();

    std::optional<LaguerreTranslationParams> lag;
    std::optional<BesselAngularRule> bes;
    if (family.setting == Setting::laguerre_fn)
        lag = LaguerreTranslationParams::make(family.alpha, res.angular_order);
    else
        bes = BesselAngularRule::make(family.alpha, res.angular_order);

    std::vector<double> max_per_h(h_union.size(), 0.0);
    std::vector<double> refined_max; // midpoint h values below delta_min
    std::vector<double> h_refined;
    if (cfg.refinement_check)
        for (int j = 1; j < cfg.h_points_per_delta; ++j)
            h_refined.push_back(delta_min * (j - 0.5) / (cfg.h_points_per_delta - 1.0));
    refined_max.assign(h_refined.size(), 0.0);

    for (const GridFunction& f : family.fn_members) {
        const double x_hi = translate_horizon(f, cfg.m0 + delta_max, family.setting) + 10.0;
        const QuadratureRule rule =
            panel_interval(0.0, x_hi, res.norm_panels, res.norm_panel_order);
        for (double t : rep.t_grid) {
            const std::vector<double> vt = eval_on(
                translate_member(f, t, family.setting, lag ? &*lag : nullptr,
                                 bes ? &*bes : nullptr, family.alpha),
                rule.nodes);
            for (std::size_t hi = 0; hi < h_union.size(); ++hi) {
                const std::vector<double> vth = eval_on(
                    translate_member(f, t + h_union[hi], family.setting, lag ? &*lag : nullptr,
                                     bes ? &*bes : nullptr, family.alpha),
                    rule.nodes);
                max_per_h[hi] = std::max(
                    max_per_h[hi], pair_modulus(rule.nodes, rule.weights, vt, vth, family.p,
                                                family.alpha.value(), family.setting));
            }
            for (std::size_t hi = 0; hi < h_refined.size(); ++hi) {
                const std::vector<double> vth = eval_on(
                    translate_member(f, t + h_refined[hi], family.setting, lag ? &*lag : nullptr,
                                     bes ? &*bes : nullptr, family.alpha),
                    rule.nodes);
                refined_max[hi] = std::max(
                    refined_max[hi], pair_modulus(rule.nodes, rule.weights, vt, vth, family.p,
                                                  family.alpha.value(), family.setting));
            }
        }
    }

    rep.omega.resize(rep.delta_grid.size(), 0.0);
    for (std::size_t di = 0; di < rep.delta_grid.size(); ++di) {
        double m = 0.0;
        for (std::size_t hi = 0; hi < h_union.size(); ++hi)
            if (h_union[hi] <= rep.delta_grid[di] + 1e-15) m = std::max(m, max_per_h[hi]);
        rep.omega[di] = m;
    }

    const double omega_min = rep.omega.back();
    double omega_refined = omega_min;
    for (double v : refined_max) omega_refined = std::max(omega_refined, v);
    rep.refinement_shift =
        omega_refined > 0.0 ? (omega_refined - omega_min) / omega_refined : 0.0;

    if (omega_min >= cfg.epsilon)
        rep.verdict = VerdictKind::fail;
    else if (cfg.refinement_check && rep.refinement_shift > 0.10)
        rep.verdict = VerdictKind::inconclusive;
    else
        rep.verdict = VerdictKind::pass;
    return rep;
}

SeqEqcReport eqc_modulus_seq(const FamilySpec& family, const GammaTable& table,
                             const DiagnosticsConfig& cfg) {
    if (family.setting != Setting::laguerre_seq)
        throw std::invalid_argument("eqc_modulus_seq: sequence setting only");
    SeqEqcReport rep;
    const int j_max = std::min(cfg.n_max, table.k_max());
    const NormSpec spec(family.p, family.alpha, Setting::laguerre_seq);
    rep.curve.assign(static_cast<std::size_t>(j_max) + 1, 0.0);
    for (int j = 0; j <= j_max; ++j) {
        double sup = 0.0;
        for (const SeqVec& a : family.seq_members) {
            SeqVec tj = translate_seq(a, j, table);
            for (std::size_t k = 0; k < tj.values.size(); ++k)
                tj.values[k] -= k < a.size() ? a.values[k] : 0.0;
            sup = std::max(sup, norm_seq(tj, spec));
        }
        rep.curve[static_cast<std::size_t>(j)] = sup;
    }
    // smallest N (at most j_max/2) past which the recorded curve stays small
    for (int n = 0; n <= j_max / 2; ++n) {
        double worst = 0.0;
        for (int j = n + 1; j <= j_max; ++j)
            worst = std::max(worst, rep.curve[static_cast<std::size_t>(j)]);
        if (worst < cfg.epsilon) {
            rep.found_n = n;
            break;
        }
    }
    rep.verdict = rep.found_n ? VerdictKind::pass : VerdictKind::fail;
    return rep;
}

double head_mass(const GridFunction& f, double delta, AlphaParam alpha, double p) {
    if (!(delta > 0.0)) throw std::invalid_argument("head_mass: delta must be > 0");
    const QuadratureRule rule = detail::graded_panels(delta, 16, 6);
    std::vector<double> values(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) values[i] = f(rule.nodes[i]);
    return detail::norm_from_samples(rule.nodes, rule.weights, values, p, alpha.value(),
                                     Setting::laguerre_fn);
}

GridFunction average_m(const GridFunction& f, double a, AlphaParam alpha,
                       const BesselAngularRule& angular) {
    if (!(a > 0.0)) throw std::invalid_argument("average_m: a must be > 0");
    const double two_a2 = 2.0 * alpha.value() + 2.0;
    const double norm_a = std::pow(a, two_a2) / two_a2; // exact weight mass
    const QuadratureRule t_rule = detail::graded_panels(a, 32, 8);
    auto nodes = std::make_shared<std::vector<double>>(t_rule.nodes);
    auto weights = std::make_shared<std::vector<double>>(t_rule.nodes.size());
    for (std::size_t j = 0; j < t_rule.nodes.size(); ++j)
        (*weights)[j] = t_rule.weights[j] * std::pow(t_rule.nodes[j], two_a2 - 1.0) / norm_a;
    auto rule = std::make_shared<BesselAngularRule>(angular);
    GridFunction base = f;
    auto eval = [base, rule, nodes, weights](double s) {
        double acc = 0.0;
        for (std::size_t j = 0; j < nodes->size(); ++j)
            acc += (*weights)[j] * translate_bessel_point(base, (*nodes)[j], s, *rule);
        return acc;
    };
    return GridFunction::from_callable(eval, f.decay_radius() + a, f.compact_support());
}

DiagnosticsReport verdict(const FamilySpec& family, const DiagnosticsConfig& cfg,
                          const DiagnosticsResources& res) {
    if (family.size() == 0) throw std::invalid_argument("verdict: family must be nonempty");
    DiagnosticsReport rep;
    rep.setting = family.setting;
    rep.alpha = family.alpha.value();
    rep.p = family.p;
    rep.family_label = family.family_label;
    rep.member_labels = family.labels;
    rep.config = cfg;
    rep.resources_used = res;

    // boundedness estimate: max member norm
    const NormSpec spec(family.p, family.alpha, family.setting);
    for (std::size_t i = 0; i < family.size(); ++i) {
        double nrm;
        if (family.setting == Setting::laguerre_seq)
            nrm = norm_seq(family.seq_members[i], spec);
        else
            nrm = norm_fn(family.fn_members[i], spec);
        rep.boundedness.per_member.push_back(nrm);
        rep.boundedness.max_norm = std::max(rep.boundedness.max_norm, nrm);
    }

    rep.tail = find_tail_radius(family, cfg, res);
    rep.verdicts[rep.tail->condition] = to_string(rep.tail->verdict);

    if (family.setting == Setting::laguerre_seq) {
        std::shared_ptr<const GammaTable> table = res.gamma;
        if (!table) {
            int need = cfg.n_max;
            for (const SeqVec& a : family.seq_members)
                need = std::max(need, static_cast<int>(a.size()) - 1);
            table = std::make_shared<GammaTable>(build_gamma_table(std::min(need, 64), family.alpha));
        }
        rep.seq_eqc = eqc_modulus_seq(family, *table, cfg);
        rep.verdicts["P_bs"] = to_string(rep.seq_eqc->verdict);
    } else {
        rep.eqc = eqc_modulus_fn(family, cfg, res);
        rep.verdicts[rep.eqc->condition] = to_string(rep.eqc->verdict);
    }

    if (family.setting == Setting::laguerre_fn && cfg.compute_head) {
        HeadReport head;
        head.delta_grid = cfg.delta_grid;
        std::sort(head.delta_grid.begin(), head.delta_grid.end(), std::greater<>());
        for (double d : head.delta_grid) {
            double sup = 0.0;
            for (const GridFunction& f : family.fn_members)
                sup = std::max(sup, head_mass(f, d, family.alpha, family.p));
            head.head.push_back(sup);
        }
        head.verdict = head.head.back() < cfg.epsilon ? VerdictKind::pass : VerdictKind::fail;
        rep.head = head;
        rep.verdicts["P_a0"] = to_string(head.verdict);
    }

    if (family.setting == Setting::laguerre_fn && family.p == 2.0) {
        L2CriterionReport l2;
        l2.coeff_count = cfg.n_max;
        const QuadratureRule rule = gauss_gen_laguerre(96, family.alpha);
        for (const GridFunction& f : family.fn_members) {
            const CoeffVec c = analyze(f, family.alpha, cfg.n_max, rule);
            double m = 0.0;
            for (double v : c.values) m = std::max(m, std::fabs(v));
            l2.per_member_max_coeff.push_back(m);
            l2.max_coeff = std::max(l2.max_coeff, m);
        }
        const bool bounded = std::isfinite(l2.max_coeff);
        l2.combined = (rep.eqc && rep.eqc->verdict == VerdictKind::pass && bounded)
                          ? VerdictKind::pass
                          : (rep.eqc && rep.eqc->verdict == VerdictKind::inconclusive
                                 ? VerdictKind::inconclusive
                                 : VerdictKind::fail);
        rep.l2 = l2;
        rep.verdicts["l2_criterion"] = to_string(l2.combined);
    }
    return rep;
}

namespace {

FamilySpec synthesized_family(const FamilySpec& family, double p_out) {
    FamilySpec out;
    out.setting = Setting::laguerre_fn;
    out.alpha = family.alpha;
    out.p = p_out;
    out.family_label = family.family_label + ":synthesized";
    for (std::size_t i = 0; i < family.seq_members.size(); ++i) {
        out.fn_members.push_back(synthesize(CoeffVec(family.seq_members[i].values, family.alpha)));
        out.labels.push_back(family.labels.size() > i ? family.labels[i] : "member");
    }
    return out;
}

FamilySpec analyzed_family(const FamilySpec& family, double p_out,
                           const DiagnosticsResources& res) {
    FamilySpec out;
    out.setting = Setting::laguerre_seq;
    out.alpha = family.alpha;
    out.p = p_out;
    out.family_label = family.family_label + ":analyzed";
    const QuadratureRule rule = gauss_gen_laguerre(96, family.alpha);
    for (std::size_t i = 0; i < family.fn_members.size(); ++i) {
        const CoeffVec c = analyze(family.fn_members[i], family.alpha, res.coeff_count, rule);
        out.seq_members.emplace_back(c.values, family.alpha);
        out.labels.push_back(family.labels.size() > i ? family.labels[i] : "member");
    }
    return out;
}

FamilySpec hankel_family(const FamilySpec& family, double p_out,
                         const DiagnosticsResources& res) {
    FamilySpec out;
    out.setting = Setting::bessel_fn;
    out.alpha = family.alpha;
    out.p = p_out;
    out.family_label = family.family_label + ":hankel";
    for (std::size_t i = 0; i < family.fn_members.size(); ++i) {
        const GridFunction& f = family.fn_members[i];
        const HankelParams hp = HankelParams::make(
            family.alpha, f.decay_radius() + (f.compact_support() ? 0.0 : 4.0));
        out.fn_members.push_back(
            hankel_sampled(f, hp, res.transform_y_max, res.transform_samples));
        out.labels.push_back(family.labels.size() > i ? family.labels[i] : "member");
    }
    return out;
}

std::shared_ptr<const GammaTable> require_gamma(const FamilySpec& family,
                                                const DiagnosticsConfig& cfg,
                                                const DiagnosticsResources& res) {
    if (res.gamma) return res.gamma;
    int need = cfg.n_max;
    for (const SeqVec& a : family.seq_members)
        need = std::max(need, static_cast<int>(a.size()) - 1);
    return std::make_shared<GammaTable>(build_gamma_table(std::min(need, 64), family.alpha));
}

} // namespace

PegoReport pego_cross_check(PegoDirection direction, const FamilySpec& family,
                            const DiagnosticsConfig& cfg, const DiagnosticsResources& res) {
    PegoReport rep;
    rep.direction = direction;
    const double p_conj = NormSpec(family.p, family.alpha, family.setting).conjugate();

    switch (direction) {
        case PegoDirection::lL_a: {
            if (family.setting != Setting::laguerre_seq)
                throw std::invalid_argument("pego lL_a: expects a sequence family");
            rep.hypothesis_tail = find_tail_radius(family, cfg, res);
            const FamilySpec fn = synthesized_family(family, p_conj);
            rep.conclusion_eqc = eqc_modulus_fn(fn, cfg, res);
            // shapes of the proof's two-term bound: truncation tail + N M h
            const NormSpec spec(family.p, family.alpha, Setting::laguerre_seq);
            double max_norm = 0.0;
            for (const SeqVec& a : family.seq_members)
                max_norm = std::max(max_norm, norm_seq(a, spec));
            const double n_star = rep.hypothesis_tail->found_r.value_or(cfg.r_max);
            const double delta_min = rep.conclusion_eqc->delta_grid.back();
            double tail_at_n = 0.0;
            for (const SeqVec& a : family.seq_members)
                tail_at_n = std::max(tail_at_n,
                                     tail_mass_seq(a, static_cast<int>(n_star), family.p));
            rep.notes["bound_shape_tail_term"] =
                2.0 * std::exp(0.5 * cfg.m0) * tail_at_n;
            rep.notes["bound_shape_nmh_term"] =
                n_star * max_norm * delta_min * std::exp(0.5 * cfg.m0);
            rep.notes["measured_omega_at_delta_min"] = rep.conclusion_eqc->omega.back();
            break;
        }
        case PegoDirection::lL_b: {
            if (family.setting != Setting::laguerre_fn)
                throw std::invalid_argument("pego lL_b: expects a Laguerre function family");
            rep.hypothesis_eqc = eqc_modulus_fn(family, cfg, res);
            const FamilySpec seq = analyzed_family(family, p_conj, res);
            rep.conclusion_tail = find_tail_radius(seq, cfg, res);
            break;
        }
        case PegoDirection::lL_c: {
            if (family.setting != Setting::laguerre_seq)
                throw std::invalid_argument("pego lL_c: expects a sequence family");
            rep.hypothesis_seq_eqc = eqc_modulus_seq(family, *require_gamma(family, cfg, res), cfg);
            const FamilySpec fn = synthesized_family(family, p_conj);
            rep.conclusion_tail = find_tail_radius(fn, cfg, res);
            break;
        }
        case PegoDirection::lL_d: {
            if (family.setting != Setting::laguerre_fn)
                throw std::invalid_argument("pego lL_d: expects a Laguerre function family");
            if (!(family.alpha.value() > 0.5))
                throw std::invalid_argument("pego lL_d: requires alpha > 1/2");
            rep.hypothesis_tail = find_tail_radius(family, cfg, res);
            HeadReport head;
            head.delta_grid = cfg.delta_grid;
            std::sort(head.delta_grid.begin(), head.delta_grid.end(), std::greater<>());
            for (double d : head.delta_grid) {
                double sup = 0.0;
                for (const GridFunction& f : family.fn_members)
                    sup = std::max(sup, head_mass(f, d, family.alpha, family.p));
                head.head.push_back(sup);
            }
            head.verdict = head.head.back() < cfg.epsilon ? VerdictKind::pass : VerdictKind::fail;
            rep.hypothesis_head = head;
            const FamilySpec seq = analyzed_family(family, p_conj, res);
            rep.conclusion_seq_eqc = eqc_modulus_seq(seq, *require_gamma(seq, cfg, res), cfg);
            break;
        }
        case PegoDirection::He_forward: {
            if (family.setting != Setting::bessel_fn)
                throw std::invalid_argument("pego He_forward: expects a Bessel family");
            rep.hypothesis_tail = find_tail_radius(family, cfg, res);
            const FamilySpec hat = hankel_family(family, p_conj, res);
            rep.conclusion_eqc = eqc_modulus_fn(hat, cfg, res);
            break;
        }
        case PegoDirection::He_backward: {
            if (family.setting != Setting::bessel_fn)
                throw std::invalid_argument("pego He_backward: expects a Bessel family");
            rep.hypothesis_eqc = eqc_modulus_fn(family, cfg, res);
            const FamilySpec hat = hankel_family(family, p_conj, res);
            rep.conclusion_tail = find_tail_radius(hat, cfg, res);
            break;
        }
    }
    return rep;
}

CompactOperatorReport compact_operator_demo(const GridFunction& u, const GridFunction& v,
                                            const FamilySpec& family, const HankelParams& params,
                                            const DiagnosticsConfig& cfg,
                                            const DiagnosticsResources& res) {
    if (family.setting != Setting::bessel_fn)
        throw std::invalid_argument("compact_operator_demo: expects a Bessel family");
    CompactOperatorReport rep{find_tail_radius(family, cfg, res), {}};

    FamilySpec image;
    image.setting = Setting::bessel_fn;
    image.alpha = family.alpha;
    image.p = family.p;
    image.family_label = family.family_label + ":image";
    for (std::size_t i = 0; i < family.fn_members.size(); ++i) {
        const GridFunction vf = GridFunction::multiply(v, family.fn_members[i]);
        HankelParams hp = params;
        hp.x_max = std::max(params.x_max, vf.decay_radius());
        const GridFunction ghat =
            hankel_sampled(vf, hp, res.transform_y_max, res.transform_samples);
        image.fn_members.push_back(GridFunction::multiply(u, ghat));
        image.labels.push_back(family.labels.size() > i ? family.labels[i] : "member");
    }
    rep.image_report = verdict(image, cfg, res);
    return rep;
}

// ---- JSON -------------------------------------------------------------------

namespace {

json to_json(const TailReport& r) {
    json j;
    j["condition"] = r.condition;
    j["epsilon"] = r.epsilon;
    j["r_grid"] = r.r_grid;
    j["sup_tail"] = r.sup_tail;
    if (r.found_r) j["found_r"] = *r.found_r;
    else j["found_r"] = nullptr;
    j["sup_at_r_max"] = r.sup_at_r_max;
    j["per_member_r"] = r.per_member_r;
    j["verdict"] = to_string(r.verdict);
    return j;
}

json to_json(const EqcReport& r) {
    json j;
    j["condition"] = r.condition;
    j["delta_grid"] = r.delta_grid;
    j["omega"] = r.omega;
    j["t_grid"] = r.t_grid;
    j["h_union"] = r.h_union;
    j["refinement_shift"] = r.refinement_shift;
    j["verdict"] = to_string(r.verdict);
    j["note"] = "sampled lower bound of the supremum";
    return j;
}

json to_json(const SeqEqcReport& r) {
    json j;
    j["curve"] = r.curve;
    if (r.found_n) j["found_n"] = *r.found_n;
    else j["found_n"] = nullptr;
    j["verdict"] = to_string(r.verdict);
    return j;
}

json to_json(const HeadReport& r) {
    json j;
    j["condition"] = "P_a0";
    j["delta_grid"] = r.delta_grid;
    j["head"] = r.head;
    j["verdict"] = to_string(r.verdict);
    return j;
}

json config_json(const DiagnosticsConfig& c) {
    json j;
    j["epsilon"] = c.epsilon;
    j["m0"] = c.m0;
    j["r_max"] = c.r_max;
    j["delta_grid"] = c.delta_grid;
    j["t_points"] = c.t_points;
    j["h_points_per_delta"] = c.h_points_per_delta;
    j["n_max"] = c.n_max;
    j["compute_head"] = c.compute_head;
    j["refinement_check"] = c.refinement_check;
    return j;
}

json resources_json(const DiagnosticsResources& r) {
    json j;
    j["angular_order"] = r.angular_order;
    j["norm_panels"] = r.norm_panels;
    j["norm_panel_order"] = r.norm_panel_order;
    j["transform_samples"] = r.transform_samples;
    j["coeff_count"] = r.coeff_count;
    j["transform_y_max"] = r.transform_y_max;
    j["gamma_table"] = r.gamma ? json{{"k_max", r.gamma->k_max()},
                                      {"normalization", GammaTable::normalization}}
                               : json(nullptr);
    return j;
}

std::string setting_name(Setting s) {
    switch (s) {
        case Setting::laguerre_fn: return "laguerre_fn";
        case Setting::laguerre_seq: return "laguerre_seq";
        default: return "bessel_fn";
    }
}

std::string timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

} // namespace

std::string DiagnosticsReport::to_json(bool with_timestamp) const {
    json j;
    j["schema"] = 1;
    j["setting"] = setting_name(setting);
    j["alpha"] = alpha;
    j["p"] = std::isinf(p) ? json("inf") : json(p);
    j["family"] = {{"label", family_label}, {"members", member_labels}};
    j["config"] = config_json(config);
    j["resources"] = resources_json(resources_used);
    j["boundedness"] = {{"max_norm", boundedness.max_norm},
                        {"per_member", boundedness.per_member}};
    if (tail) j["tail"] = laghank::to_json(*tail);
    if (eqc) j["equicontinuity"] = laghank::to_json(*eqc);
    if (head) j["head"] = laghank::to_json(*head);
    if (seq_eqc) j["seq_equicontinuity"] = laghank::to_json(*seq_eqc);
    if (l2) {
        j["l2_criterion"] = {{"coeff_count", l2->coeff_count},
                             {"per_member_max_coeff", l2->per_member_max_coeff},
                             {"max_coeff", l2->max_coeff},
                             {"combined", to_string(l2->combined)}};
    }
    j["verdicts"] = verdicts;
    if (with_timestamp) j["metadata"] = {{"generated_at", timestamp_now()}};
    return j.dump(2);
}

std::string PegoReport::to_json() const {
    json j;
    j["schema"] = 1;
    j["direction"] = to_string(direction);
    json hyp, conc;
    if (hypothesis_tail) hyp["tail"] = laghank::to_json(*hypothesis_tail);
    if (hypothesis_eqc) hyp["equicontinuity"] = laghank::to_json(*hypothesis_eqc);
    if (hypothesis_seq_eqc) hyp["seq_equicontinuity"] = laghank::to_json(*hypothesis_seq_eqc);
    if (hypothesis_head) hyp["head"] = laghank::to_json(*hypothesis_head);
    if (conclusion_tail) conc["tail"] = laghank::to_json(*conclusion_tail);
    if (conclusion_eqc) conc["equicontinuity"] = laghank::to_json(*conclusion_eqc);
    if (conclusion_seq_eqc) conc["seq_equicontinuity"] = laghank::to_json(*conclusion_seq_eqc);
    j["hypothesis"] = hyp;
    j["conclusion"] = conc;
    j["notes"] = notes;
    return j.dump(2);
}

std::string CompactOperatorReport::to_json() const {
    json j;
    j["schema"] = 1;
    j["input_tail"] = laghank::to_json(input_tail);
    j["image_report"] = json::parse(image_report.to_json(false));
    return j.dump(2);
}

} // namespace laghank
