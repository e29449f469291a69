// laghank: evaluate the Laguerre/Bessel translation toolkit from the command
// line. Subcommands: verify, diagnose, transform, translate, gamma-table.
// Exit codes: 0 success, 1 assertion-suite failure, 2 usage/input error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "laghank/bessel_ops.hpp"
#include "laghank/compactness.hpp"
#include "laghank/laguerre_ops.hpp"
#include "laghank/laguerre_seq.hpp"
#include "laghank/spaces.hpp"
#include "laghank/special_functions.hpp"
#include "laghank/verify_suites.hpp"

using namespace laghank;

namespace {

// range syntax: "a:b:n" -> n values from a to b; "a:b" -> integers a..b; "a" -> {a}
std::vector<double> parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    std::vector<double> out;
    if (parts.size() == 1) {
        out.push_back(std::stod(parts[0]));
    } else if (parts.size() == 2) {
        const double lo = std::stod(parts[0]), hi = std::stod(parts[1]);
        for (double v = lo; v <= hi + 1e-9; v += 1.0) out.push_back(v);
    } else if (parts.size() == 3) {
        const double lo = std::stod(parts[0]), hi = std::stod(parts[1]);
        const int n = std::stoi(parts[2]);
        if (n < 1) throw CLI::ValidationError("range", "count must be >= 1");
        for (int i = 0; i < n; ++i)
            out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1.0));
    } else {
        throw CLI::ValidationError("range", "expected a, a:b or a:b:n");
    }
    return out;
}

struct FamilyArgs {
    std::string family = "gaussian";
    std::string sigma = "1.0";
    std::string shift = "1:5";
    std::string rate = "1.0";
    std::string degree = "0:4";
    std::string ratio = "0.5";
    double radius = 1.0;
    double lambda = 1.0;
};

FamilySpec build_family(const FamilyArgs& args, Setting setting, double alpha, double p) {
    FamilySpec fam;
    fam.setting = setting;
    fam.alpha = AlphaParam(alpha);
    fam.p = p;
    fam.family_label = args.family;

    if (!args.family.empty() && args.family[0] == '@') {
        const std::string path = args.family.substr(1);
        if (setting == Setting::laguerre_seq)
            throw CLI::ValidationError("family", "csv families are function families");
        fam.fn_members.push_back(GridFunction::from_csv(path));
        fam.labels.push_back(path);
        return fam;
    }
    if (args.family == "gaussian") {
        for (double s : parse_range(args.sigma)) {
            fam.fn_members.push_back(GridFunction::gaussian(s));
            fam.labels.push_back("gaussian(" + std::to_string(s) + ")");
        }
    } else if (args.family == "shifted-bump") {
        for (double n : parse_range(args.shift)) {
            fam.fn_members.push_back(GridFunction::bump(n, args.radius));
            fam.labels.push_back("bump(" + std::to_string(n) + "," + std::to_string(args.radius) +
                                 ")");
        }
    } else if (args.family == "exp-decay") {
        for (double r : parse_range(args.rate)) {
            fam.fn_members.push_back(GridFunction::exp_decay(r));
            fam.labels.push_back("exp-decay(" + std::to_string(r) + ")");
        }
    } else if (args.family == "laguerre-r") {
        for (double n : parse_range(args.degree)) {
            fam.fn_members.push_back(GridFunction::laguerre_r_fn((int)n, fam.alpha));
            fam.labels.push_back("R_" + std::to_string((int)n));
        }
    } else if (args.family == "bessel-j") {
        for (double l : parse_range(args.ratio)) {
            fam.fn_members.push_back(GridFunction::bessel_j_fn(fam.alpha, l));
            fam.labels.push_back("j(lambda=" + std::to_string(l) + ")");
        }
    } else if (args.family == "seq-geometric") {
        for (double r : parse_range(args.ratio)) {
            std::vector<double> v(25);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::pow(r, (double)k);
            fam.seq_members.emplace_back(v, fam.alpha);
            fam.labels.push_back("geometric(" + std::to_string(r) + ")");
        }
    } else {
        throw CLI::ValidationError("family", "unknown family " + args.family);
    }
    if (setting == Setting::laguerre_seq && fam.seq_members.empty())
        throw CLI::ValidationError("family", "sequence setting needs a sequence family");
    if (setting != Setting::laguerre_seq && fam.fn_members.empty())
        throw CLI::ValidationError("family", "function setting needs a function family");
    return fam;
}

GridFunction build_single(const FamilyArgs& args, double alpha) {
    if (!args.family.empty() && args.family[0] == '@')
        return GridFunction::from_csv(args.family.substr(1));
    if (args.family == "gaussian") return GridFunction::gaussian(parse_range(args.sigma)[0]);
    if (args.family == "shifted-bump")
        return GridFunction::bump(parse_range(args.shift)[0], args.radius);
    if (args.family == "exp-decay") return GridFunction::exp_decay(parse_range(args.rate)[0]);
    if (args.family == "laguerre-r")
        return GridFunction::laguerre_r_fn((int)parse_range(args.degree)[0], AlphaParam(alpha));
    if (args.family == "bessel-j")
        return GridFunction::bessel_j_fn(AlphaParam(alpha), parse_range(args.ratio)[0]);
    throw CLI::ValidationError("family", "unknown function family " + args.family);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text << "\n";
}

void add_family_flags(CLI::App* cmd, FamilyArgs& args) {
    cmd->add_option("--family", args.family,
                    "family name (gaussian, shifted-bump, exp-decay, laguerre-r, bessel-j, "
                    "seq-geometric) or @file.csv");
    cmd->add_option("--sigma", args.sigma, "gaussian widths, range syntax a:b:n");
    cmd->add_option("--n", args.shift, "bump shifts or polynomial degrees, range syntax");
    cmd->add_option("--rate", args.rate, "exponential decay rates, range syntax");
    cmd->add_option("--degree", args.degree, "laguerre-r degrees, range syntax");
    cmd->add_option("--lambda", args.ratio, "bessel-j frequencies or seq-geometric ratios");
    cmd->add_option("--radius", args.radius, "bump radius");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laguerre/Bessel translation, transform and compactness toolkit"};
    app.require_subcommand(1);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run an identity verification suite");
    std::string suite = "all";
    SuiteOptions sopt;
    std::string verify_out;
    verify->add_option("--suite", suite, "one of special, laguerre, sequences, bessel, bridges, all")
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--alpha", sopt.alpha, "order parameter");
    verify->add_option("--K", sopt.k_max, "sequence table size");
    verify->add_option("--seed", sopt.seed, "seed for randomized checks");
    verify->add_option("--out", verify_out, "JSON report path (default stdout)");

    // ---- diagnose ----
    auto* diagnose = app.add_subcommand("diagnose", "run compactness diagnostics on a family");
    FamilyArgs dargs;
    std::string setting_name = "bessel";
    double dalpha = 0.5, dp = 2.0;
    DiagnosticsConfig dcfg;
    std::string diag_out;
    unsigned dseed = 0;
    add_family_flags(diagnose, dargs);
    diagnose->add_option("--setting", setting_name, "laguerre-fn, laguerre-seq or bessel");
    diagnose->add_option("--alpha", dalpha, "order parameter");
    diagnose->add_option("--p", dp, "norm exponent");
    diagnose->add_option("--epsilon", dcfg.epsilon, "target modulus threshold");
    diagnose->add_option("--m0", dcfg.m0, "translation horizon");
    diagnose->add_option("--r-max", dcfg.r_max, "tail search cap");
    diagnose->add_option("--t-points", dcfg.t_points, "translation grid size");
    diagnose->add_option("--n-max", dcfg.n_max, "sequence index cap");
    diagnose->add_flag("--head", dcfg.compute_head, "also compute the head (near-zero) mass");
    diagnose->add_option("--seed", dseed, "recorded in the report for reproducibility");
    diagnose->add_option("--out", diag_out, "JSON report path (default stdout)");

    // ---- transform ----
    auto* transform = app.add_subcommand("transform", "hankel transform or laguerre coefficients");
    FamilyArgs targs;
    bool do_hankel = false, do_analyze = false;
    double talpha = 0.5, ymax = 8.0, xmax = 12.0;
    int tcount = 129, tN = 16;
    std::string transform_out = "-";
    add_family_flags(transform, targs);
    transform->add_flag("--hankel", do_hankel, "write the hankel transform on a y grid");
    transform->add_flag("--analyze", do_analyze, "write laguerre-fourier coefficients");
    transform->add_option("--alpha", talpha, "order parameter");
    transform->add_option("--ymax", ymax, "transform grid upper end");
    transform->add_option("--xmax", xmax, "integration horizon");
    transform->add_option("--points", tcount, "output grid size");
    transform->add_option("--N", tN, "coefficient count for --analyze");
    transform->add_option("--out", transform_out, "CSV output path");

    // ---- translate ----
    auto* translate = app.add_subcommand("translate", "sample a translated function");
    FamilyArgs trargs;
    bool tr_laguerre = false, tr_bessel = false;
    double tralpha = 0.5, tr_t = 1.0, tr_xmax = 8.0;
    int tr_points = 129;
    std::string translate_out = "-";
    add_family_flags(translate, trargs);
    translate->add_flag("--laguerre", tr_laguerre, "laguerre translation");
    translate->add_flag("--bessel", tr_bessel, "bessel translation");
    translate->add_option("--alpha", tralpha, "order parameter");
    translate->add_option("--t", tr_t, "translation amount");
    translate->add_option("--xmax", tr_xmax, "sampling horizon");
    translate->add_option("--points", tr_points, "sample count");
    translate->add_option("--out", translate_out, "CSV output path");

    // ---- gamma-table ----
    auto* gamma = app.add_subcommand("gamma-table", "build or load the gamma coefficient table");
    double galpha = 1.0;
    int gK = 16;
    std::string gamma_out, gamma_dir = "reports";
    gamma->add_option("--alpha", galpha, "order parameter");
    gamma->add_option("--K", gK, "maximum index");
    gamma->add_option("--out", gamma_out, "CSV export path (defaults to the cache file)");
    gamma->add_option("--report-dir", gamma_dir, "cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            const SuiteReport rep = run_suite(suite, sopt);
            write_text(verify_out, rep.to_json());
            for (const auto& c : rep.checks)
                std::cerr << (c.passed ? "[ok] " : "[FAIL] ") << c.id
                          << " residual=" << c.residual << "\n";
            return rep.all_passed ? 0 : 1;
        }

        if (*diagnose) {
            Setting setting;
            if (setting_name == "laguerre-fn") setting = Setting::laguerre_fn;
            else if (setting_name == "laguerre-seq") setting = Setting::laguerre_seq;
            else if (setting_name == "bessel") setting = Setting::bessel_fn;
            else throw CLI::ValidationError("setting", "unknown setting " + setting_name);

            const FamilySpec fam = build_family(dargs, setting, dalpha, dp);
            DiagnosticsResources res;
            DiagnosticsReport rep = verdict(fam, dcfg, res);
            nlohmann::json j = nlohmann::json::parse(rep.to_json());
            j["seed"] = dseed;
            write_text(diag_out, j.dump(2));
            return 0; // verdicts live in the report
        }

        if (*transform) {
            if (do_hankel == do_analyze)
                throw CLI::ValidationError("transform", "choose exactly one of --hankel/--analyze");
            const GridFunction f = build_single(targs, talpha);
            std::ostringstream csv;
            csv.precision(17);
            if (do_hankel) {
                const HankelParams hp =
                    HankelParams::make(AlphaParam(talpha), std::max(xmax, f.decay_radius()));
                csv << "y,value\n";
                for (int i = 0; i < tcount; ++i) {
                    const double y = ymax * i / (tcount - 1.0);
                    csv << y << ',' << hankel(f, hp, y) << '\n';
                }
            } else {
                const QuadratureRule rule = gauss_gen_laguerre(96, AlphaParam(talpha));
                const CoeffVec c = analyze(f, AlphaParam(talpha), tN, rule);
                csv << "n,value\n";
                for (std::size_t n = 0; n < c.values.size(); ++n)
                    csv << n << ',' << c.values[n] << '\n';
            }
            write_text(transform_out, csv.str());
            return 0;
        }

        if (*translate) {
            if (tr_laguerre == tr_bessel)
                throw CLI::ValidationError("translate", "choose exactly one of --laguerre/--bessel");
            const GridFunction f = build_single(trargs, tralpha);
            GridFunction tf = GridFunction::zero();
            if (tr_laguerre) {
                const auto params = LaguerreTranslationParams::make(AlphaParam(tralpha), 96);
                tf = translate_laguerre(f, tr_t, params);
            } else {
                const auto angular = BesselAngularRule::make(AlphaParam(tralpha), 96);
                tf = translate_bessel(f, tr_t, AlphaParam(tralpha), angular);
            }
            std::ostringstream csv;
            csv.precision(17);
            csv << "x,value\n";
            for (int i = 0; i < tr_points; ++i) {
                const double x = tr_xmax * i / (tr_points - 1.0);
                csv << x << ',' << tf(x) << '\n';
            }
            write_text(translate_out, csv.str());
            return 0;
        }

        if (*gamma) {
            const GammaTable table = GammaTable::load_or_build(gK, AlphaParam(galpha), gamma_dir);
            if (!gamma_out.empty()) table.save_csv(gamma_out);
            std::cerr << "gamma table alpha=" << galpha << " K=" << gK
                      << " sum_residual=" << table.sum_residual()
                      << (table.valid() ? " (valid)" : " (INVALID)") << "\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
