#include "qconc/cli.hpp"

#include "qconc/bounds.hpp"
#include "qconc/concurrence.hpp"
#include "qconc/figure.hpp"
#include "qconc/io.hpp"
#include "qconc/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <ostream>

namespace qconc::cli {

namespace {

constexpr double kDualRouteTol = 1e-10;
constexpr double kBracketTol = 1e-9;

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

void warn(std::ostream& err, const std::string& warning) {
    if (!warning.empty()) err << "warning: " << warning << '\n';
}

}  // namespace

int cmd_concurrence(const std::string& state_path, std::ostream& out, std::ostream& err) {
    try {
        std::string warning;
        const PureState s = load_state_file(state_path, &warning);
        warn(err, warning);
        const double c_vec = concurrence(s);
        const double c_pur = concurrence_from_purity(s);
        const double diff = std::abs(c_vec - c_pur);
        emit(out, {{"dim_a", s.dim_a},
                   {"dim_b", s.dim_b},
                   {"concurrence", c_vec},
                   {"concurrence_purity", c_pur},
                   {"difference", diff}});
        if (diff > kDualRouteTol) {
            err << "error: concurrence routes disagree by " << format_sig(diff) << '\n';
            return kExitInvariant;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_pair(const std::string& path_x, const std::string& path_y, std::ostream& out,
             std::ostream& err) {
    try {
        std::string warning;
        const PureState x = load_state_file(path_x, &warning);
        const PureState y = load_state_file(path_y, &warning);
        warn(err, warning);
        const double c_vec = pair_concurrence(x, y);
        const double c_closed = pair_concurrence_closed_form(x, y);
        const double diff = std::abs(c_vec - c_closed);
        const Complex ov = inner_product(x, y);
        emit(out, {{"pair_concurrence", c_vec},
                   {"pair_concurrence_closed_form", c_closed},
                   {"difference", diff},
                   {"overlap", {ov.real(), ov.imag()}},
                   {"class", to_string(classify_pair(x, y))}});
        if (diff > kDualRouteTol) {
            err << "error: pair concurrence routes disagree by " << format_sig(diff) << '\n';
            return kExitInvariant;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_classify(const std::vector<std::string>& state_paths, double tol, std::ostream& out,
                 std::ostream& err) {
    try {
        if (state_paths.size() < 2) throw std::invalid_argument("classify: need >= 2 state files");
        std::string warning;
        std::vector<PureState> states;
        states.reserve(state_paths.size());
        for (const std::string& p : state_paths) states.push_back(load_state_file(p, &warning));
        warn(err, warning);
        nlohmann::json j{{"class", to_string(classify_set(states, tol))},
                         {"states", states.size()},
                         {"tol", tol}};
        if (states.size() == 2) {
            const PairConditions c = pair_conditions(states[0], states[1]);
            j["trace_a"] = c.trace_a;
            j["trace_b"] = c.trace_b;
            j["overlap"] = c.overlap;
        }
        emit(out, j);
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_bounds(const std::string& superposition_path, const BoundsFlags& flags,
               std::ostream& out, std::ostream& err) {
    try {
        std::string warning;
        const Superposition s = load_superposition_file(superposition_path, &warning);
        warn(err, warning);
        BoundsOptions opt;
        if (!flags.force_class.empty()) opt.force_class = ortho_class_from_string(flags.force_class);
        opt.two_qubit_refine = flags.two_qubit_refine;
        opt.with_reference = flags.with_reference;
        const BoundsReport r = bounds_auto(s, opt);
        emit(out, bounds_report_to_json(r));
        if (r.lower - kBracketTol > r.exact || r.exact > r.upper + kBracketTol) {
            err << "error: bracket violated (lower=" << format_sig(r.lower)
                << ", exact=" << format_sig(r.exact) << ", upper=" << format_sig(r.upper)
                << ")\n";
            return kExitInvariant;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err) {
    try {
        EnsembleSpec spec;
        spec.ortho_class = ortho_class_from_string(flags.ortho_class);
        spec.dim_a = flags.dim_a;
        spec.dim_b = flags.dim_b;
        spec.m = flags.m;
        spec.trials = flags.trials;
        spec.seed = flags.seed;
        spec.tolerance = flags.tol;
        validate_ensemble_spec(spec);
        const VerificationReport r = verify(spec);
        emit(out, verification_report_to_json(r));
        return r.violations == 0 ? kExitOk : kExitInvariant;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_figure1(int samples, const std::string& out_path, std::ostream& out, std::ostream& err) {
    try {
        const std::vector<FigureRow> rows = figure_sweep(samples);
        if (out_path.empty()) {
            write_figure_csv(out, rows);
        } else {
            std::ofstream f(out_path);
            if (!f) throw std::invalid_argument("cannot write file: " + out_path);
            write_figure_csv(f, rows);
            if (!f.good()) throw std::invalid_argument("write failed: " + out_path);
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Concurrence of bipartite pure states and of their superpositions"};
    app.require_subcommand(1);

    std::string state_path, path_x, path_y, superposition_path, out_path;
    std::vector<std::string> classify_paths;
    double classify_tol = kClassifyTol;
    BoundsFlags bounds_flags;
    VerifyFlags verify_flags;
    int samples = 201;

    CLI::App* c_conc = app.add_subcommand("concurrence", "Concurrence of a state (both routes)");
    c_conc->add_option("state", state_path, "state JSON file")->required();

    CLI::App* c_pair = app.add_subcommand("pair", "Pair concurrence of two states (both routes)");
    c_pair->add_option("state-x", path_x, "first state JSON file")->required();
    c_pair->add_option("state-y", path_y, "second state JSON file")->required();

    CLI::App* c_cls = app.add_subcommand("classify", "Orthogonality class of two or more states");
    c_cls->add_option("states", classify_paths, "state JSON files")->required()->expected(2, -1);
    c_cls->add_option("--tol", classify_tol, "classification tolerance");

    CLI::App* c_bounds = app.add_subcommand("bounds", "Bounds report for a superposition");
    c_bounds->add_option("superposition", superposition_path, "superposition JSON file")
        ->required();
    c_bounds->add_option("--force-class", bounds_flags.force_class,
                         "evaluate this (weaker) class's bounds");
    c_bounds->add_flag("--two-qubit-refine", bounds_flags.two_qubit_refine,
                       "sharper caps for 2x2 two-state input");
    c_bounds->add_flag("--reference", bounds_flags.with_reference,
                       "attach comparison bounds (two states)");

    CLI::App* c_verify = app.add_subcommand("verify", "Monte Carlo bound certification");
    c_verify->add_option("--class", verify_flags.ortho_class, "target orthogonality class");
    c_verify->add_option("--dims", [&verify_flags](const std::vector<std::string>& vals) {
                 if (vals.size() != 2) return false;
                 try {
                     std::size_t pos_a = 0, pos_b = 0;
                     verify_flags.dim_a = std::stol(vals[0], &pos_a);
                     verify_flags.dim_b = std::stol(vals[1], &pos_b);
                     return pos_a == vals[0].size() && pos_b == vals[1].size();
                 } catch (const std::exception&) {
                     return false;
                 }
             }, "local dimensions N1 N2")->expected(2);
    c_verify->add_option("--m", verify_flags.m, "states per superposition");
    c_verify->add_option("--trials", verify_flags.trials, "number of trials");
    c_verify->add_option("--seed", verify_flags.seed, "random seed");
    c_verify->add_option("--tol", verify_flags.tol, "violation tolerance");

    CLI::App* c_fig = app.add_subcommand("figure1", "Bound-comparison sweep CSV");
    c_fig->add_option("--samples", samples, "number of abscissas (default 201)");
    c_fig->add_option("--out", out_path, "output CSV path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (c_conc->parsed()) return cmd_concurrence(state_path, std::cout, std::cerr);
    if (c_pair->parsed()) return cmd_pair(path_x, path_y, std::cout, std::cerr);
    if (c_cls->parsed()) return cmd_classify(classify_paths, classify_tol, std::cout, std::cerr);
    if (c_bounds->parsed()) return cmd_bounds(superposition_path, bounds_flags, std::cout, std::cerr);
    if (c_verify->parsed()) return cmd_verify(verify_flags, std::cout, std::cerr);
    if (c_fig->parsed()) return cmd_figure1(samples, out_path, std::cout, std::cerr);
    return kExitUsage;
}

}  // namespace qconc::cli
