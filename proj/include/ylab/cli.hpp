#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ylab/analysis.hpp"
#include "ylab/branching.hpp"
#include "ylab/generators.hpp"
#include "ylab/io.hpp"
#include "ylab/oracle.hpp"
#include "ylab/svg.hpp"

namespace ylab::cli {

// Exit codes: 0 success, 1 verification failure, 2 input error, 3 solver or
// internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

namespace detail {

inline double default_eps() {
    if (const char* env = std::getenv("YLAB_EPS")) {
        try {
            return std::stod(env);
        } catch (...) {
            // fall through to the built-in default
        }
    }
    return kDefaultEps;
}

inline Variant parse_variant(const std::string& s) {
    if (s == "maxmin") return Variant::maxmin;
    if (s == "minmin") return Variant::minmin;
    raise(ErrorKind::ParseError, "unknown variant: " + s);
}

struct SolveArgs {
    std::string instance_path;
    std::string variant = "maxmin";
    double eps = default_eps();
    std::string out_path, trace_path, svg_path;
};

inline int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    const Instance inst = load_instance(a.instance_path);
    const RunTrace trace = run_adding(inst, parse_variant(a.variant), a.eps);

    if (trace.initial_pair.size() > 1) {
        const auto& p = trace.initial_pair.picked();
        err << "warning: initial pair has " << trace.initial_pair.size()
            << " tied candidates; picked (" << p.a << "," << p.b << ")\n";
    }
    if (trace.initial_third.size() > 1) {
        err << "warning: initial third point has " << trace.initial_third.size()
            << " tied candidates; picked " << trace.initial_third.picked().point << "\n";
    }
    std::size_t tied_steps = 0;
    for (const auto& s : trace.steps) {
        if (s.size() > 1) ++tied_steps;
    }
    if (tied_steps > 0) {
        err << "warning: " << tied_steps << " insertion step(s) had tied candidates\n";
    }
    if (trace.negative_delta_seen) {
        err << "warning: negative disturbances encountered (triangle inequality violated)\n";
    }

    TourFile tf{inst.name(), trace.final_tour, trace.final_length, true};
    if (a.out_path.empty()) {
        out << tour_to_json(tf).dump(2) << "\n";
    } else {
        save_tour(a.out_path, tf);
    }
    if (!a.trace_path.empty()) {
        write_file(a.trace_path, trace_to_json(inst, trace).dump(2) + "\n");
    }
    if (!a.svg_path.empty()) {
        const auto crossings = inst.has_coords() ? find_crossings(inst, trace.final_tour)
                                                 : std::vector<Crossing>{};
        write_file(a.svg_path, render_tour_svg(inst, trace.final_tour, crossings));
    }
    return kExitOk;
}

struct EnumerateArgs {
    std::string instance_path;
    std::string variant = "maxmin";
    double eps = default_eps();
    std::uint64_t max_nodes = 1'000'000;
    int max_depth = std::numeric_limits<int>::max();
    bool dedup = false;
    std::string report_path;
};

inline int run_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream&) {
    const Instance inst = load_instance(a.instance_path);
    BranchLimits limits;
    limits.max_nodes = a.max_nodes;
    limits.max_depth = a.max_depth;
    const EnumerationOutcome res = enumerate_runs(inst, parse_variant(a.variant), a.eps, limits, a.dedup);
    const BranchReport& r = res.report;

    out << "depth  nodes\n";
    for (std::size_t d = 0; d < r.nodes_per_depth.size(); ++d) {
        out << d << "      " << r.nodes_per_depth[d] << "\n";
    }
    out << "total nodes: " << r.total_nodes << "\n";
    out << "leaves: " << r.leaves << "\n";
    out << "distinct final tours: " << r.distinct_final_tours << "\n";
    if (r.leaves > 0) {
        out << "best final length: " << format_double(r.best_final_length) << "\n";
        out << "worst final length: " << format_double(r.worst_final_length) << "\n";
    }
    out << "truncated: " << (r.truncated ? "yes" : "no") << "\n";
    if (r.dedup_enabled) out << "dedup hits: " << r.dedup_hits << "\n";

    if (!a.report_path.empty()) {
        write_file(a.report_path, branch_report_to_json(r).dump(2) + "\n");
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string instance_path, tour_path;
    bool oracle = false;
    std::optional<double> ref_length;
    double eps = default_eps();
};

inline int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const Instance inst = load_instance(a.instance_path);
    const TourFile tf = load_tour(a.tour_path);

    const auto violations = validate_tour(inst, tf.tour, /*require_complete=*/true);
    if (!violations.empty()) {
        for (const auto& v : violations) {
            switch (v.kind) {
                case ViolationKind::duplicate_id: err << "violation: duplicate id " << v.id << "\n"; break;
                case ViolationKind::out_of_range_id: err << "violation: out-of-range id " << v.id << "\n"; break;
                case ViolationKind::missing_point: err << "violation: missing point " << v.id << "\n"; break;
                case ViolationKind::too_short: err << "violation: tour too short\n"; break;
            }
        }
        out << "valid: no\n";
        return kExitVerifyFail;
    }
    out << "valid: yes\n";

    const double len = tour_length(inst, tf.tour);
    out << "length: " << format_double(len) << "\n";
    if (inst.has_coords()) {
        const auto crossings = find_crossings(inst, tf.tour);
        out << "crossings: " << crossings.size() << "\n";
    }
    if (a.oracle) {
        const OptimalResult opt = optimal_tour(inst);
        out << "optimal length: " << format_double(opt.length) << "\n";
        out << "gap: " << format_double(gap(len, opt.length)) << "\n";
    }
    if (a.ref_length) {
        out << "reference length: " << format_double(*a.ref_length) << "\n";
        out << "gap vs reference: " << format_double(gap(len, *a.ref_length)) << "\n";
    }
    return kExitOk;
}

struct ExperimentArgs {
    std::vector<int> sizes;
    int trials = 20;
    std::uint64_t seed = 1;
    std::string variant = "maxmin";
    double eps = default_eps();
    std::string out_path;
};

inline int run_experiment(const ExperimentArgs& a, std::ostream& out, std::ostream&) {
    std::string csv = experiment_csv_header() + "\n";
    for (int n : a.sizes) {
        const LoopRateReport rep = loop_rate_experiment(n, a.trials, parse_variant(a.variant), a.seed, a.eps);
        csv += experiment_csv_row(rep) + "\n";
    }
    out << csv;
    if (!a.out_path.empty()) write_file(a.out_path, csv);
    return kExitOk;
}

struct GenerateArgs {
    std::vector<std::string> what;
    std::string out_path;
};

inline int run_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
    const std::string& kind = a.what.at(0);
    std::optional<Instance> inst;
    if (const FixtureSpec* fix = find_fixture(kind)) {
        Instance built = fix->build();
        for (const auto& check : fix->check(built)) {
            if (!check.passed) {
                err << "fixture check failed: " << check.name << "\n";
                return kExitInternalError;
            }
        }
        inst = std::move(built);
    } else if (kind == "grid") {
        if (a.what.size() != 2) {
            err << "usage: generate grid <k>\n";
            return kExitInputError;
        }
        inst = gen_grid(std::stoi(a.what[1]));
    } else if (kind == "random") {
        if (a.what.size() != 3) {
            err << "usage: generate random <n> <seed>\n";
            return kExitInputError;
        }
        inst = gen_random_uniform(std::stoi(a.what[1]), std::stoull(a.what[2]));
    } else {
        err << "unknown fixture: " << kind << "\n";
        return kExitInputError;
    }

    const std::string text = instance_to_json(*inst).dump(2) + "\n";
    if (a.out_path.empty()) {
        out << text;
    } else {
        write_file(a.out_path, text);
    }
    return kExitOk;
}

}  // namespace detail

/// Parses and runs one CLI invocation. Streams are injected so tests can run
/// commands in-process.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"insertion-heuristic analysis toolkit for the traveling salesman problem"};
    app.require_subcommand(1);

    detail::SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "run the adding procedure on an instance");
    solve->add_option("instance", solve_args.instance_path, "instance file (native JSON or TSPLIB)")
        ->required();
    solve->add_option("--variant", solve_args.variant, "maxmin or minmin")
        ->check(CLI::IsMember({"maxmin", "minmin"}));
    solve->add_option("--eps", solve_args.eps, "tie tolerance");
    solve->add_option("-o,--out", solve_args.out_path, "tour output path (.tour for TSPLIB form)");
    solve->add_option("--trace", solve_args.trace_path, "write the full run trace as JSON");
    solve->add_option("--svg", solve_args.svg_path, "render the tour as SVG");

    detail::EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "explore every tie-branch of the procedure");
    enumerate->add_option("instance", enum_args.instance_path, "instance file")->required();
    enumerate->add_option("--variant", enum_args.variant)->check(CLI::IsMember({"maxmin", "minmin"}));
    enumerate->add_option("--eps", enum_args.eps, "tie tolerance");
    enumerate->add_option("--max-nodes", enum_args.max_nodes, "node budget before truncation");
    enumerate->add_option("--max-depth", enum_args.max_depth, "depth budget");
    enumerate->add_flag("--dedup", enum_args.dedup, "merge partial states equal as cyclic tours");
    enumerate->add_option("--report", enum_args.report_path, "write the branch report as JSON");

    detail::VerifyArgs verify_args;
    double ref_length_opt = 0.0;
    auto* verify = app.add_subcommand("verify", "check a tour file against an instance");
    verify->add_option("instance", verify_args.instance_path, "instance file")->required();
    verify->add_option("tour", verify_args.tour_path, "tour file (JSON or TSPLIB tour)")->required();
    verify->add_flag("--oracle", verify_args.oracle, "solve exactly and report the gap (small n only)");
    auto* ref_opt = verify->add_option("--ref-length", ref_length_opt,
                                       "published optimal length to compute the gap against");
    verify->add_option("--eps", verify_args.eps, "tie tolerance");

    detail::ExperimentArgs exp_args;
    auto* experiment = app.add_subcommand("experiment", "loop-rate experiment over random instances");
    experiment->add_option("--n", exp_args.sizes, "instance sizes")->required()->delimiter(',');
    experiment->add_option("--trials", exp_args.trials, "trials per size");
    experiment->add_option("--seed", exp_args.seed, "experiment seed");
    experiment->add_option("--variant", exp_args.variant)->check(CLI::IsMember({"maxmin", "minmin"}));
    experiment->add_option("--eps", exp_args.eps, "tie tolerance");
    experiment->add_option("-o,--out", exp_args.out_path, "also write the CSV to this path");

    detail::GenerateArgs gen_args;
    auto* generate = app.add_subcommand("generate", "emit a fixture, grid, or random instance");
    generate
        ->add_option("what", gen_args.what,
                     "maxmin-counterexample | minmin-counterexample | grid <k> | random <n> <seed>")
        ->required()
        ->expected(-1);
    generate->add_option("-o,--out", gen_args.out_path, "instance output path");

    std::vector<const char*> argv;
    argv.push_back("ylab");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*solve) return detail::run_solve(solve_args, out, err);
        if (*enumerate) return detail::run_enumerate(enum_args, out, err);
        if (*verify) {
            if (ref_opt->count() > 0) verify_args.ref_length = ref_length_opt;
            return detail::run_verify(verify_args, out, err);
        }
        if (*experiment) return detail::run_experiment(exp_args, out, err);
        if (*generate) return detail::run_generate(gen_args, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::ParseError ? kExitInputError : kExitInternalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternalError;
    }
    return kExitInputError;
}

}  // namespace ylab::cli
