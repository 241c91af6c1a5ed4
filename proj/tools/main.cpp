// Command-line front end: single runs, parameter sweeps, problem generation,
// and problem inspection.

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coursealloc/baselines.hpp"
#include "coursealloc/experiment.hpp"
#include "coursealloc/generator.hpp"
#include "coursealloc/preflib.hpp"
#include "coursealloc/problem_io.hpp"
#include "coursealloc/report_io.hpp"

namespace {

using namespace coursealloc;

constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 1;

struct CommonOpts {
    std::string problem_path;
    std::string preflib_path;
    int n = 0;
    int q = 0;
    int b = 3;
    int f = 3;
    double w = 2.0;
    std::uint64_t seed = 1;
    int rounds = 50;
    double alpha = 0.8;
    bool dsa_capacity_aware = false;
};

void add_param_flags(CLI::App* cmd, CommonOpts& opts, bool with_problem_sources) {
    if (with_problem_sources) {
        cmd->add_option("--problem", opts.problem_path, "Problem file (JSON)");
        cmd->add_option("--preflib", opts.preflib_path, "Preference profile (strict orders)");
    }
    cmd->add_option("--n", opts.n, "Student count (profile-generated problems)");
    cmd->add_option("--q", opts.q, "Per-course capacity (overrides the problem file)");
    cmd->add_option("--b", opts.b, "Bundle size")->capture_default_str();
    cmd->add_option("--f", opts.f, "Friends per student")->capture_default_str();
    cmd->add_option("--w", opts.w, "Friendship weight")->capture_default_str();
    cmd->add_option("--seed", opts.seed, "Base seed; all randomness derives from it")
        ->capture_default_str();
    cmd->add_option("--rounds", opts.rounds, "Search rounds (dsa, dsa_rc)")->capture_default_str();
    cmd->add_option("--alpha", opts.alpha, "Move probability (dsa, dsa_rc)")->capture_default_str();
    cmd->add_flag("--dsa-capacity-aware", opts.dsa_capacity_aware,
                  "Restrict plain DSA to seat-valid values (ablation)");
}

// Resolves the problem a command operates on: an explicit file, or one
// generated from a preference profile. Explicitly passed --q/--w override the
// file's values.
LoadedProblem resolve_problem(const CommonOpts& opts, bool w_given) {
    if (!opts.problem_path.empty() && !opts.preflib_path.empty())
        throw CLI::ValidationError("give either --problem or --preflib, not both");
    if (!opts.problem_path.empty()) {
        LoadedProblem loaded = load_problem(opts.problem_path);
        if (opts.q > 0) loaded.problem.q = opts.q;
        if (w_given) loaded.problem.w = opts.w;
        return loaded;
    }
    if (!opts.preflib_path.empty()) {
        if (opts.n < 1) throw CLI::ValidationError("--preflib needs --n");
        if (opts.q < 1) throw CLI::ValidationError("--preflib needs --q");
        const PreferenceProfile profile = load_preflib_file(opts.preflib_path);
        GenParams params{opts.n, opts.q, opts.b, opts.f, opts.w};
        return LoadedProblem{make_problem(profile, params, opts.seed, "generated"), std::nullopt};
    }
    throw CLI::ValidationError("a problem source is required: --problem or --preflib");
}

std::vector<Algorithm> parse_algorithms(const std::vector<std::string>& names) {
    if (names.empty()) return all_algorithms();
    std::vector<Algorithm> out;
    for (const std::string& name : names) {
        const auto algorithm = algorithm_from_name(name);
        if (!algorithm)
            throw CLI::ValidationError("unknown algorithm '" + name + "'; valid names: " +
                                       algorithm_name_list());
        out.push_back(*algorithm);
    }
    return out;
}

void print_report(const RunReport& r) {
    std::cout << "algorithm:          " << r.algorithm << '\n'
              << "seed:               " << r.seed << '\n'
              << "n/m/b/q/f/w:        " << r.n << '/' << r.m << '/' << r.b << '/' << r.q << '/'
              << r.f << '/' << r.w << '\n'
              << "total utility:      " << r.total_utility << '\n'
              << "course utility:     " << r.course_utility << '\n'
              << "friendship utility: " << r.friendship_utility << '\n'
              << "illegal seats:      " << r.illegal << '\n'
              << "first/middle/last:  " << r.first << '/' << r.middle << '/' << r.last << '\n';
    std::cout << "gini:               ";
    if (r.gini_defined) {
        std::cout << r.gini << '\n';
    } else {
        std::cout << "undefined (all utilities zero)\n";
    }
}

int cmd_solve(const CommonOpts& opts, bool w_given, const std::string& algo_name,
              const std::string& csv_path, const std::string& trace_path) {
    const auto algorithm = algorithm_from_name(algo_name);
    if (!algorithm)
        throw CLI::ValidationError("unknown algorithm '" + algo_name + "'; valid names: " +
                                   algorithm_name_list());
    const LoadedProblem loaded = resolve_problem(opts, w_given);
    const SolveParams params{opts.rounds, opts.alpha, opts.dsa_capacity_aware};
    const RunReport report =
        run_single(loaded.problem, *algorithm, opts.seed, params, loaded.fixed_order);
    print_report(report);
    if (!csv_path.empty()) write_reports({report}, csv_path);
    if (!trace_path.empty()) write_anytime_trace(report, trace_path);
    return 0;
}

int cmd_sweep(const CommonOpts& opts, bool w_given, const std::string& axis_str,
              const std::vector<double>& values, int reps,
              const std::vector<std::string>& algo_names, const std::string& out_dir) {
    const auto axis = axis_from_name(axis_str);
    if (!axis) throw CLI::ValidationError("--sweep must be one of: n, q, w");

    ExperimentSpec spec;
    spec.axis = *axis;
    spec.values = values;
    spec.repetitions = reps;
    spec.base_seed = opts.seed;
    spec.algorithms = parse_algorithms(algo_names);
    spec.base = GenParams{opts.n, opts.q, opts.b, opts.f, opts.w};
    spec.solve = SolveParams{opts.rounds, opts.alpha, opts.dsa_capacity_aware};

    std::optional<PreferenceProfile> profile;
    std::optional<Problem> fixed;
    if (!opts.preflib_path.empty()) profile = load_preflib_file(opts.preflib_path);
    if (!opts.problem_path.empty()) {
        LoadedProblem loaded = load_problem(opts.problem_path);
        if (opts.q > 0) loaded.problem.q = opts.q;
        if (w_given) loaded.problem.w = opts.w;
        fixed = std::move(loaded.problem);
    }
    if (*axis == SweepAxis::n && !profile)
        throw CLI::ValidationError("an n sweep resamples students and needs --preflib");
    if (!profile && !fixed)
        throw CLI::ValidationError("a problem source is required: --problem or --preflib");
    if (*axis != SweepAxis::n && !fixed && opts.n < 1)
        throw CLI::ValidationError("generating the base problem from --preflib needs --n");

    const std::vector<RunReport> reports =
        run_sweep(spec, profile ? &*profile : nullptr, fixed ? &*fixed : nullptr);

    std::filesystem::create_directories(out_dir);
    for (Algorithm algorithm : spec.algorithms) {
        const std::string name = algorithm_name(algorithm);
        // dsa reports as dsa_ca under the ablation flag
        const std::string reported =
            algorithm == Algorithm::dsa && opts.dsa_capacity_aware ? "dsa_ca" : name;
        std::vector<RunReport> mine;
        for (const RunReport& r : reports) {
            if (r.algorithm == reported) mine.push_back(r);
        }
        write_reports(mine, out_dir + "/" + name + ".csv");
    }
    write_plot_data(reports, axis_name(*axis), out_dir + "/plot_data.csv");
    std::cout << "wrote " << reports.size() << " runs to " << out_dir << '\n';
    return 0;
}

int cmd_gen(const CommonOpts& opts, const std::string& out_path, const std::string& name) {
    if (opts.preflib_path.empty()) throw CLI::ValidationError("gen needs --preflib");
    if (opts.n < 1) throw CLI::ValidationError("gen needs --n");
    if (opts.q < 1) throw CLI::ValidationError("gen needs --q");
    const PreferenceProfile profile = load_preflib_file(opts.preflib_path);
    GenParams params{opts.n, opts.q, opts.b, opts.f, opts.w};
    Problem problem = make_problem(profile, params, opts.seed, name);
    save_problem(problem, out_path,
                 {{"generator_seed", std::to_string(opts.seed)},
                  {"source_profile", opts.preflib_path},
                  {"synthetic", "true"}});
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

int cmd_inspect(const std::string& problem_path) {
    const LoadedProblem loaded = load_problem(problem_path);
    const Problem& p = loaded.problem;
    std::cout << "name:      " << (p.name.empty() ? "(unnamed)" : p.name) << '\n'
              << "students:  " << p.n << "\ncourses:   " << p.m << "\nbundle:    " << p.b
              << "\ncapacity:  " << p.q << "\nfriends f: " << p.f << "\nweight w:  " << p.w
              << '\n';

    std::vector<int> in_degree(static_cast<std::size_t>(p.n), 0);
    int out_total = 0;
    for (const auto& row : p.friends) {
        out_total += static_cast<int>(row.size());
        for (const FriendRef& fr : row) ++in_degree[static_cast<std::size_t>(fr.student)];
    }
    int in_min = p.n > 0 ? in_degree[0] : 0, in_max = 0;
    for (int d : in_degree) {
        in_min = std::min(in_min, d);
        in_max = std::max(in_max, d);
    }
    std::cout << "friendship arcs: " << out_total << " (out-degree "
              << (p.n > 0 ? static_cast<double>(out_total) / p.n : 0.0) << " per student)\n"
              << "in-degree: min " << in_min << ", max " << in_max << '\n';

    std::cout << "in-degree histogram:\n";
    std::map<int, int> histogram;
    for (int d : in_degree) ++histogram[d];
    for (const auto& [degree, count] : histogram) {
        std::cout << "  " << degree << ": " << count << '\n';
    }

    std::cout << "course demand (students ranking it in their top b):\n";
    for (int c = 0; c < p.m; ++c) {
        int demand = 0;
        for (const auto& prefs : p.pref_order) {
            for (int k = 0; k < p.b; ++k) {
                if (prefs[static_cast<std::size_t>(k)] == c) ++demand;
            }
        }
        std::cout << "  course " << c << ": " << demand << '\n';
    }
    if (loaded.fixed_order) std::cout << "fixed agent order: yes\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Course allocation with friendships: solvers and benchmark harness"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* solve = app.add_subcommand("solve", "Run one algorithm on one problem");
    std::string algo_name = "dsa_rc";
    std::string csv_path, trace_path;
    add_param_flags(solve, opts, true);
    solve->add_option("--algo", algo_name, "Algorithm (" + algorithm_name_list() + ")")->capture_default_str();
    solve->add_option("--csv", csv_path, "Also write the report as CSV");
    solve->add_option("--trace", trace_path, "Write the per-round anytime curve as CSV");

    auto* sweep = app.add_subcommand("sweep", "Sweep a parameter, averaging repeated runs");
    std::string axis_str;
    std::vector<double> values;
    int reps = 50;
    std::vector<std::string> algo_names;
    std::string out_dir = "results";
    add_param_flags(sweep, opts, true);
    sweep->add_option("--sweep", axis_str, "Swept parameter: n, q, or w")->required();
    sweep->add_option("--values", values, "Sweep values")->required()->delimiter(',');
    sweep->add_option("--reps", reps, "Repetitions per sweep point")->capture_default_str();
    sweep->add_option("--algos", algo_names, "Algorithms (default: all)")->delimiter(',');
    sweep->add_option("--out", out_dir, "Output directory")->capture_default_str();

    auto* gen = app.add_subcommand("gen", "Generate a problem file from a preference profile");
    std::string gen_out = "problem.json";
    std::string gen_name;
    add_param_flags(gen, opts, true);
    gen->add_option("--out", gen_out, "Output problem file")->capture_default_str();
    gen->add_option("--name", gen_name, "Problem name");

    auto* inspect = app.add_subcommand("inspect", "Summarize a problem file");
    std::string inspect_path;
    inspect->add_option("--problem", inspect_path, "Problem file (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed())
            return cmd_solve(opts, solve->count("--w") > 0, algo_name, csv_path, trace_path);
        if (sweep->parsed())
            return cmd_sweep(opts, sweep->count("--w") > 0, axis_str, values, reps, algo_names,
                             out_dir);
        if (gen->parsed()) return cmd_gen(opts, gen_out, gen_name);
        if (inspect->parsed()) return cmd_inspect(inspect_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
