#include "coursealloc/experiment.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "coursealloc/baselines.hpp"
#include "coursealloc/local_search.hpp"

namespace coursealloc {

namespace {

const std::vector<Algorithm> kAll = {Algorithm::dsa_rc, Algorithm::dsa, Algorithm::hbs,
                                     Algorithm::rsd,    Algorithm::greedy, Algorithm::random};

}  // namespace

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
    for (Algorithm a : kAll) {
        if (name == algorithm_name(a)) return a;
    }
    return std::nullopt;
}

const char* algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::dsa_rc: return "dsa_rc";
        case Algorithm::dsa: return "dsa";
        case Algorithm::hbs: return "hbs";
        case Algorithm::rsd: return "rsd";
        case Algorithm::greedy: return "greedy";
        case Algorithm::random: return "random";
    }
    return "?";
}

const std::vector<Algorithm>& all_algorithms() { return kAll; }

std::string algorithm_name_list() {
    std::string out;
    for (Algorithm a : kAll) {
        if (!out.empty()) out += ", ";
        out += algorithm_name(a);
    }
    return out;
}

const char* axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::n: return "n";
        case SweepAxis::q: return "q";
        case SweepAxis::w: return "w";
    }
    return "?";
}

std::optional<SweepAxis> axis_from_name(const std::string& name) {
    if (name == "n") return SweepAxis::n;
    if (name == "q") return SweepAxis::q;
    if (name == "w") return SweepAxis::w;
    return std::nullopt;
}

RunReport run_single(const Problem& problem, Algorithm algorithm, std::uint64_t seed,
                     const SolveParams& params, const std::optional<std::vector<int>>& fixed_order) {
    problem.validate();
    const AgentOrder order =
        fixed_order ? AgentOrder{*fixed_order, seed} : random_order(problem.n, seed);

    Solution solution;
    std::vector<AnytimeKey> curve;
    std::string reported_name = algorithm_name(algorithm);
    const SearchConfig config{params.alpha, params.rounds, params.dsa_capacity_aware};

    switch (algorithm) {
        case Algorithm::dsa_rc: {
            SearchOutcome outcome = run_dsa_rc(problem, config, seed);
            solution = std::move(outcome.best_solution);
            curve = std::move(outcome.anytime_curve);
            break;
        }
        case Algorithm::dsa: {
            SearchOutcome outcome = run_dsa(problem, config, seed);
            solution = std::move(outcome.best_solution);
            curve = std::move(outcome.anytime_curve);
            if (params.dsa_capacity_aware) reported_name = "dsa_ca";
            break;
        }
        case Algorithm::hbs: {
            HbsStats stats;
            solution = hbs(problem, order, &stats);
            if (stats.swap_cap_hit)
                std::cerr << "hbs: add-drop stopped at the swap cap (seed " << seed << ")\n";
            break;
        }
        case Algorithm::rsd:
            solution = rsd(problem, order);
            break;
        case Algorithm::greedy:
            solution = greedy(problem);
            break;
        case Algorithm::random:
            solution = random_alloc(problem, seed);
            break;
    }

    RunReport report =
        make_report(problem, solution, order, ReportMeta{reported_name, seed, params.rounds, params.alpha});
    report.anytime_curve = std::move(curve);
    return report;
}

std::vector<RunReport> run_sweep(const ExperimentSpec& spec, const PreferenceProfile* profile,
                                 const Problem* fixed_problem) {
    if (spec.values.empty()) throw std::invalid_argument("sweep: no sweep values given");
    if (spec.repetitions < 1) throw std::invalid_argument("sweep: repetitions must be at least 1");
    if (spec.algorithms.empty()) throw std::invalid_argument("sweep: no algorithms given");

    Problem base;
    if (spec.axis == SweepAxis::n) {
        if (profile == nullptr)
            throw std::invalid_argument("sweep: the n axis needs a preference profile to resample");
    } else if (fixed_problem != nullptr) {
        base = *fixed_problem;
    } else if (profile != nullptr) {
        base = make_problem(*profile, spec.base, spec.base_seed, "generated");
    } else {
        throw std::invalid_argument("sweep: need a problem or a preference profile");
    }

    std::vector<RunReport> reports;
    reports.reserve(spec.values.size() * static_cast<std::size_t>(spec.repetitions) *
                    spec.algorithms.size());
    for (double value : spec.values) {
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            const std::uint64_t seed = spec.base_seed + static_cast<std::uint64_t>(rep);

            Problem problem;
            if (spec.axis == SweepAxis::n) {
                GenParams params = spec.base;
                params.n = static_cast<int>(std::llround(value));
                problem = make_problem(*profile, params, seed, "generated");
            } else {
                problem = base;
                if (spec.axis == SweepAxis::q) {
                    problem.q = static_cast<int>(std::llround(value));
                } else {
                    problem.w = value;
                }
            }

            // One order per repetition, shared by every algorithm so inputs
            // are identical across them.
            const AgentOrder order = random_order(problem.n, seed);
            for (Algorithm algorithm : spec.algorithms) {
                try {
                    reports.push_back(run_single(problem, algorithm, seed, spec.solve, order.order));
                } catch (const std::exception& e) {
                    std::cerr << "sweep: " << algorithm_name(algorithm) << " at "
                              << axis_name(spec.axis) << "=" << value << " rep " << rep
                              << " failed: " << e.what() << '\n';
                }
            }
        }
    }
    return reports;
}

}  // namespace coursealloc
