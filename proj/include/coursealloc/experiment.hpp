#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coursealloc/generator.hpp"
#include "coursealloc/metrics.hpp"
#include "coursealloc/preflib.hpp"
#include "coursealloc/problem.hpp"

namespace coursealloc {

enum class Algorithm { dsa_rc, dsa, hbs, rsd, greedy, random };

std::optional<Algorithm> algorithm_from_name(const std::string& name);
const char* algorithm_name(Algorithm algorithm);
const std::vector<Algorithm>& all_algorithms();
std::string algorithm_name_list();  // "dsa_rc, dsa, hbs, rsd, greedy, random"

struct SolveParams {
    int rounds = 50;
    double alpha = 0.8;
    // Ablation: make plain DSA move only to seat-valid values. Reported as
    // "dsa_ca" so rows stay distinguishable.
    bool dsa_capacity_aware = false;
};

// One allocation end to end: draw (or accept) the agent order, run the
// algorithm, measure. DSA and DSA_RC report their anytime-best solution.
RunReport run_single(const Problem& problem, Algorithm algorithm, std::uint64_t seed,
                     const SolveParams& params,
                     const std::optional<std::vector<int>>& fixed_order = std::nullopt);

enum class SweepAxis { n, q, w };

const char* axis_name(SweepAxis axis);
std::optional<SweepAxis> axis_from_name(const std::string& name);

struct ExperimentSpec {
    SweepAxis axis = SweepAxis::n;
    std::vector<double> values;
    int repetitions = 50;
    std::uint64_t base_seed = 1;
    std::vector<Algorithm> algorithms;
    GenParams base;      // n/q/b/f/w when generating from a profile
    SolveParams solve;
};

// Runs every algorithm on identical inputs per (sweep value, repetition);
// repetition r uses seed base_seed + r. The n axis resamples students and
// friendships from `profile` each repetition; the q and w axes hold the
// problem fixed (given directly, or generated once from the profile at the
// base seed) and vary only the agent order. A failing run is reported on
// stderr and skipped; the sweep continues.
std::vector<RunReport> run_sweep(const ExperimentSpec& spec, const PreferenceProfile* profile,
                                 const Problem* fixed_problem);

}  // namespace coursealloc
