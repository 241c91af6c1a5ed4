#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coursealloc/engine.hpp"
#include "coursealloc/problem.hpp"

namespace coursealloc {

// Student processing order for one run. Order-based mechanisms consume it;
// orderless ones still use it to position the first/middle/last metrics so
// cross-algorithm comparisons stay aligned.
struct AgentOrder {
    std::vector<int> order;  // permutation of [0,n)
    std::uint64_t seed = 0;
};

// All measurements for a single run, plus enough configuration echo to re-run
// the row in isolation.
struct RunReport {
    std::string algorithm;
    std::uint64_t seed = 0;
    int n = 0, m = 0, b = 0, q = 0, f = 0;
    double w = 0.0;
    int rounds = 0;
    double alpha = 0.0;

    double total_utility = 0.0;
    double course_utility = 0.0;
    double friendship_utility = 0.0;
    int illegal = 0;
    double first = 0.0, middle = 0.0, last = 0.0;
    double gini = 0.0;
    bool gini_defined = false;

    // Best (illegal, utility) after each round; empty for one-shot mechanisms.
    std::vector<AnytimeKey> anytime_curve;
};

// Summed seat overflow: sum_c max(0, count_c - q).
int overflow_from_counts(const std::vector<int>& counts, int q);

// Overflow plus, for any student left short of b courses, the missing seats.
int illegal_assignments(const Problem& problem, const Solution& solution);

// Normalized mean absolute utility difference; nullopt when the utilities sum
// to zero (the coefficient is undefined there).
std::optional<double> gini(const std::vector<double>& utilities);

struct Positional {
    double first = 0.0, middle = 0.0, last = 0.0;
};

// Utilities of the students at order positions 0, floor(n/2), n-1.
Positional positional_utilities(const std::vector<double>& utilities, const AgentOrder& order);

struct ReportMeta {
    std::string algorithm;
    std::uint64_t seed = 0;
    int rounds = 0;
    double alpha = 0.0;
};

RunReport make_report(const Problem& problem, const Solution& solution, const AgentOrder& order,
                      const ReportMeta& meta);

}  // namespace coursealloc
