#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "coursealloc/engine.hpp"
#include "coursealloc/metrics.hpp"
#include "coursealloc/problem.hpp"

namespace coursealloc {

struct SearchConfig {
    double alpha = 0.8;
    int rounds = 50;
    // Plain DSA only: restrict moves to seat-valid values. DSA_RC always does.
    bool capacity_aware = false;
};

// Per-run evaluation tables: unary utilities per (agent, value) and weighted
// friend links. A candidate value's utility against a assignment is
//   unary[agent][value] + sum over friends of reward * overlap(value, friend's value).
class SearchContext {
public:
    SearchContext(const Problem& problem, const DomainTable& domain);

    const Problem& problem() const { return *problem_; }
    const DomainTable& domain() const { return *domain_; }

    double value_utility(int agent, int value, const std::vector<int>& assignment) const;

    // Per-course occupancy implied by a assignment, over all agents.
    std::vector<int> occupancy(const std::vector<int>& assignment) const;
    // Same, leaving out one agent (a mover vacates its current seats).
    std::vector<int> occupancy_excluding(int agent, const std::vector<int>& assignment) const;

    // A value is valid when every one of its courses still has a seat left
    // once the deciding agent's own seats are excluded.
    bool value_valid(int value, const std::vector<int>& occupancy_others, int q) const;

    // Max-utility valid value (ties: lowest domain index); nullopt when no
    // value is valid against the assignment.
    std::optional<int> best_valid_value(int agent, const std::vector<int>& assignment, int q) const;

private:
    const Problem* problem_;
    const DomainTable* domain_;
    std::vector<std::vector<int>> unary_;
    struct Link {
        int peer;
        double reward;
    };
    std::vector<std::vector<Link>> links_;
};

// Courses of `current` whose occupancy (self included) exceeds q, i.e. the
// overflow test an agent applies to its own assignment.
std::vector<int> overfull_courses(const Bundle& current, const std::vector<int>& occupancy, int q);

// Among those, the course with the largest deviation beyond q (ties: lowest
// course index); nullopt when none overflow.
std::optional<int> worst_overfull_course(const Bundle& current, const std::vector<int>& occupancy,
                                         int q);

// Overflow-proportional repair gate: (max_students - q) / max_students.
double repair_probability(int max_students, int q);

// Among the bundles that contain every course in `required` (the still-valid
// courses, padded up to size b with over-full ones), picks the one maximizing
// `utility` (ties: lowest domain index).
template <typename UtilityFn>
int min_conflict_select(const DomainTable& domain, const std::vector<bool>& required,
                        UtilityFn&& utility) {
    int required_total = 0;
    for (bool r : required) required_total += r ? 1 : 0;

    int best = -1;
    double best_u = -std::numeric_limits<double>::infinity();
    for (int v = 0; v < domain.size(); ++v) {
        const Bundle& bundle = domain.bundle(v);
        int contained = 0;
        for (int c : bundle) {
            if (required[static_cast<std::size_t>(c)]) ++contained;
        }
        if (contained < required_total) continue;
        const double u = utility(v);
        if (u > best_u) {
            best = v;
            best_u = u;
        }
    }
    if (best < 0) {
        // Only reachable outside the documented precondition (more valid
        // courses than the bundle size); widen to the whole domain.
        for (int v = 0; v < domain.size(); ++v) {
            const double u = utility(v);
            if (u > best_u) {
                best = v;
                best_u = u;
            }
        }
    }
    return best;
}

// Repair fallback for an agent that faces fewer available courses than its
// bundle size: keep every course that still has seats and fill up with the
// least harmful rest, maximizing the agent's utility.
int min_conflict_max_util(const SearchContext& ctx, int agent, const std::vector<int>& assignment,
                          int q);

// One DSA decision against the given joint assignment: with probability alpha
// adopt the utility-maximizing value (restricted to valid values if
// capacity_aware), keeping the current value on ties or when nothing improves.
int dsa_step(const SearchContext& ctx, int agent, int value, const std::vector<int>& assignment,
             const SearchConfig& config, Rng& rng);

// One DSA_RC decision: if the current bundle holds over-capacity courses,
// repair with probability beta derived from the worst overflow; otherwise act
// like capacity-aware DSA.
int dsa_rc_step(const SearchContext& ctx, int agent, int value, const std::vector<int>& assignment,
                const SearchConfig& config, Rng& rng);

struct SearchOutcome {
    Solution final_solution;
    Solution best_solution;  // anytime best under (illegal, -utility)
    AnytimeKey best_key;
    std::vector<RoundTrace> trace;
    std::vector<AnytimeKey> anytime_curve;
};

SearchOutcome run_dsa(const Problem& problem, const SearchConfig& config, std::uint64_t seed);
SearchOutcome run_dsa_rc(const Problem& problem, const SearchConfig& config, std::uint64_t seed);

}  // namespace coursealloc
