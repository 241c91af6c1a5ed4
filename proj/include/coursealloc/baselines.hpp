#pragma once

#include <cstdint>

#include "coursealloc/metrics.hpp"
#include "coursealloc/problem.hpp"

namespace coursealloc {

// Uniformly random permutation of [0,n) drawn from the run seed.
AgentOrder random_order(int n, std::uint64_t seed);

struct HbsStats {
    int draft_rounds = 0;
    int swaps = 0;
    bool swap_cap_hit = false;
};

// Draft mechanism: round after round, students in draft order pick one course
// each, taking the free-seat course of maximal marginal utility — course
// reward plus rewards for friends already enrolled there. A concluding
// add-drop phase lets each student in turn make the best single
// course-reward-improving swap into a free seat, until a full pass changes
// nothing. Never seats anyone beyond capacity; when n*b > m*q students may
// end short of b courses.
Solution hbs(const Problem& problem, const AgentOrder& order, HbsStats* stats = nullptr);

// Serial dictatorship: students in order pick the full bundle maximizing
// course utility plus friendship utility against already-assigned students,
// restricted to bundles whose courses all have free seats; when none exists,
// falls back to the min-conflict/max-utility selection.
Solution rsd(const Problem& problem, const AgentOrder& order);

// Everyone takes their top-b courses, in parallel, ignoring seats and friends.
Solution greedy(const Problem& problem);

// Everyone draws a uniformly random bundle from their own stream.
Solution random_alloc(const Problem& problem, std::uint64_t seed);

}  // namespace coursealloc
