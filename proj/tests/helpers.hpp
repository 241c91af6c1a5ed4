#pragma once

// Shared fixtures and independent oracles. The oracle routines recompute
// utilities straight from the model definition (rank scan + rating scan) and
// must not call the library's utility paths they are checking.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "coursealloc/domain.hpp"
#include "coursealloc/problem.hpp"
#include "coursealloc/rng.hpp"

namespace testutil {

using coursealloc::Bundle;
using coursealloc::DomainTable;
using coursealloc::FriendRef;
using coursealloc::Problem;
using coursealloc::Solution;

// Three students, four courses, bundle size 3, w=2. Preference rewards:
//   Alice:   c0=4 c1=3 c2=2 c3=1
//   Bob:     c0=3 c1=1 c2=4 c3=2
//   Charlie: c0=1 c1=2 c2=3 c3=4
// Friend ratings (reward = (f-rank+1)*w): Alice->Bob 6, Alice->Charlie 4,
// Bob->Charlie 6, Bob->Alice 2, Charlie->Alice 4, Charlie->Bob 2.
inline Problem make_trio(int q = 3) {
    Problem p;
    p.n = 3;
    p.m = 4;
    p.b = 3;
    p.q = q;
    p.f = 3;
    p.w = 2.0;
    p.name = "trio";
    p.pref_order = {{0, 1, 2, 3}, {2, 0, 3, 1}, {3, 2, 1, 0}};
    p.friends = {{{1, 1}, {2, 2}}, {{2, 1}, {0, 3}}, {{0, 2}, {1, 3}}};
    return p;
}

// The allocation worked through by hand: Alice and Bob on {c0,c1,c2}, Charlie
// on {c1,c2,c3}; utilities 35 / 26 / 21.
inline Solution trio_worked_solution() {
    return Solution{{{0, 1, 2}, {0, 1, 2}, {1, 2, 3}}};
}

// --- oracle: utilities from first principles ---

inline int oracle_course_reward(const Problem& p, int student, int course) {
    const auto& row = p.pref_order[static_cast<std::size_t>(student)];
    const auto it = std::find(row.begin(), row.end(), course);
    return p.m - static_cast<int>(it - row.begin());
}

inline double oracle_student_utility(const Problem& p, int student, const Solution& s) {
    double total = 0.0;
    for (int c : s.bundles[static_cast<std::size_t>(student)])
        total += oracle_course_reward(p, student, c);
    for (const FriendRef& fr : p.friends[static_cast<std::size_t>(student)]) {
        int shared = 0;
        for (int c : s.bundles[static_cast<std::size_t>(student)]) {
            const auto& theirs = s.bundles[static_cast<std::size_t>(fr.student)];
            if (std::find(theirs.begin(), theirs.end(), c) != theirs.end()) ++shared;
        }
        total += (p.f - fr.rank + 1) * p.w * shared;
    }
    return total;
}

inline double oracle_total_utility(const Problem& p, const Solution& s) {
    double total = 0.0;
    for (int i = 0; i < p.n; ++i) total += oracle_student_utility(p, i, s);
    return total;
}

struct BruteForceResult {
    double best_utility = 0.0;
    std::vector<int> best_values;
};

// Exhaustive search over all D^n joint assignments. Only for tiny instances.
inline BruteForceResult brute_force_best(const Problem& p, const DomainTable& domain) {
    BruteForceResult result;
    std::vector<int> values(static_cast<std::size_t>(p.n), 0);
    bool first = true;
    while (true) {
        Solution s;
        for (int v : values) s.bundles.push_back(domain.bundle(v));
        const double utility = oracle_total_utility(p, s);
        if (first || utility > result.best_utility) {
            result.best_utility = utility;
            result.best_values = values;
            first = false;
        }
        int i = 0;
        while (i < p.n && ++values[static_cast<std::size_t>(i)] == domain.size()) {
            values[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == p.n) break;
    }
    return result;
}

// Random valid instance for property tests: 1..8 students, small m/b, random
// strict preferences and a contiguous-rank friendship network.
inline Problem random_problem(coursealloc::Rng& rng, int max_n = 8, int max_m = 6) {
    Problem p;
    p.n = 1 + rng.next_int(max_n);
    p.m = 2 + rng.next_int(max_m - 1);
    p.b = 1 + rng.next_int(p.m);
    p.q = 1 + rng.next_int(p.n + 2);
    p.f = 1 + rng.next_int(3);
    p.w = static_cast<double>(rng.next_int(5));
    for (int i = 0; i < p.n; ++i) {
        std::vector<int> prefs(static_cast<std::size_t>(p.m));
        for (int c = 0; c < p.m; ++c) prefs[static_cast<std::size_t>(c)] = c;
        rng.shuffle(prefs);
        p.pref_order.push_back(std::move(prefs));

        std::vector<int> others;
        for (int j = 0; j < p.n; ++j) {
            if (j != i) others.push_back(j);
        }
        rng.shuffle(others);
        const int k = std::min(p.f, p.n - 1);
        std::vector<FriendRef> row;
        for (int pos = 0; pos < k; ++pos)
            row.push_back(FriendRef{others[static_cast<std::size_t>(pos)], pos + 1});
        p.friends.push_back(std::move(row));
    }
    p.validate();
    return p;
}

inline Solution random_solution(const Problem& p, const DomainTable& domain,
                                coursealloc::Rng& rng) {
    Solution s;
    for (int i = 0; i < p.n; ++i) s.bundles.push_back(domain.bundle(rng.next_int(domain.size())));
    return s;
}

}  // namespace testutil
