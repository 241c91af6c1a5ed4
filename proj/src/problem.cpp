#include "coursealloc/problem.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace coursealloc {

namespace {

void fail(const std::string& what) { throw std::invalid_argument("problem: " + what); }

}  // namespace

void Problem::validate() const {
    if (n < 0) fail("n must be non-negative");
    if (m < 1) fail("m must be at least 1");
    if (b < 0) fail("b must be non-negative");
    if (b > m) fail("b must not exceed m");
    if (q < 1) fail("q must be at least 1");
    if (f < 1) fail("f must be at least 1");
    if (w < 0) fail("w must be non-negative");
    if (pref_order.size() != static_cast<std::size_t>(n)) fail("pref_order must have n rows");
    if (friends.size() != static_cast<std::size_t>(n)) fail("friends must have n rows");

    std::vector<char> seen;
    for (int i = 0; i < n; ++i) {
        const auto& row = pref_order[static_cast<std::size_t>(i)];
        if (row.size() != static_cast<std::size_t>(m))
            fail("pref_order[" + std::to_string(i) + "] must rank all m courses");
        seen.assign(static_cast<std::size_t>(m), 0);
        for (int c : row) {
            if (c < 0 || c >= m || seen[static_cast<std::size_t>(c)])
                fail("pref_order[" + std::to_string(i) + "] is not a permutation of courses");
            seen[static_cast<std::size_t>(c)] = 1;
        }

        const auto& fr = friends[static_cast<std::size_t>(i)];
        if (fr.size() > static_cast<std::size_t>(f))
            fail("friends[" + std::to_string(i) + "] lists more than f friends");
        for (std::size_t k = 0; k < fr.size(); ++k) {
            if (fr[k].student == i) fail("friends[" + std::to_string(i) + "] contains self");
            if (fr[k].student < 0 || fr[k].student >= n)
                fail("friends[" + std::to_string(i) + "] references unknown student");
            if (fr[k].rank < 1 || fr[k].rank > f)
                fail("friends[" + std::to_string(i) + "] has rank outside [1..f]");
            for (std::size_t l = 0; l < k; ++l) {
                if (fr[l].student == fr[k].student)
                    fail("friends[" + std::to_string(i) + "] contains a duplicate friend");
                if (fr[l].rank == fr[k].rank)
                    fail("friends[" + std::to_string(i) + "] contains a duplicate rank");
            }
            if (k > 0 && fr[k - 1].rank > fr[k].rank)
                fail("friends[" + std::to_string(i) + "] must be sorted by rank");
        }
    }
}

Solution solution_from_values(const DomainTable& domain, const std::vector<int>& values) {
    Solution s;
    s.bundles.reserve(values.size());
    for (int v : values) s.bundles.push_back(domain.bundle(v));
    return s;
}

Rewards::Rewards(const Problem& problem) : m_(problem.m), f_(problem.f), w_(problem.w) {
    reward_.assign(static_cast<std::size_t>(problem.n) * problem.m, 0);
    for (int i = 0; i < problem.n; ++i) {
        const auto& row = problem.pref_order[static_cast<std::size_t>(i)];
        for (int pos = 0; pos < problem.m; ++pos) {
            reward_[static_cast<std::size_t>(i) * m_ + row[static_cast<std::size_t>(pos)]] =
                problem.m - pos;
        }
    }
}

int course_reward(const Problem& problem, int student, int course) {
    const auto& row = problem.pref_order[static_cast<std::size_t>(student)];
    for (int pos = 0; pos < problem.m; ++pos) {
        if (row[static_cast<std::size_t>(pos)] == course) return problem.m - pos;
    }
    throw std::invalid_argument("problem: course not ranked by student");
}

double friend_reward(const Problem& problem, int rank) { return (problem.f - rank + 1) * problem.w; }

int course_utility(const Problem& problem, int student, const Bundle& bundle) {
    int total = 0;
    for (int c : bundle) total += course_reward(problem, student, c);
    return total;
}

double friendship_utility(const Problem& problem, int student, const Solution& solution) {
    const Bundle& mine = solution.bundles[static_cast<std::size_t>(student)];
    double total = 0.0;
    for (const FriendRef& fr : problem.friends[static_cast<std::size_t>(student)]) {
        const int shared = bundle_overlap(mine, solution.bundles[static_cast<std::size_t>(fr.student)]);
        total += friend_reward(problem, fr.rank) * shared;
    }
    return total;
}

double student_utility(const Problem& problem, int student, const Solution& solution) {
    return course_utility(problem, student, solution.bundles[static_cast<std::size_t>(student)]) +
           friendship_utility(problem, student, solution);
}

std::vector<double> per_student_utilities(const Problem& problem, const Solution& solution) {
    std::vector<double> out(static_cast<std::size_t>(problem.n));
    for (int i = 0; i < problem.n; ++i) out[static_cast<std::size_t>(i)] = student_utility(problem, i, solution);
    return out;
}

double total_utility(const Problem& problem, const Solution& solution) {
    long long course_part = 0;
    double friend_part = 0.0;
    for (int i = 0; i < problem.n; ++i) {
        course_part += course_utility(problem, i, solution.bundles[static_cast<std::size_t>(i)]);
        friend_part += friendship_utility(problem, i, solution);
    }
    return static_cast<double>(course_part) + friend_part;
}

std::vector<int> seat_counts(const Solution& solution, int course_count) {
    std::vector<int> counts(static_cast<std::size_t>(course_count), 0);
    for (const Bundle& bundle : solution.bundles) {
        for (int c : bundle) ++counts[static_cast<std::size_t>(c)];
    }
    return counts;
}

std::vector<int> build_unary_table(const Problem& problem, int student, const DomainTable& domain) {
    std::vector<int> table(static_cast<std::size_t>(domain.size()));
    for (int v = 0; v < domain.size(); ++v)
        table[static_cast<std::size_t>(v)] = course_utility(problem, student, domain.bundle(v));
    return table;
}

std::vector<std::vector<double>> build_binary_table(const Problem& problem, int student, int peer,
                                                    const DomainTable& domain) {
    const FriendRef* link = nullptr;
    for (const FriendRef& fr : problem.friends[static_cast<std::size_t>(student)]) {
        if (fr.student == peer) {
            link = &fr;
            break;
        }
    }
    if (link == nullptr)
        throw std::invalid_argument("problem: peer is not a declared friend of student");
    const double reward = friend_reward(problem, link->rank);

    const int d = domain.size();
    std::vector<std::vector<double>> table(static_cast<std::size_t>(d),
                                           std::vector<double>(static_cast<std::size_t>(d)));
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                reward * domain.overlap(a, b);
        }
    }
    return table;
}

}  // namespace coursealloc
