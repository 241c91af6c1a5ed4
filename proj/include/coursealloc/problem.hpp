#pragma once

#include <string>
#include <vector>

#include "coursealloc/domain.hpp"

namespace coursealloc {

// One directed friendship: `student` is the befriended peer, `rank` how close
// (1 = closest). Ranks within a list are distinct but need not be contiguous,
// so arbitrary rating patterns remain expressible; generated networks always
// use ranks 1..k.
struct FriendRef {
    int student = 0;
    int rank = 1;
    bool operator==(const FriendRef&) const = default;
};

// A course-allocation instance. Preferences are strict: pref_order[i] lists
// the m courses from most to least preferred. Friendships are directed and
// carry no reciprocity requirement.
struct Problem {
    int n = 0;       // students
    int m = 0;       // courses
    int b = 0;       // bundle size (courses per student)
    int q = 1;       // uniform per-course seat capacity
    int f = 3;       // friend-list length; ranks live in [1..f]
    double w = 2.0;  // friendship weight; w = 0 disables friendships

    std::vector<std::vector<int>> pref_order;     // n rows, each a permutation of [0,m)
    std::vector<std::vector<FriendRef>> friends;  // n rows, sorted by rank
    std::string name;

    bool operator==(const Problem&) const = default;

    // Throws std::invalid_argument naming the violated constraint.
    void validate() const;
};

// A joint assignment: one bundle per student. Bundles normally have size b;
// the draft mechanism may leave a student short when n*b > m*q, which the
// metrics count as illegal seats.
struct Solution {
    std::vector<Bundle> bundles;
    bool operator==(const Solution&) const = default;
};

Solution solution_from_values(const DomainTable& domain, const std::vector<int>& values);

// Rank-derived reward tables: course rewards run m..1 down the preference
// order, friend rewards are (f - rank + 1) * w.
class Rewards {
public:
    explicit Rewards(const Problem& problem);
    int course_reward(int student, int course) const {
        return reward_[static_cast<std::size_t>(student) * m_ + course];
    }
    double friend_reward(int rank) const { return (f_ - rank + 1) * w_; }

private:
    int m_;
    int f_;
    double w_;
    std::vector<int> reward_;
};

int course_reward(const Problem& problem, int student, int course);
double friend_reward(const Problem& problem, int rank);

// Sum of the student's course rewards over a bundle.
int course_utility(const Problem& problem, int student, const Bundle& bundle);

// Sum over declared friends of friend reward times shared-course count.
double friendship_utility(const Problem& problem, int student, const Solution& solution);

double student_utility(const Problem& problem, int student, const Solution& solution);
std::vector<double> per_student_utilities(const Problem& problem, const Solution& solution);

// Course utilities plus friendship utilities over all students. Accumulated as
// (sum of course parts) + (sum of friendship parts) so it is bit-identical to
// the report decomposition.
double total_utility(const Problem& problem, const Solution& solution);

// Per-course occupancy; the counts sum to the number of assigned seats.
std::vector<int> seat_counts(const Solution& solution, int course_count);

// The student's course utility over every domain value, in domain order.
std::vector<int> build_unary_table(const Problem& problem, int student, const DomainTable& domain);

// M[a][b] = friend reward of `peer` in `student`'s list, times the overlap of
// domain bundles a and b. Asymmetric: the peer's table toward `student` is a
// different object. Throws std::invalid_argument if `peer` is not a declared
// friend of `student`.
std::vector<std::vector<double>> build_binary_table(const Problem& problem, int student, int peer,
                                                    const DomainTable& domain);

}  // namespace coursealloc
