#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coursealloc/preflib.hpp"
#include "coursealloc/problem.hpp"

namespace coursealloc {

// n rankings drawn independently with replacement, weighted by multiplicity.
std::vector<std::vector<int>> sample_students(const PreferenceProfile& profile, int n,
                                              std::uint64_t seed);

// min(f, n-1) distinct friends per student, uniformly chosen, in uniformly
// random rank order (ranks 1..k). Directed: i choosing j implies nothing
// about j.
std::vector<std::vector<FriendRef>> gen_friendships(int n, int f, std::uint64_t seed);

struct GenParams {
    int n = 0;
    int q = 1;
    int b = 3;
    int f = 3;
    double w = 2.0;
};

// Assembles a full instance from a preference profile: sampled rankings plus
// a generated friendship network.
Problem make_problem(const PreferenceProfile& profile, const GenParams& params,
                     std::uint64_t seed, const std::string& name = "");

}  // namespace coursealloc
