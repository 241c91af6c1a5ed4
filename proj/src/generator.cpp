#include "coursealloc/generator.hpp"

#include <numeric>
#include <stdexcept>

#include "coursealloc/rng.hpp"

namespace coursealloc {

std::vector<std::vector<int>> sample_students(const PreferenceProfile& profile, int n,
                                              std::uint64_t seed) {
    if (profile.orders.empty()) throw std::invalid_argument("sample: empty preference profile");
    const int voters = profile.voter_count();

    Rng rng(seed, Rng::Purpose::sample);
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int draw = rng.next_int(voters);
        std::size_t pick = 0;
        while (draw >= profile.multiplicities[pick]) {
            draw -= profile.multiplicities[pick];
            ++pick;
        }
        rows.push_back(profile.orders[pick]);
    }
    return rows;
}

std::vector<std::vector<FriendRef>> gen_friendships(int n, int f, std::uint64_t seed) {
    std::vector<std::vector<FriendRef>> out(static_cast<std::size_t>(n));
    const int k = std::min(f, n - 1);
    if (k <= 0) return out;

    for (int i = 0; i < n; ++i) {
        Rng rng(seed, Rng::Purpose::friends, static_cast<std::uint64_t>(i));
        std::vector<int> candidates;
        candidates.reserve(static_cast<std::size_t>(n - 1));
        for (int j = 0; j < n; ++j) {
            if (j != i) candidates.push_back(j);
        }
        // Partial Fisher-Yates: the first k entries are a uniform subset in
        // uniform order; draw order is the rank order.
        for (int pick = 0; pick < k; ++pick) {
            const std::size_t at = static_cast<std::size_t>(pick) +
                                   rng.next_below(candidates.size() - static_cast<std::size_t>(pick));
            std::swap(candidates[static_cast<std::size_t>(pick)], candidates[at]);
            out[static_cast<std::size_t>(i)].push_back(
                FriendRef{candidates[static_cast<std::size_t>(pick)], pick + 1});
        }
    }
    return out;
}

Problem make_problem(const PreferenceProfile& profile, const GenParams& params,
                     std::uint64_t seed, const std::string& name) {
    Problem p;
    p.n = params.n;
    p.m = profile.alternative_count;
    p.b = params.b;
    p.q = params.q;
    p.f = params.f;
    p.w = params.w;
    p.name = name;
    p.pref_order = sample_students(profile, params.n, seed);
    p.friends = gen_friendships(params.n, params.f, seed);
    p.validate();
    return p;
}

}  // namespace coursealloc
