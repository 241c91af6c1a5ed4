#include "coursealloc/baselines.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "coursealloc/local_search.hpp"
#include "coursealloc/rng.hpp"

namespace coursealloc {

namespace {

// Friendship utility of `student` holding `bundle` against current (possibly
// partial) enrollments.
double friendship_against(const Problem& problem, int student, const Bundle& bundle,
                          const std::vector<Bundle>& enrolled) {
    double u = 0.0;
    for (const FriendRef& fr : problem.friends[static_cast<std::size_t>(student)]) {
        u += friend_reward(problem, fr.rank) *
             bundle_overlap(bundle, enrolled[static_cast<std::size_t>(fr.student)]);
    }
    return u;
}

}  // namespace

AgentOrder random_order(int n, std::uint64_t seed) {
    AgentOrder out;
    out.seed = seed;
    out.order.resize(static_cast<std::size_t>(n));
    std::iota(out.order.begin(), out.order.end(), 0);
    Rng rng(seed, Rng::Purpose::order);
    rng.shuffle(out.order);
    return out;
}

Solution hbs(const Problem& problem, const AgentOrder& order, HbsStats* stats) {
    problem.validate();
    HbsStats local;
    std::vector<Bundle> enrolled(static_cast<std::size_t>(problem.n));
    std::vector<int> counts(static_cast<std::size_t>(problem.m), 0);

    auto insert_course = [](Bundle& bundle, int course) {
        bundle.insert(std::upper_bound(bundle.begin(), bundle.end(), course), course);
    };

    // Marginal utility of adding `course`: its reward plus rewards for friends
    // already sitting in it.
    auto marginal = [&](int student, int course) {
        double u = course_reward(problem, student, course);
        for (const FriendRef& fr : problem.friends[static_cast<std::size_t>(student)]) {
            const Bundle& theirs = enrolled[static_cast<std::size_t>(fr.student)];
            if (std::binary_search(theirs.begin(), theirs.end(), course))
                u += friend_reward(problem, fr.rank);
        }
        return u;
    };

    // Picking rounds in draft order, capped at m.
    for (int round = 0; round < problem.m; ++round) {
        bool picked_any = false;
        for (int pos = 0; pos < problem.n; ++pos) {
            const int student = order.order[static_cast<std::size_t>(pos)];
            Bundle& mine = enrolled[static_cast<std::size_t>(student)];
            if (static_cast<int>(mine.size()) >= problem.b) continue;

            int best_course = -1;
            double best_u = 0.0;
            for (int c = 0; c < problem.m; ++c) {
                if (counts[static_cast<std::size_t>(c)] >= problem.q) continue;
                if (std::binary_search(mine.begin(), mine.end(), c)) continue;
                const double u = marginal(student, c);
                if (best_course < 0 || u > best_u) {
                    best_course = c;
                    best_u = u;
                }
            }
            if (best_course < 0) continue;  // nothing takeable this round
            insert_course(mine, best_course);
            ++counts[static_cast<std::size_t>(best_course)];
            picked_any = true;
        }
        local.draft_rounds = round + 1;
        bool all_full = true;
        for (const Bundle& bundle : enrolled) {
            if (static_cast<int>(bundle.size()) < problem.b) all_full = false;
        }
        if (all_full || !picked_any) break;
    }

    // Add-drop passes: each student in draft order takes their best strictly
    // improving single swap, judged by course rewards; repeat until a pass
    // changes nothing. Swaps never touch other students' course rewards, so
    // the sum of course utilities is a strictly increasing bounded potential
    // and the loop terminates on its own. (Friendship-coupled swap utilities
    // would chase moving targets and cycle; the cap below stays as a guard.)
    const int swap_cap = 10 * std::max(1, problem.n);
    bool changed = true;
    while (changed && !local.swap_cap_hit) {
        changed = false;
        for (int pos = 0; pos < problem.n && !local.swap_cap_hit; ++pos) {
            const int student = order.order[static_cast<std::size_t>(pos)];
            Bundle& mine = enrolled[static_cast<std::size_t>(student)];

            int best_gain = 0;
            int best_out = -1, best_in = -1;
            for (std::size_t oi = 0; oi < mine.size(); ++oi) {
                const int out_reward = course_reward(problem, student, mine[oi]);
                for (int in_course = 0; in_course < problem.m; ++in_course) {
                    if (counts[static_cast<std::size_t>(in_course)] >= problem.q) continue;
                    if (std::binary_search(mine.begin(), mine.end(), in_course)) continue;
                    const int gain = course_reward(problem, student, in_course) - out_reward;
                    if (gain > best_gain) {
                        best_gain = gain;
                        best_out = mine[oi];
                        best_in = in_course;
                    }
                }
            }
            if (best_out >= 0) {
                mine.erase(std::find(mine.begin(), mine.end(), best_out));
                insert_course(mine, best_in);
                --counts[static_cast<std::size_t>(best_out)];
                ++counts[static_cast<std::size_t>(best_in)];
                changed = true;
                if (++local.swaps >= swap_cap) local.swap_cap_hit = true;
            }
        }
    }

    if (stats != nullptr) *stats = local;
    return Solution{std::move(enrolled)};
}

Solution rsd(const Problem& problem, const AgentOrder& order) {
    problem.validate();
    const DomainTable domain(problem.m, problem.b);
    std::vector<Bundle> enrolled(static_cast<std::size_t>(problem.n));
    std::vector<int> counts(static_cast<std::size_t>(problem.m), 0);

    for (int student : order.order) {
        auto utility = [&](int v) {
            return course_utility(problem, student, domain.bundle(v)) +
                   friendship_against(problem, student, domain.bundle(v), enrolled);
        };

        int best = -1;
        double best_u = -std::numeric_limits<double>::infinity();
        for (int v = 0; v < domain.size(); ++v) {
            bool valid = true;
            for (int c : domain.bundle(v)) {
                if (counts[static_cast<std::size_t>(c)] >= problem.q) {
                    valid = false;
                    break;
                }
            }
            if (!valid) continue;
            const double u = utility(v);
            if (u > best_u) {
                best = v;
                best_u = u;
            }
        }
        if (best < 0) {
            // No fully seated bundle left: same construction as the local
            // search repair, against the fixed earlier picks.
            std::vector<bool> has_seat(static_cast<std::size_t>(problem.m));
            for (int c = 0; c < problem.m; ++c)
                has_seat[static_cast<std::size_t>(c)] = counts[static_cast<std::size_t>(c)] < problem.q;
            best = min_conflict_select(domain, has_seat, utility);
        }

        enrolled[static_cast<std::size_t>(student)] = domain.bundle(best);
        for (int c : domain.bundle(best)) ++counts[static_cast<std::size_t>(c)];
    }
    return Solution{std::move(enrolled)};
}

Solution greedy(const Problem& problem) {
    problem.validate();
    Solution s;
    s.bundles.reserve(static_cast<std::size_t>(problem.n));
    for (int i = 0; i < problem.n; ++i) {
        const auto& prefs = problem.pref_order[static_cast<std::size_t>(i)];
        Bundle bundle(prefs.begin(), prefs.begin() + problem.b);
        std::sort(bundle.begin(), bundle.end());
        s.bundles.push_back(std::move(bundle));
    }
    return s;
}

Solution random_alloc(const Problem& problem, std::uint64_t seed) {
    problem.validate();
    const DomainTable domain(problem.m, problem.b);
    Solution s;
    s.bundles.reserve(static_cast<std::size_t>(problem.n));
    for (int i = 0; i < problem.n; ++i) {
        Rng rng(seed, Rng::Purpose::alloc, static_cast<std::uint64_t>(i));
        s.bundles.push_back(domain.bundle(rng.next_int(domain.size())));
    }
    return s;
}

}  // namespace coursealloc
