#pragma once

// Randomized invariant suites shared by the unit tests (reduced case counts)
// and the acceptance runner (full counts). Each suite returns the number of
// failed cases and describes failures on stderr.

#include <cstdint>
#include <iostream>

#include "coursealloc/baselines.hpp"
#include "coursealloc/generator.hpp"
#include "coursealloc/local_search.hpp"
#include "helpers.hpp"

namespace testutil {

using namespace coursealloc;

// Anytime monotonicity: per-round best keys never worsen under
// (illegal, -utility), for both search algorithms on random instances.
inline int suite_anytime_monotonicity(int cases, std::uint64_t seed) {
    Rng rng(seed, Rng::Purpose::generic, 1);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        const Problem p = random_problem(rng);
        const SearchConfig config{0.8, 8, false};
        const SearchOutcome outcome = (i % 2 == 0) ? run_dsa_rc(p, config, i) : run_dsa(p, config, i);
        for (std::size_t r = 1; r < outcome.anytime_curve.size(); ++r) {
            if (improves(outcome.anytime_curve[r - 1], outcome.anytime_curve[r])) {
                std::cerr << "anytime worsened at case " << i << " round " << r << '\n';
                ++failures;
                break;
            }
        }
    }
    return failures;
}

// Determinism: identical (problem, algorithm, seed, rounds) inputs give
// identical traces and best solutions.
inline int suite_determinism(int cases, std::uint64_t seed) {
    Rng rng(seed, Rng::Purpose::generic, 2);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        const Problem p = random_problem(rng);
        const SearchConfig config{0.8, 6, false};
        const SearchOutcome a = run_dsa_rc(p, config, i);
        const SearchOutcome b = run_dsa_rc(p, config, i);
        if (a.trace != b.trace || !(a.best_key == b.best_key)) {
            std::cerr << "nondeterministic run at case " << i << '\n';
            ++failures;
        }
    }
    return failures;
}

// Candidate feasibility: whatever best_valid_value returns is seat-valid
// against the snapshot with the mover's own seats excluded.
inline int suite_candidate_feasibility(int cases, std::uint64_t seed) {
    Rng rng(seed, Rng::Purpose::generic, 3);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        const Problem p = random_problem(rng);
        const DomainTable domain(p.m, p.b);
        const SearchContext ctx(p, domain);
        std::vector<int> snapshot;
        for (int a = 0; a < p.n; ++a) snapshot.push_back(rng.next_int(domain.size()));
        const int agent = rng.next_int(p.n);
        const auto others = ctx.occupancy_excluding(agent, snapshot);
        if (const auto v = ctx.best_valid_value(agent, snapshot, p.q)) {
            for (int c : domain.bundle(*v)) {
                if (others[static_cast<std::size_t>(c)] >= p.q) {
                    std::cerr << "invalid candidate at case " << i << '\n';
                    ++failures;
                    break;
                }
            }
        } else {
            // no candidate: verify none exists
            for (int v2 = 0; v2 < domain.size(); ++v2) {
                if (ctx.value_valid(v2, others, p.q)) {
                    std::cerr << "missed valid candidate at case " << i << '\n';
                    ++failures;
                    break;
                }
            }
        }
        // the repair construction keeps every available course
        const int repaired = min_conflict_max_util(ctx, agent, snapshot, p.q);
        int available = 0;
        for (int c = 0; c < p.m; ++c) available += others[static_cast<std::size_t>(c)] < p.q ? 1 : 0;
        if (available < p.b) {
            const Bundle& bundle = domain.bundle(repaired);
            for (int c = 0; c < p.m; ++c) {
                const bool has_seat = others[static_cast<std::size_t>(c)] < p.q;
                const bool in_bundle =
                    std::find(bundle.begin(), bundle.end(), c) != bundle.end();
                if (has_seat && !in_bundle) {
                    std::cerr << "repair dropped an available course at case " << i << '\n';
                    ++failures;
                    break;
                }
            }
        }
    }
    return failures;
}

// The repair gate is a proper probability whenever a course overflows.
inline int suite_beta_range(int cases, std::uint64_t seed) {
    Rng rng(seed, Rng::Purpose::generic, 4);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        const Problem p = random_problem(rng);
        const DomainTable domain(p.m, p.b);
        const SearchContext ctx(p, domain);
        std::vector<int> snapshot;
        for (int a = 0; a < p.n; ++a) snapshot.push_back(rng.next_int(domain.size()));
        const auto occ = ctx.occupancy(snapshot);
        for (int a = 0; a < p.n; ++a) {
            const auto worst =
                worst_overfull_course(domain.bundle(snapshot[static_cast<std::size_t>(a)]), occ, p.q);
            if (!worst) continue;
            const double beta = repair_probability(occ[static_cast<std::size_t>(*worst)], p.q);
            if (!(beta > 0.0 && beta <= 1.0)) {
                std::cerr << "beta out of range (" << beta << ") at case " << i << '\n';
                ++failures;
            }
        }
    }
    return failures;
}

// Domain cardinality C(m,b) and strict lexicographic order.
inline int suite_domain_cardinality(int cases, std::uint64_t seed) {
    Rng rng(seed, Rng::Purpose::generic, 5);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        const int m = 2 + rng.next_int(9);
        const int b = 1 + rng.next_int(m);
        const DomainTable domain(m, b);
        long long expected = 1;
        for (int k = 1; k <= b; ++k) expected = expected * (m - b + k) / k;
        bool ok = domain.size() == expected;
        for (int v = 1; ok && v < domain.size(); ++v)
            ok = domain.bundle(v - 1) < domain.bundle(v);
        if (!ok) {
            std::cerr << "domain failure at m=" << m << " b=" << b << '\n';
            ++failures;
        }
    }
    return failures;
}

// Friendship out-degree is exactly min(f, n-1), lists are clean.
inline int suite_friendship_outdegree(int cases, std::uint64_t seed) {
    Rng rng(seed, Rng::Purpose::generic, 6);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        const int n = 1 + rng.next_int(40);
        const int f = 1 + rng.next_int(5);
        const auto friends = gen_friendships(n, f, i);
        const int expected = std::min(f, n - 1);
        for (int s = 0; s < n; ++s) {
            const auto& row = friends[static_cast<std::size_t>(s)];
            bool ok = static_cast<int>(row.size()) == std::max(0, expected);
            for (std::size_t k = 0; ok && k < row.size(); ++k) {
                ok = row[k].student != s && row[k].rank == static_cast<int>(k) + 1;
                for (std::size_t l = 0; ok && l < k; ++l) ok = row[l].student != row[k].student;
            }
            if (!ok) {
                std::cerr << "friendship failure at case " << i << " student " << s << '\n';
                ++failures;
            }
        }
    }
    return failures;
}

}  // namespace testutil
