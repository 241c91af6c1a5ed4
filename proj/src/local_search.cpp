#include "coursealloc/local_search.hpp"

#include <utility>

namespace coursealloc {

SearchContext::SearchContext(const Problem& problem, const DomainTable& domain)
    : problem_(&problem), domain_(&domain) {
    unary_.reserve(static_cast<std::size_t>(problem.n));
    links_.resize(static_cast<std::size_t>(problem.n));
    for (int i = 0; i < problem.n; ++i) {
        unary_.push_back(build_unary_table(problem, i, domain));
        for (const FriendRef& fr : problem.friends[static_cast<std::size_t>(i)]) {
            links_[static_cast<std::size_t>(i)].push_back(
                Link{fr.student, friend_reward(problem, fr.rank)});
        }
    }
}

double SearchContext::value_utility(int agent, int value, const std::vector<int>& assignment) const {
    double u = unary_[static_cast<std::size_t>(agent)][static_cast<std::size_t>(value)];
    for (const Link& link : links_[static_cast<std::size_t>(agent)]) {
        u += link.reward * domain_->overlap(value, assignment[static_cast<std::size_t>(link.peer)]);
    }
    return u;
}

std::vector<int> SearchContext::occupancy(const std::vector<int>& assignment) const {
    std::vector<int> counts(static_cast<std::size_t>(domain_->course_count()), 0);
    for (int v : assignment) {
        for (int c : domain_->bundle(v)) ++counts[static_cast<std::size_t>(c)];
    }
    return counts;
}

std::vector<int> SearchContext::occupancy_excluding(int agent,
                                                    const std::vector<int>& assignment) const {
    std::vector<int> counts = occupancy(assignment);
    for (int c : domain_->bundle(assignment[static_cast<std::size_t>(agent)]))
        --counts[static_cast<std::size_t>(c)];
    return counts;
}

bool SearchContext::value_valid(int value, const std::vector<int>& occupancy_others, int q) const {
    for (int c : domain_->bundle(value)) {
        if (occupancy_others[static_cast<std::size_t>(c)] >= q) return false;
    }
    return true;
}

std::optional<int> SearchContext::best_valid_value(int agent, const std::vector<int>& assignment,
                                                   int q) const {
    const std::vector<int> others = occupancy_excluding(agent, assignment);
    int best = -1;
    double best_u = 0.0;
    for (int v = 0; v < domain_->size(); ++v) {
        if (!value_valid(v, others, q)) continue;
        const double u = value_utility(agent, v, assignment);
        if (best < 0 || u > best_u) {
            best = v;
            best_u = u;
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::vector<int> overfull_courses(const Bundle& current, const std::vector<int>& occupancy, int q) {
    std::vector<int> out;
    for (int c : current) {
        if (occupancy[static_cast<std::size_t>(c)] > q) out.push_back(c);
    }
    return out;
}

std::optional<int> worst_overfull_course(const Bundle& current, const std::vector<int>& occupancy,
                                         int q) {
    std::optional<int> worst;
    int worst_overflow = 0;
    for (int c : current) {  // ascending, so ties resolve to the lowest index
        const int over = occupancy[static_cast<std::size_t>(c)] - q;
        if (over > worst_overflow) {
            worst = c;
            worst_overflow = over;
        }
    }
    return worst;
}

double repair_probability(int max_students, int q) {
    return static_cast<double>(max_students - q) / static_cast<double>(max_students);
}

int min_conflict_max_util(const SearchContext& ctx, int agent, const std::vector<int>& assignment,
                          int q) {
    const std::vector<int> others = ctx.occupancy_excluding(agent, assignment);
    std::vector<bool> has_seat(others.size());
    for (std::size_t c = 0; c < others.size(); ++c) has_seat[c] = others[c] < q;
    return min_conflict_select(ctx.domain(), has_seat, [&](int v) {
        return ctx.value_utility(agent, v, assignment);
    });
}

int dsa_step(const SearchContext& ctx, int agent, int value, const std::vector<int>& assignment,
             const SearchConfig& config, Rng& rng) {
    if (rng.next_unit() >= config.alpha) return value;

    std::vector<int> others;
    if (config.capacity_aware) others = ctx.occupancy_excluding(agent, assignment);

    int best = value;
    double best_u = ctx.value_utility(agent, value, assignment);
    for (int v = 0; v < ctx.domain().size(); ++v) {
        if (config.capacity_aware && !ctx.value_valid(v, others, ctx.problem().q)) continue;
        const double u = ctx.value_utility(agent, v, assignment);
        if (u > best_u) {  // strict: ties keep the current value
            best = v;
            best_u = u;
        }
    }
    return best;
}

int dsa_rc_step(const SearchContext& ctx, int agent, int value, const std::vector<int>& assignment,
                const SearchConfig& config, Rng& rng) {
    const int q = ctx.problem().q;
    const std::vector<int> occ = ctx.occupancy(assignment);
    const std::optional<int> max_course =
        worst_overfull_course(ctx.domain().bundle(value), occ, q);

    if (max_course) {
        const int max_students = occ[static_cast<std::size_t>(*max_course)];
        const double beta = repair_probability(max_students, q);
        if (rng.next_unit() < beta) {
            if (auto v = ctx.best_valid_value(agent, assignment, q)) return *v;
            return min_conflict_max_util(ctx, agent, assignment, q);
        }
        return value;
    }

    // No overflow on the current bundle: proceed as capacity-aware DSA. The
    // current value is itself seat-valid here, so a valid candidate always
    // exists and ties keep it.
    SearchConfig aware = config;
    aware.capacity_aware = true;
    return dsa_step(ctx, agent, value, assignment, aware, rng);
}

namespace {

SearchOutcome run_local_search(const Problem& problem, const SearchConfig& config,
                               std::uint64_t seed, bool resource_aware) {
    problem.validate();
    const DomainTable domain(problem.m, problem.b);
    const SearchContext ctx(problem, domain);

    std::vector<int> initial(static_cast<std::size_t>(problem.n));
    std::vector<Rng> streams;
    streams.reserve(static_cast<std::size_t>(problem.n));
    for (int i = 0; i < problem.n; ++i) {
        streams.emplace_back(seed, Rng::Purpose::agent, static_cast<std::uint64_t>(i));
        initial[static_cast<std::size_t>(i)] = streams.back().next_int(domain.size());
    }

    const StepFn step = [&](int agent, const std::vector<int>& assignment, Rng& rng) {
        const int current = assignment[static_cast<std::size_t>(agent)];
        return resource_aware ? dsa_rc_step(ctx, agent, current, assignment, config, rng)
                              : dsa_step(ctx, agent, current, assignment, config, rng);
    };
    const EvalFn evaluate = [&](const std::vector<int>& values) {
        const Solution s = solution_from_values(domain, values);
        return AnytimeKey{illegal_assignments(problem, s), total_utility(problem, s)};
    };

    RoundRunResult run = run_rounds(std::move(initial), std::move(streams), step, evaluate,
                                    config.rounds);

    SearchOutcome out;
    out.final_solution = solution_from_values(domain, run.final_values);
    out.best_solution = solution_from_values(domain, run.best.best_values());
    out.best_key = run.best.best_key();
    out.trace = std::move(run.trace);
    out.anytime_curve = std::move(run.best_by_round);
    return out;
}

}  // namespace

SearchOutcome run_dsa(const Problem& problem, const SearchConfig& config, std::uint64_t seed) {
    return run_local_search(problem, config, seed, /*resource_aware=*/false);
}

SearchOutcome run_dsa_rc(const Problem& problem, const SearchConfig& config, std::uint64_t seed) {
    return run_local_search(problem, config, seed, /*resource_aware=*/true);
}

}  // namespace coursealloc
