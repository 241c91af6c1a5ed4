#include "coursealloc/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace coursealloc {

int overflow_from_counts(const std::vector<int>& counts, int q) {
    int total = 0;
    for (int c : counts) total += std::max(0, c - q);
    return total;
}

int illegal_assignments(const Problem& problem, const Solution& solution) {
    int total = overflow_from_counts(seat_counts(solution, problem.m), problem.q);
    for (const Bundle& bundle : solution.bundles)
        total += std::max(0, problem.b - static_cast<int>(bundle.size()));
    return total;
}

std::optional<double> gini(const std::vector<double>& utilities) {
    double sum = 0.0;
    for (double u : utilities) sum += u;
    if (utilities.empty() || sum <= 0.0) return std::nullopt;

    double differences = 0.0;
    for (double a : utilities) {
        for (double b : utilities) differences += std::abs(a - b);
    }
    return differences / (2.0 * static_cast<double>(utilities.size()) * sum);
}

Positional positional_utilities(const std::vector<double>& utilities, const AgentOrder& order) {
    const std::size_t n = order.order.size();
    if (n == 0) throw std::invalid_argument("positional utilities need at least one student");
    Positional p;
    p.first = utilities[static_cast<std::size_t>(order.order[0])];
    p.middle = utilities[static_cast<std::size_t>(order.order[n / 2])];
    p.last = utilities[static_cast<std::size_t>(order.order[n - 1])];
    return p;
}

RunReport make_report(const Problem& problem, const Solution& solution, const AgentOrder& order,
                      const ReportMeta& meta) {
    RunReport r;
    r.algorithm = meta.algorithm;
    r.seed = meta.seed;
    r.n = problem.n;
    r.m = problem.m;
    r.b = problem.b;
    r.q = problem.q;
    r.f = problem.f;
    r.w = problem.w;
    r.rounds = meta.rounds;
    r.alpha = meta.alpha;

    long long course_part = 0;
    double friend_part = 0.0;
    for (int i = 0; i < problem.n; ++i) {
        course_part += course_utility(problem, i, solution.bundles[static_cast<std::size_t>(i)]);
        friend_part += friendship_utility(problem, i, solution);
    }
    r.course_utility = static_cast<double>(course_part);
    r.friendship_utility = friend_part;
    r.total_utility = r.course_utility + r.friendship_utility;
    r.illegal = illegal_assignments(problem, solution);

    const std::vector<double> utilities = per_student_utilities(problem, solution);
    const Positional pos = positional_utilities(utilities, order);
    r.first = pos.first;
    r.middle = pos.middle;
    r.last = pos.last;

    if (auto g = gini(utilities)) {
        r.gini = *g;
        r.gini_defined = true;
    } else {
        r.gini = std::nan("");
        r.gini_defined = false;
    }
    return r;
}

}  // namespace coursealloc
