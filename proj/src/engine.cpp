#include "coursealloc/engine.hpp"

#include <stdexcept>
#include <utility>

namespace coursealloc {

RoundRunResult run_rounds(std::vector<int> initial, std::vector<Rng> streams, const StepFn& step,
                          const EvalFn& evaluate, int rounds) {
    if (rounds < 1) throw std::invalid_argument("scheduler: rounds must be at least 1");
    if (initial.size() != streams.size())
        throw std::invalid_argument("scheduler: one stream per agent required");

    const int agent_count = static_cast<int>(initial.size());
    RoundRunResult result;
    result.trace.reserve(static_cast<std::size_t>(rounds));
    result.best_by_round.reserve(static_cast<std::size_t>(rounds));

    std::vector<int> values = std::move(initial);
    result.best.offer(values, evaluate(values));

    for (int round = 1; round <= rounds; ++round) {
        for (int agent = 0; agent < agent_count; ++agent) {
            values[static_cast<std::size_t>(agent)] =
                step(agent, values, streams[static_cast<std::size_t>(agent)]);
        }
        result.trace.push_back(RoundTrace{round, values});
        result.best.offer(values, evaluate(values));
        result.best_by_round.push_back(result.best.best_key());
    }

    result.final_values = std::move(values);
    return result;
}

}  // namespace coursealloc
