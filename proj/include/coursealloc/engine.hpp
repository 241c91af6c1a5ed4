#pragma once

#include <functional>
#include <vector>

#include "coursealloc/rng.hpp"

namespace coursealloc {

// Joint assignment snapshot at the end of one executed round.
struct RoundTrace {
    int round = 0;  // 1-based
    std::vector<int> values;
    bool operator==(const RoundTrace&) const = default;
};

// Solution quality key: fewer capacity violations first, then higher utility.
// This is what makes "best solution so far" well-defined on runs that never
// visit a fully valid assignment.
struct AnytimeKey {
    int illegal = 0;
    double utility = 0.0;
    bool operator==(const AnytimeKey&) const = default;
};

inline bool improves(const AnytimeKey& candidate, const AnytimeKey& best) {
    if (candidate.illegal != best.illegal) return candidate.illegal < best.illegal;
    return candidate.utility > best.utility;
}

// Remembers the best joint assignment seen so far under the AnytimeKey order;
// the stored key never worsens.
class AnytimeTracker {
public:
    // Adopts `values` if `key` improves on the best so far; returns whether it did.
    bool offer(const std::vector<int>& values, const AnytimeKey& key) {
        if (has_best_ && !improves(key, best_key_)) return false;
        best_values_ = values;
        best_key_ = key;
        has_best_ = true;
        return true;
    }

    bool has_best() const { return has_best_; }
    const std::vector<int>& best_values() const { return best_values_; }
    const AnytimeKey& best_key() const { return best_key_; }

private:
    std::vector<int> best_values_;
    AnytimeKey best_key_;
    bool has_best_ = false;
};

// Decides agent `agent`'s next value from the current joint assignment and the
// agent's private stream. Must not read anything else that varies.
using StepFn = std::function<int(int agent, const std::vector<int>& assignment, Rng& rng)>;

// Scores a joint assignment for anytime tracking.
using EvalFn = std::function<AnytimeKey(const std::vector<int>& values)>;

struct RoundRunResult {
    std::vector<int> final_values;
    std::vector<RoundTrace> trace;          // exactly `rounds` entries
    AnytimeTracker best;
    std::vector<AnytimeKey> best_by_round;  // tracker key after each round
};

// Round-based broadcast scheduler. Value messages propagate as they are sent:
// within a round agents act one after another in index order, each seeing
// every previously announced decision (the freshest joint assignment), and
// decide with their own private stream. Round boundaries only mark when
// traces are recorded and the tracker is updated; the initial assignment is
// scored before round 1 so the tracker covers every visited state. Fully
// deterministic in (initial, seed streams, rounds). Throws
// std::invalid_argument when rounds < 1 or the stream count does not match
// the agent count.
RoundRunResult run_rounds(std::vector<int> initial, std::vector<Rng> streams, const StepFn& step,
                          const EvalFn& evaluate, int rounds);

}  // namespace coursealloc
