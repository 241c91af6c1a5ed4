#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coursealloc/problem.hpp"

namespace coursealloc {

// A problem file may pin the agent order used for order-based mechanisms and
// positional metrics; absent that, the harness draws one from the run seed.
struct LoadedProblem {
    Problem problem;
    std::optional<std::vector<int>> fixed_order;
};

// JSON problem format. Lossless: load(save(p)) == p. Schema violations raise
// std::runtime_error naming the offending field. `metadata` entries (e.g.
// generator seed, synthetic flag) are stored verbatim and ignored on load.
LoadedProblem load_problem(const std::string& path);
LoadedProblem problem_from_json_text(const std::string& text);
std::string problem_to_json_text(const Problem& problem,
                                 const std::map<std::string, std::string>& metadata = {});
void save_problem(const Problem& problem, const std::string& path,
                  const std::map<std::string, std::string>& metadata = {});

}  // namespace coursealloc
