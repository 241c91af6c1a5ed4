#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace coursealloc {

// A multiset of complete strict rankings, as read from a PrefLib strict-order
// file. Orders are 0-based course permutations; duplicates are merged into
// multiplicities.
struct PreferenceProfile {
    int alternative_count = 0;
    std::vector<std::vector<int>> orders;
    std::vector<int> multiplicities;

    int voter_count() const {
        int total = 0;
        for (int mult : multiplicities) total += mult;
        return total;
    }
};

struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
    int line;
};

// Parses the strict-order-complete layout: '#'-prefixed metadata lines, then
// ranking lines "count: a1, a2, ..., am" with 1-based alternative ids. Every
// ranking must be a complete permutation; declared NUMBER ALTERNATIVES /
// NUMBER VOTERS headers are checked against the body. Throws ParseError with
// the offending line number.
PreferenceProfile parse_strict_order(const std::string& text);

PreferenceProfile load_preflib_file(const std::string& path);

}  // namespace coursealloc
