#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace coursealloc {

// Deterministic random stream. Streams are identified by (seed, purpose, index)
// so that, e.g., adding an agent never shifts the draws of the existing ones.
// All derived quantities (unit doubles, bounded ints, shuffles) are produced by
// our own code rather than std distributions, so a (seed, purpose, index)
// triple yields the same sequence on every platform.
class Rng {
public:
    enum class Purpose : std::uint32_t {
        agent = 1,    // one stream per agent in the round scheduler
        order = 2,    // agent-order permutations
        sample = 3,   // preference sampling from a profile
        friends = 4,  // friendship network generation
        alloc = 5,    // per-student random allocation
        generic = 6,
    };

    Rng(std::uint64_t seed, Purpose purpose, std::uint64_t index = 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(purpose),
                          static_cast<std::uint32_t>(index),
                          static_cast<std::uint32_t>(index >> 32)};
        engine_.seed(seq);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0,1), 53 random bits.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [0,n), unbiased (multiply-shift with rejection).
    std::uint64_t next_below(std::uint64_t n) {
        assert(n > 0);
        unsigned __int128 mul = static_cast<unsigned __int128>(engine_()) * n;
        auto low = static_cast<std::uint64_t>(mul);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                mul = static_cast<unsigned __int128>(engine_()) * n;
                low = static_cast<std::uint64_t>(mul);
            }
        }
        return static_cast<std::uint64_t>(mul >> 64);
    }

    int next_int(int n) { return static_cast<int>(next_below(static_cast<std::uint64_t>(n))); }

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[next_below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace coursealloc
