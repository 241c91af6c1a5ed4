#include "coursealloc/domain.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace coursealloc {

namespace {

// Domains beyond this are refused rather than silently eating memory.
constexpr std::int64_t kMaxDomainSize = 5'000'000;
constexpr int kOverlapCacheLimit = 2048;

std::int64_t binomial(int m, int b) {
    std::int64_t result = 1;
    b = std::min(b, m - b);
    for (int k = 1; k <= b; ++k) {
        result = result * (m - b + k) / k;
        if (result > kMaxDomainSize) return kMaxDomainSize + 1;
    }
    return result;
}

}  // namespace

bool is_canonical_bundle(const Bundle& bundle, int course_count) {
    for (std::size_t i = 0; i < bundle.size(); ++i) {
        if (bundle[i] < 0 || bundle[i] >= course_count) return false;
        if (i > 0 && bundle[i] <= bundle[i - 1]) return false;
    }
    return true;
}

int bundle_overlap(const Bundle& a, const Bundle& b) {
    int shared = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++shared, ++i, ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return shared;
}

DomainTable::DomainTable(int course_count, int bundle_size)
    : m_(course_count), b_(bundle_size) {
    if (bundle_size < 1) throw std::invalid_argument("domain: bundle size must be at least 1");
    if (bundle_size > course_count)
        throw std::invalid_argument("domain: bundle size exceeds course count");
    const std::int64_t count = binomial(m_, b_);
    if (count > kMaxDomainSize)
        throw std::invalid_argument("domain: C(m,b) too large to enumerate");
    bundles_.reserve(static_cast<std::size_t>(count));

    Bundle current(static_cast<std::size_t>(b_));
    std::iota(current.begin(), current.end(), 0);
    while (true) {
        bundles_.push_back(current);
        int i = b_ - 1;
        while (i >= 0 && current[static_cast<std::size_t>(i)] == m_ - b_ + i) --i;
        if (i < 0) break;
        ++current[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < b_; ++j)
            current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }

    if (size() <= kOverlapCacheLimit) {
        const int d = size();
        overlap_.assign(static_cast<std::size_t>(d) * d, 0);
        for (int a = 0; a < d; ++a) {
            overlap_[static_cast<std::size_t>(a) * d + a] = b_;
            for (int b2 = a + 1; b2 < d; ++b2) {
                const int s = bundle_overlap(bundles_[a], bundles_[b2]);
                overlap_[static_cast<std::size_t>(a) * d + b2] = s;
                overlap_[static_cast<std::size_t>(b2) * d + a] = s;
            }
        }
    }
}

int DomainTable::index_of(const Bundle& bundle) const {
    auto it = std::lower_bound(bundles_.begin(), bundles_.end(), bundle);
    if (it == bundles_.end() || *it != bundle)
        throw std::out_of_range("domain: bundle not in domain");
    return static_cast<int>(it - bundles_.begin());
}

int DomainTable::overlap(int a, int b) const {
    if (!overlap_.empty()) return overlap_[static_cast<std::size_t>(a) * size() + b];
    return bundle_overlap(bundles_[a], bundles_[b]);
}

}  // namespace coursealloc
