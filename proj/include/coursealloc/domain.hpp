#pragma once

#include <vector>

namespace coursealloc {

// A bundle is a strictly increasing list of distinct course indices.
using Bundle = std::vector<int>;

bool is_canonical_bundle(const Bundle& bundle, int course_count);

// Number of courses two bundles share.
int bundle_overlap(const Bundle& a, const Bundle& b);

// The value domain shared by every agent: all C(m,b) bundles of size b over m
// courses, in lexicographic order. The ordering is the agents' common value
// numbering, so it must be identical across agents, runs, and platforms.
class DomainTable {
public:
    // Enumerates the domain. Throws std::invalid_argument for b < 1, b > m, or
    // a domain too large to materialize.
    DomainTable(int course_count, int bundle_size);

    int course_count() const { return m_; }
    int bundle_size() const { return b_; }
    int size() const { return static_cast<int>(bundles_.size()); }

    const Bundle& bundle(int value) const { return bundles_[value]; }
    const std::vector<Bundle>& bundles() const { return bundles_; }

    // Domain position of a canonical bundle; throws std::out_of_range if the
    // bundle does not belong to this domain.
    int index_of(const Bundle& bundle) const;

    // |bundle(a) ∩ bundle(b)|; cached for small domains.
    int overlap(int a, int b) const;

private:
    int m_ = 0;
    int b_ = 0;
    std::vector<Bundle> bundles_;
    std::vector<int> overlap_;  // size*size when cached, empty otherwise
};

}  // namespace coursealloc
