#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bct/context_tree.hpp"
#include "bct/sequence.hpp"
#include "bct/tree_space.hpp"

namespace bct {

/// Transition counts c_{sk}(z) for every node s of the maximal tree: the
/// number of positions t in L+1..n with z_t = k and s a suffix of z_1^{t-1}.
/// The first L symbols are conditioned on and produce no events.
class CountTable {
public:
    /// One O(nL) pass. Throws ValidationError when n <= L or the space
    /// exceeds the node budget.
    CountTable(const Sequence& z, const TreeSpace& space,
               std::size_t budget = kDefaultNodeBudget);

    const TreeSpace& space() const { return space_; }

    /// Count vector of length m for the node, all-zero when never observed.
    std::span<const std::int64_t> node_counts(const Context& s) const;
    std::span<const std::int64_t> node_counts(std::size_t node) const {
        return {counts_.data() + node * static_cast<std::size_t>(space_.m()),
                static_cast<std::size_t>(space_.m())};
    }

    /// Number of transition events, n - L.
    std::int64_t transitions() const { return transitions_; }

private:
    TreeSpace space_;
    std::vector<std::int64_t> counts_;  // num_nodes * m
    std::int64_t transitions_ = 0;
};

}  // namespace bct
