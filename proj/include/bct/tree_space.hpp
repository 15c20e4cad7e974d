#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bct {

/// Default cap on per-symbol count slots (m * nodes of the maximal tree).
inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

/// The bounded tree universe T_L: alphabet size m and maximal depth L.
///
/// Nodes of the maximal tree are indexed depth-major. A node whose context
/// is (s_1 .. s_d), oldest symbol first, has ordinal
///     o = ((s_d * m + s_{d-1}) * m + ...) + s_1
/// within its level, i.e. lookups consume the most recent symbol first.
/// Children of (depth d, ordinal o) are (d+1, o*m + k) for k = 0..m-1,
/// where k is the new oldest symbol.
class TreeSpace {
public:
    TreeSpace(int m, int max_depth);

    int m() const { return m_; }
    int max_depth() const { return max_depth_; }  // L

    /// First node id of the given level: (m^d - 1) / (m - 1).
    std::size_t level_offset(int d) const { return offsets_[d]; }
    std::size_t level_size(int d) const { return offsets_[d + 1] - offsets_[d]; }

    /// Node count of the maximal tree, (m^(L+1) - 1) / (m - 1).
    std::size_t num_nodes() const { return offsets_[max_depth_ + 1]; }
    std::size_t node_slots() const { return num_nodes() * static_cast<std::size_t>(m_); }

    /// Throws ValidationError when node_slots() would exceed the budget.
    void require_within_budget(std::size_t budget = kDefaultNodeBudget) const;

    bool operator==(const TreeSpace& o) const {
        return m_ == o.m_ && max_depth_ == o.max_depth_;
    }

private:
    int m_;
    int max_depth_;
    std::vector<std::size_t> offsets_;  // level_offset(0..L+1); saturates at overflow
    bool overflowed_ = false;
};

/// |T_L| via |T_0| = 1, |T_{k+1}| = |T_k|^m + 1. Doubly exponential; the
/// result is returned as a double and may be +inf.
double count_trees(const TreeSpace& space);

}  // namespace bct
