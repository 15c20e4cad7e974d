#include "bct/tree_space.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bct/errors.hpp"

namespace bct {

TreeSpace::TreeSpace(int m, int max_depth) : m_(m), max_depth_(max_depth) {
    if (m < 2 || m > 255)
        throw ValidationError("alphabet size must be in 2..255, got " + std::to_string(m));
    if (max_depth < 0)
        throw ValidationError("maximal depth must be >= 0, got " + std::to_string(max_depth));

    constexpr std::size_t cap = std::numeric_limits<std::size_t>::max();
    offsets_.resize(static_cast<std::size_t>(max_depth) + 2);
    offsets_[0] = 0;
    std::size_t level = 1;  // m^d
    for (int d = 0; d <= max_depth; ++d) {
        std::size_t next = offsets_[d] + level;
        if (next < offsets_[d]) {  // wrapped
            overflowed_ = true;
            next = cap;
        }
        offsets_[static_cast<std::size_t>(d) + 1] = next;
        if (!overflowed_ && level > cap / static_cast<std::size_t>(m_)) {
            overflowed_ = true;
            level = cap;
        } else if (!overflowed_) {
            level *= static_cast<std::size_t>(m_);
        }
    }
}

void TreeSpace::require_within_budget(std::size_t budget) const {
    std::size_t nodes = num_nodes();
    if (overflowed_ || nodes > budget / static_cast<std::size_t>(m_))
        throw ValidationError("tree space m=" + std::to_string(m_) +
                              " L=" + std::to_string(max_depth_) +
                              " exceeds the node budget of " + std::to_string(budget) +
                              " slots");
}

double count_trees(const TreeSpace& space) {
    double t = 1.0;
    for (int d = 0; d < space.max_depth(); ++d) t = std::pow(t, space.m()) + 1.0;
    return t;
}

}  // namespace bct
