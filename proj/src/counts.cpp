#include "bct/counts.hpp"

#include "bct/errors.hpp"

namespace bct {

CountTable::CountTable(const Sequence& z, const TreeSpace& space, std::size_t budget)
    : space_(space) {
    if (z.alphabet().size() != space.m())
        throw ValidationError("sequence alphabet size " + std::to_string(z.alphabet().size()) +
                              " does not match tree space m=" + std::to_string(space.m()));
    const std::size_t L = static_cast<std::size_t>(space.max_depth());
    if (z.size() <= L)
        throw ValidationError("sequence of length " + std::to_string(z.size()) +
                              " has no transitions at maximal depth " + std::to_string(L) +
                              " (need n > L)");
    space.require_within_budget(budget);
    const std::size_t m = static_cast<std::size_t>(space.m());
    counts_.assign(space.num_nodes() * m, 0);
    transitions_ = static_cast<std::int64_t>(z.size() - L);

    auto codes = z.codes();
    for (std::size_t t = L; t < codes.size(); ++t) {
        const Symbol k = codes[t];
        ++counts_[k];  // root node
        std::size_t o = 0;
        for (std::size_t d = 1; d <= L; ++d) {
            o = o * m + codes[t - d];
            ++counts_[(space.level_offset(static_cast<int>(d)) + o) * m + k];
        }
    }
}

std::span<const std::int64_t> CountTable::node_counts(const Context& s) const {
    return node_counts(node_id(space_, s));
}

}  // namespace bct
