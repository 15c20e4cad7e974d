#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bct/alphabet.hpp"
#include "bct/errors.hpp"
#include "bct/tree_space.hpp"

namespace bct {

/// A node label: symbol codes ordered oldest -> most recent. The empty
/// context is the root λ. Children of s are k·s (one symbol prepended,
/// extending the context one step further into the past).
class Context {
public:
    Context() = default;
    explicit Context(std::vector<Symbol> oldest_first) : syms_(std::move(oldest_first)) {}

    int length() const { return static_cast<int>(syms_.size()); }
    bool is_root() const { return syms_.empty(); }
    std::span<const Symbol> symbols() const { return syms_; }

    /// Renders oldest symbol first; "λ" for the root.
    std::string display(const Alphabet& alphabet) const;

    /// Accepts "λ" (or the empty string) for the root.
    static Context parse(std::string_view text, const Alphabet& alphabet);

    /// True when this context equals the most recent length() symbols of
    /// `past` (i.e. is a suffix of the past).
    bool is_suffix_of(std::span<const Symbol> past) const;

    bool operator==(const Context& o) const { return syms_ == o.syms_; }
    /// Canonical order: by length, then lexicographic oldest-first.
    std::strong_ordering operator<=>(const Context& o) const;

private:
    std::vector<Symbol> syms_;
};

/// Trie node id of a context inside the maximal tree of `space`.
std::size_t node_id(const TreeSpace& space, const Context& s);

/// Thrown by tree validation; carries the offending contexts so callers
/// (e.g. the file parser) can attach locations.
class TreeStructureError : public ValidationError {
public:
    enum class Kind { SuffixViolation, MissingSibling, DepthOverflow, Empty };

    TreeStructureError(Kind kind, std::string message, Context a, Context b = Context{})
        : ValidationError(std::move(message)), kind_(kind), a_(std::move(a)), b_(std::move(b)) {}

    Kind kind() const { return kind_; }
    const Context& first() const { return a_; }   // e.g. the suffix leaf
    const Context& second() const { return b_; }  // e.g. the longer leaf

private:
    Kind kind_;
    Context a_, b_;
};

/// A proper, complete set of leaf contexts: the full rooted tree τ.
/// Immutable after construction; holds a lookup trie for suffix mapping.
class ContextTree {
public:
    /// Validates properness (no leaf is a suffix of another) and fullness
    /// (every inner node has all m children). Throws TreeStructureError.
    static ContextTree validate(std::vector<Context> leaves, const TreeSpace& space);

    /// The root-only tree {λ}.
    static ContextTree root(const TreeSpace& space);

    const TreeSpace& space() const { return space_; }
    const std::vector<Context>& leaves() const { return leaves_; }       // canonical order
    const std::vector<Context>& inner_nodes() const { return inner_; }   // τ^c, canonical order
    int depth() const { return depth_; }                                 // ℓ(τ)
    std::size_t num_leaves() const { return leaves_.size(); }

    /// Suffix mapping η_τ: the unique leaf matching the most recent
    /// symbols of `past`. Throws ValidationError when the past is too
    /// short to reach a leaf.
    const Context& suffix_leaf(std::span<const Symbol> past) const;

    /// Index into leaves() of the leaf reached by suffix_leaf.
    std::size_t suffix_leaf_index(std::span<const Symbol> past) const;

    /// Index of an exact leaf, or nullopt when absent.
    std::optional<std::size_t> find_leaf(const Context& s) const;

    /// Leaf-set equality.
    bool operator==(const ContextTree& o) const { return leaves_ == o.leaves_; }

private:
    ContextTree(TreeSpace space) : space_(space) {}
    std::size_t walk(std::span<const Symbol> past) const;

    TreeSpace space_;
    std::vector<Context> leaves_;
    std::vector<Context> inner_;
    int depth_ = 0;

    // lookup trie; children consume the most recent unread past symbol
    std::vector<std::int32_t> children_;  // trie_size * m, -1 = absent
    std::vector<std::int32_t> leaf_of_;   // trie node -> leaf index, -1 = inner
};

/// Δ(a, b) = |a^c symmetric-difference b^c|: the number of grow/prune
/// operations separating the two trees. Requires equal alphabet size.
std::size_t structural_distance(const ContextTree& a, const ContextTree& b);

/// The perfect tree of depth L (all m^L leaves). Guarded by the node budget.
ContextTree maximal_tree(const TreeSpace& space, std::size_t budget = kDefaultNodeBudget);

/// Tree file format: UTF-8, one leaf per line, oldest symbol first; a single
/// "λ" (or empty) line denotes the root tree. Leaves may appear in any order.
ContextTree parse_tree_lines(const std::vector<std::string>& lines, const Alphabet& alphabet,
                             const TreeSpace& space);
ContextTree parse_tree_file(const std::filesystem::path& path, const Alphabet& alphabet,
                            const TreeSpace& space);
std::string format_tree(const ContextTree& tree, const Alphabet& alphabet);
void write_tree_file(const ContextTree& tree, const Alphabet& alphabet,
                     const std::filesystem::path& path);

/// Every tree of T_L exactly once; the count obeys |T_{k+1}| = |T_k|^m + 1.
/// Oracle-scale only: throws when |T_L| exceeds max_trees.
std::vector<ContextTree> enumerate_trees(const TreeSpace& space,
                                         std::size_t max_trees = 1'000'000);

}  // namespace bct
