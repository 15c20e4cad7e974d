#include "bct/context_tree.hpp"

#include <algorithm>
#include <fstream>

namespace bct {

namespace {
constexpr std::string_view kLambda = "\xce\xbb";  // "λ"
}

std::string Context::display(const Alphabet& alphabet) const {
    if (syms_.empty()) return std::string(kLambda);
    std::string out;
    out.reserve(syms_.size());
    for (Symbol s : syms_) out.push_back(alphabet.letter(s));
    return out;
}

Context Context::parse(std::string_view text, const Alphabet& alphabet) {
    if (text.empty() || text == kLambda) return Context{};
    std::vector<Symbol> syms;
    syms.reserve(text.size());
    for (char c : text) {
        auto code = alphabet.code(c);
        if (!code) throw ValidationError(std::string("unknown symbol '") + c + "' in context");
        syms.push_back(*code);
    }
    return Context(std::move(syms));
}

bool Context::is_suffix_of(std::span<const Symbol> past) const {
    if (syms_.size() > past.size()) return false;
    return std::equal(syms_.begin(), syms_.end(), past.end() - syms_.size());
}

std::strong_ordering Context::operator<=>(const Context& o) const {
    if (auto c = syms_.size() <=> o.syms_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(syms_.begin(), syms_.end(), o.syms_.begin(),
                                                  o.syms_.end());
}

std::size_t node_id(const TreeSpace& space, const Context& s) {
    const int len = s.length();
    if (len > space.max_depth())
        throw ValidationError("context deeper than the tree space (depth overflow)");
    std::size_t o = 0;
    auto syms = s.symbols();
    for (int i = len - 1; i >= 0; --i)  // most recent symbol first
        o = o * static_cast<std::size_t>(space.m()) + syms[i];
    return space.level_offset(len) + o;
}

ContextTree ContextTree::validate(std::vector<Context> leaves, const TreeSpace& space) {
    const int m = space.m();
    const int L = space.max_depth();
    if (leaves.empty())
        throw TreeStructureError(TreeStructureError::Kind::Empty, "tree has no leaves",
                                 Context{});

    ContextTree tree(space);
    auto& children = tree.children_;
    auto& leaf_of = tree.leaf_of_;
    children.assign(m, -1);
    leaf_of.assign(1, -1);

    auto new_node = [&]() {
        std::int32_t id = static_cast<std::int32_t>(leaf_of.size());
        children.insert(children.end(), m, -1);
        leaf_of.push_back(-1);
        return id;
    };

    std::vector<Context> inserted;
    inserted.reserve(leaves.size());
    for (Context& s : leaves) {
        if (s.length() > L)
            throw TreeStructureError(TreeStructureError::Kind::DepthOverflow,
                                     "leaf of length " + std::to_string(s.length()) +
                                         " exceeds maximal depth " + std::to_string(L),
                                     s);
        for (Symbol sym : s.symbols())
            if (static_cast<int>(sym) >= m)
                throw ValidationError("leaf symbol out of alphabet range");

        std::int32_t node = 0;
        auto syms = s.symbols();
        for (int i = s.length() - 1; i >= 0; --i) {
            if (leaf_of[node] >= 0) {
                const Context& prior = inserted[leaf_of[node]];
                throw TreeStructureError(TreeStructureError::Kind::SuffixViolation,
                                         "leaf is a suffix of another leaf", prior, s);
            }
            std::size_t slot = static_cast<std::size_t>(node) * m + syms[i];
            if (children[slot] < 0) children[slot] = new_node();
            node = children[slot];
        }
        if (leaf_of[node] >= 0) {
            const Context& prior = inserted[leaf_of[node]];
            throw TreeStructureError(TreeStructureError::Kind::SuffixViolation,
                                     "duplicate leaf", prior, s);
        }
        for (int k = 0; k < m; ++k) {
            std::int32_t child = children[static_cast<std::size_t>(node) * m + k];
            if (child < 0) continue;
            // walk down to some previously inserted leaf for the message
            std::int32_t probe = child;
            while (leaf_of[probe] < 0) {
                for (int j = 0; j < m; ++j) {
                    std::int32_t c = children[static_cast<std::size_t>(probe) * m + j];
                    if (c >= 0) {
                        probe = c;
                        break;
                    }
                }
            }
            throw TreeStructureError(TreeStructureError::Kind::SuffixViolation,
                                     "leaf is a suffix of another leaf", s,
                                     inserted[leaf_of[probe]]);
        }
        leaf_of[node] = static_cast<std::int32_t>(inserted.size());
        inserted.push_back(std::move(s));
    }

    // completeness: every inner node needs all m children; the DFS also
    // reconstructs the inner-node contexts (τ^c)
    std::vector<Context> inner;
    std::vector<Symbol> recent;
    auto visit = [&](auto&& self, std::int32_t node) -> void {
        if (leaf_of[node] >= 0) return;
        std::vector<Symbol> oldest_first(recent.rbegin(), recent.rend());
        inner.emplace_back(std::move(oldest_first));
        for (int k = 0; k < m; ++k) {
            std::int32_t child = children[static_cast<std::size_t>(node) * m + k];
            if (child < 0)
                throw TreeStructureError(TreeStructureError::Kind::MissingSibling,
                                         "inner node is missing a child (incomplete tree)",
                                         inner.back());
            recent.push_back(static_cast<Symbol>(k));
            self(self, child);
            recent.pop_back();
        }
    };
    visit(visit, 0);

    std::sort(inserted.begin(), inserted.end());
    std::sort(inner.begin(), inner.end());
    tree.leaves_ = std::move(inserted);
    tree.inner_ = std::move(inner);
    tree.depth_ = tree.leaves_.empty() ? 0 : tree.leaves_.back().length();
    // re-point leaf_of at the sorted order
    for (std::size_t i = 0; i < leaf_of.size(); ++i) leaf_of[i] = -1;
    for (std::size_t li = 0; li < tree.leaves_.size(); ++li) {
        std::int32_t node = 0;
        auto syms = tree.leaves_[li].symbols();
        for (int i = tree.leaves_[li].length() - 1; i >= 0; --i)
            node = children[static_cast<std::size_t>(node) * m + syms[i]];
        leaf_of[node] = static_cast<std::int32_t>(li);
    }
    return tree;
}

ContextTree ContextTree::root(const TreeSpace& space) {
    return validate({Context{}}, space);
}

std::size_t ContextTree::walk(std::span<const Symbol> past) const {
    const int m = space_.m();
    std::int32_t node = 0;
    std::size_t used = 0;
    while (leaf_of_[node] < 0) {
        if (used >= past.size())
            throw ValidationError("past of length " + std::to_string(past.size()) +
                                  " too short for suffix lookup in a tree of depth " +
                                  std::to_string(depth_));
        Symbol sym = past[past.size() - 1 - used];
        node = children_[static_cast<std::size_t>(node) * m + sym];
        ++used;
    }
    return static_cast<std::size_t>(leaf_of_[node]);
}

const Context& ContextTree::suffix_leaf(std::span<const Symbol> past) const {
    return leaves_[walk(past)];
}

std::size_t ContextTree::suffix_leaf_index(std::span<const Symbol> past) const {
    return walk(past);
}

std::optional<std::size_t> ContextTree::find_leaf(const Context& s) const {
    auto it = std::lower_bound(leaves_.begin(), leaves_.end(), s);
    if (it == leaves_.end() || !(*it == s)) return std::nullopt;
    return static_cast<std::size_t>(it - leaves_.begin());
}

std::size_t structural_distance(const ContextTree& a, const ContextTree& b) {
    if (a.space().m() != b.space().m())
        throw ValidationError("structural distance requires equal alphabet sizes");
    const auto& x = a.inner_nodes();
    const auto& y = b.inner_nodes();
    std::size_t i = 0, j = 0, diff = 0;
    while (i < x.size() && j < y.size()) {
        auto c = x[i] <=> y[j];
        if (c == 0) {
            ++i;
            ++j;
        } else if (c < 0) {
            ++diff;
            ++i;
        } else {
            ++diff;
            ++j;
        }
    }
    diff += (x.size() - i) + (y.size() - j);
    return diff;
}

ContextTree maximal_tree(const TreeSpace& space, std::size_t budget) {
    space.require_within_budget(budget);
    const int m = space.m();
    const int L = space.max_depth();
    std::vector<Context> leaves;
    leaves.reserve(space.level_size(L));
    for (std::size_t o = 0; o < space.level_size(L); ++o) {
        std::vector<Symbol> syms(L);
        std::size_t rem = o;
        for (int j = 0; j < L; ++j) {  // oldest-first digit extraction
            syms[j] = static_cast<Symbol>(rem % m);
            rem /= m;
        }
        leaves.emplace_back(std::move(syms));
    }
    return ContextTree::validate(std::move(leaves), space);
}

ContextTree parse_tree_lines(const std::vector<std::string>& lines, const Alphabet& alphabet,
                             const TreeSpace& space) {
    auto trim = [](std::string s) {
        auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
        while (!s.empty() && issp(s.back())) s.pop_back();
        std::size_t i = 0;
        while (i < s.size() && issp(s[i])) ++i;
        return s.substr(i);
    };

    std::vector<std::pair<std::size_t, std::string>> entries;  // (1-based line, text)
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string t = trim(lines[i]);
        if (!t.empty()) entries.emplace_back(i + 1, std::move(t));
    }
    if (entries.empty()) return ContextTree::root(space);  // empty / blank file
    if (entries.size() == 1 && entries[0].second == kLambda) return ContextTree::root(space);

    std::vector<Context> leaves;
    std::vector<std::pair<Context, std::size_t>> line_of;
    for (auto& [line, text] : entries) {
        Context ctx;
        try {
            ctx = Context::parse(text, alphabet);
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(line) + ": " + e.what());
        }
        line_of.emplace_back(ctx, line);
        leaves.push_back(std::move(ctx));
    }
    try {
        return ContextTree::validate(std::move(leaves), space);
    } catch (const TreeStructureError& e) {
        std::size_t line = 0;
        for (const auto& [ctx, ln] : line_of)
            if ((ctx == e.first() || ctx == e.second()) && ln > line) line = ln;
        if (line == 0) throw;
        std::string detail = e.what();
        if (e.kind() == TreeStructureError::Kind::SuffixViolation)
            detail += " (" + e.first().display(alphabet) + ", " + e.second().display(alphabet) +
                      ")";
        else
            detail += " (" + e.first().display(alphabet) + ")";
        throw ValidationError("line " + std::to_string(line) + ": " + detail);
    }
}

ContextTree parse_tree_file(const std::filesystem::path& path, const Alphabet& alphabet,
                            const TreeSpace& space) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open tree file: " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return parse_tree_lines(lines, alphabet, space);
}

std::string format_tree(const ContextTree& tree, const Alphabet& alphabet) {
    std::string out;
    for (const Context& s : tree.leaves()) {
        out += s.display(alphabet);
        out += '\n';
    }
    return out;
}

void write_tree_file(const ContextTree& tree, const Alphabet& alphabet,
                     const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << format_tree(tree, alphabet);
    if (!out) throw IoError("write failed: " + path.string());
}

namespace {

// Leaf sets of all subtrees rooted at a node of the given depth; the node's
// context is reconstructed from the most-recent-first path.
void gen_subtrees(const TreeSpace& space, int depth, std::vector<Symbol>& recent,
                  std::vector<std::vector<Context>>& out) {
    Context self{std::vector<Symbol>(recent.rbegin(), recent.rend())};
    out.clear();
    out.push_back({self});
    if (depth == space.max_depth()) return;

    std::vector<std::vector<Context>> combos{{}};
    std::vector<std::vector<Context>> child;
    for (int k = 0; k < space.m(); ++k) {
        recent.push_back(static_cast<Symbol>(k));
        gen_subtrees(space, depth + 1, recent, child);
        recent.pop_back();
        std::vector<std::vector<Context>> next;
        next.reserve(combos.size() * child.size());
        for (const auto& partial : combos)
            for (const auto& sub : child) {
                auto merged = partial;
                merged.insert(merged.end(), sub.begin(), sub.end());
                next.push_back(std::move(merged));
            }
        combos = std::move(next);
    }
    for (auto& leaves : combos) out.push_back(std::move(leaves));
}

}  // namespace

std::vector<ContextTree> enumerate_trees(const TreeSpace& space, std::size_t max_trees) {
    double total = count_trees(space);
    if (!(total <= static_cast<double>(max_trees)))
        throw ValidationError("tree space holds ~" + std::to_string(total) +
                              " trees, above the enumeration bound of " +
                              std::to_string(max_trees));
    std::vector<Symbol> recent;
    std::vector<std::vector<Context>> leaf_sets;
    gen_subtrees(space, 0, recent, leaf_sets);
    std::vector<ContextTree> trees;
    trees.reserve(leaf_sets.size());
    for (auto& leaves : leaf_sets)
        trees.push_back(ContextTree::validate(std::move(leaves), space));
    return trees;
}

}  // namespace bct
