#pragma once

// Test-only brute-force oracles. Everything here works in plain double log
// domain (-inf = weight zero) and derives its answers by enumeration,
// sequential prediction or direct scans, independent of the recursion and
// trie code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "bct/bct.hpp"

namespace bct::testing {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

inline double logsumexp(const std::vector<double>& vals) {
    double hi = kNegInf;
    for (double v : vals) hi = std::max(hi, v);
    if (hi == kNegInf) return kNegInf;
    double acc = 0;
    for (double v : vals) acc += std::exp(v - hi);
    return hi + std::log(acc);
}

// Linear scan over the leaves: the unique leaf that is a suffix of the past.
inline const Context& scan_suffix(const ContextTree& tree, std::span<const Symbol> past) {
    for (const Context& leaf : tree.leaves())
        if (leaf.is_suffix_of(past)) return leaf;
    throw std::logic_error("no leaf matches the past");
}

// log F(tau) by summing node weights over the canonical leaf order.
inline double log_tree_weight(const NodeWeightFunction& f, const ContextTree& tree) {
    double acc = 0;
    for (const Context& s : tree.leaves()) {
        LogWeight w = f.eval_node(s);
        if (w.is_zero()) return kNegInf;
        acc += w.log();
    }
    return acc;
}

// log Q_alpha(tau, z) via the sequential predictive chain rule
//   P(z_t = k | past) = (c_k + alpha) / (c_total + m alpha)
// with counts accumulated per leaf as the sequence is scanned. Independent
// of the log-gamma product.
inline double sequential_log_q(const ContextTree& tree, const Sequence& z, int max_depth,
                               double alpha) {
    const int m = z.alphabet().size();
    std::vector<std::vector<std::int64_t>> counts(tree.num_leaves(),
                                                  std::vector<std::int64_t>(m, 0));
    auto codes = z.codes();
    double log_q = 0;
    for (std::size_t t = static_cast<std::size_t>(max_depth); t < codes.size(); ++t) {
        const Context& leaf = scan_suffix(tree, codes.subspan(0, t));
        std::size_t li = *tree.find_leaf(leaf);
        auto& c = counts[li];
        std::int64_t total = 0;
        for (std::int64_t v : c) total += v;
        Symbol k = codes[t];
        log_q += std::log((static_cast<double>(c[k]) + alpha) /
                          (static_cast<double>(total) + m * alpha));
        ++c[k];
    }
    return log_q;
}

// Direct c_{sk} count by substring matching, quadratic and trie-free.
inline std::vector<std::int64_t> scan_counts(const Sequence& z, int max_depth,
                                             const Context& s) {
    const int m = z.alphabet().size();
    std::vector<std::int64_t> out(m, 0);
    auto codes = z.codes();
    for (std::size_t t = static_cast<std::size_t>(max_depth); t < codes.size(); ++t)
        if (s.is_suffix_of(codes.subspan(0, t))) ++out[codes[t]];
    return out;
}

// True when the symbol occurs only at the oldest position of every leaf.
inline bool is_a_renewing(const ContextTree& tree, Symbol a) {
    for (const Context& leaf : tree.leaves()) {
        auto syms = leaf.symbols();
        for (std::size_t i = 1; i < syms.size(); ++i)
            if (syms[i] == a) return false;
    }
    return true;
}

// Exhaustive-enumeration oracle over a small tree space.
class EnumOracle {
public:
    explicit EnumOracle(const TreeSpace& space) : trees_(enumerate_trees(space)) {}

    const std::vector<ContextTree>& trees() const { return trees_; }

    std::vector<double> log_prior_values(const NodeWeightFunction& f) const {
        std::vector<double> vals;
        vals.reserve(trees_.size());
        for (const auto& t : trees_) vals.push_back(log_tree_weight(f, t));
        return vals;
    }

    std::vector<double> log_joint_values(const NodeWeightFunction& f, const Sequence& z,
                                         int max_depth, double alpha) const {
        std::vector<double> vals;
        vals.reserve(trees_.size());
        for (const auto& t : trees_) {
            double lf = log_tree_weight(f, t);
            vals.push_back(lf == kNegInf ? kNegInf
                                         : lf + sequential_log_q(t, z, max_depth, alpha));
        }
        return vals;
    }

    static std::size_t argmax(const std::vector<double>& vals) {
        return static_cast<std::size_t>(std::max_element(vals.begin(), vals.end()) -
                                        vals.begin());
    }

private:
    std::vector<ContextTree> trees_;
};

}  // namespace bct::testing
