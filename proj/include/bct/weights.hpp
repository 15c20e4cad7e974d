#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bct/alphabet.hpp"
#include "bct/context_tree.hpp"
#include "bct/log_weight.hpp"
#include "bct/tree_space.hpp"

namespace bct {

/// A non-negative function f on the nodes of the maximal tree, defining the
/// context-tree function F(τ) = Π_{s∈τ} f(s). Values are produced in log
/// domain. Products of weight functions are weight functions.
///
/// Catalog (node weights):
///   unity            f(s) = 1
///   depth:l          f(s) = 1{ℓ(s) <= l}
///   renewal:a        f(s) = 1 unless a occurs at a non-oldest position of s
///   exp:α            f(s) = e^-α                       (α > 0)
///   lenexp           f(s) = e^-ℓ(s)
///   ctw              f(s) = 1/4 if ℓ(s) < L else 1/2
///   gctw:β           f(s) = (1-β)^(1/(m-1)) · β if ℓ(s) < L,
///                           (1-β)^(1/(m-1))      if ℓ(s) = L   (0 < β < 1)
///   target:c,l       f(s) = c^-|ℓ(s)-l|                (c > 1)
class NodeWeightFunction {
public:
    /// Custom node weights receive (depth, symbols most-recent-first).
    using CustomFn = std::function<LogWeight(int, std::span<const Symbol>)>;

    static NodeWeightFunction unity(const TreeSpace& space);
    static NodeWeightFunction depth_indicator(const TreeSpace& space, int l);
    static NodeWeightFunction renewal_indicator(const TreeSpace& space, Symbol a);
    static NodeWeightFunction exponential(const TreeSpace& space, double alpha);
    static NodeWeightFunction length_exponential(const TreeSpace& space);
    static NodeWeightFunction ctw(const TreeSpace& space);
    static NodeWeightFunction general_ctw(const TreeSpace& space, double beta);
    static NodeWeightFunction target_depth(const TreeSpace& space, double c, int l);
    static NodeWeightFunction custom(const TreeSpace& space, std::string name, CustomFn fn);

    /// Pointwise product; requires equal spaces.
    NodeWeightFunction operator*(const NodeWeightFunction& other) const;

    /// f(s). Symbols are passed most-recent-first (the trie walk order);
    /// the oldest symbol of the context is the last element.
    LogWeight eval_recent_first(std::span<const Symbol> recent_first) const;

    /// f(s) for an oldest-first context.
    LogWeight eval_node(const Context& s) const;

    /// log F(τ) = Σ_{s∈τ} log f(s); ZERO when any factor vanishes.
    /// τ must satisfy ℓ(τ) <= L and share the alphabet size.
    LogWeight eval_tree(const ContextTree& tree) const;

    const TreeSpace& space() const { return space_; }

    /// Canonical prior-spec string ("target:8,3*depth:5").
    const std::string& spec() const { return spec_; }

private:
    enum class Kind {
        Unity,
        DepthIndicator,
        RenewalIndicator,
        Exponential,
        LengthExponential,
        Ctw,
        GeneralCtw,
        TargetDepth,
        Custom,
    };
    struct Factor {
        Kind kind = Kind::Unity;
        int l = 0;         // depth / target depth
        double param = 0;  // exp rate, gctw beta, target base
        Symbol sym = 0;    // renewal symbol
        double log_below = 0, log_at = 0;  // precomputed per-depth-band logs
        double log_base = 0;               // log c for target
        CustomFn fn;
    };

    explicit NodeWeightFunction(const TreeSpace& space) : space_(space) {}
    LogWeight eval_factor(const Factor& f, int depth, std::span<const Symbol> recent_first) const;

    TreeSpace space_;
    std::vector<Factor> factors_;
    std::string spec_;
};

/// Prior mini-language: catalog names as listed above, factors joined with
/// '*', e.g. "target:8,3*depth:5". The renewal symbol is an alphabet letter.
NodeWeightFunction parse_prior_spec(std::string_view text, const Alphabet& alphabet,
                                    const TreeSpace& space);

}  // namespace bct
