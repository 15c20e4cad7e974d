#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bct/counts.hpp"
#include "bct/log_weight.hpp"
#include "bct/sequence.hpp"
#include "bct/weights.hpp"

namespace bct {

/// Dirichlet-marginal likelihood term of one node:
///   Γ(mα)/Γ(α)^m · Π_k Γ(c_k+α) / Γ(Σ_k c_k + mα)
/// computed with log-gamma. The all-zero vector yields exactly 1.
LogWeight q_alpha_node_term(std::span<const std::int64_t> counts, double alpha, int m);

/// Bottom-up recursion over the maximal tree for a weight function w
/// (either a prior f, or f·q with q the per-node Dirichlet terms):
///   sigma(s)   = w(s)                          ℓ(s) = L
///                logsum(Π_k sigma(ks), w(s))   ℓ(s) < L
///   upsilon(s) = w(s)                          ℓ(s) = L
///                max(w(s), Π_k upsilon(ks))    ℓ(s) < L
/// sigma(λ) is the sum of the induced tree function over T_L and
/// upsilon(λ) its maximum. Children combine in fixed order 0..m-1, so
/// repeated builds are bit-identical.
class RecursionTable {
public:
    /// Prior-only recursion (w = f).
    explicit RecursionTable(const NodeWeightFunction& f,
                            std::size_t budget = kDefaultNodeBudget);

    /// Posterior recursion (w = f · q_alpha from the count table).
    RecursionTable(const NodeWeightFunction& f, const CountTable& counts, double alpha,
                   std::size_t budget = kDefaultNodeBudget);

    const TreeSpace& space() const { return space_; }
    const NodeWeightFunction& weight() const { return weight_; }

    LogWeight sigma_root() const { return sigma_[0]; }
    LogWeight upsilon_root() const { return upsilon_[0]; }
    LogWeight sigma(const Context& s) const { return sigma_[node_id(space_, s)]; }
    LogWeight upsilon(const Context& s) const { return upsilon_[node_id(space_, s)]; }

    /// The stored node weight w(s) (including the q term when present).
    LogWeight node_weight(const Context& s) const { return w_[node_id(space_, s)]; }

    /// log of the induced tree function at τ: Σ_{s∈τ} log w(s).
    LogWeight tree_value(const ContextTree& tree) const;

    struct MapResult {
        ContextTree tree;
        /// True when some inspected node had w(s) bit-equal to the
        /// children's upsilon product: several maximizers exist and the
        /// pruning rule chose the smaller tree.
        bool tie = false;
    };

    /// Top-down extraction of a maximizing tree: a node becomes a leaf
    /// iff w(s) >= Π_k upsilon(ks) (ties prune). The result attains
    /// upsilon(λ) exactly. Throws when upsilon(λ) is ZERO.
    MapResult extract_map() const;

private:
    void build(const CountTable* counts, double alpha);
    void fill(std::size_t depth, std::size_t ordinal, std::vector<Symbol>& recent_first);

    TreeSpace space_;
    NodeWeightFunction weight_;
    const CountTable* counts_ = nullptr;  // only during build
    double alpha_ = 0;
    double q_log_const_ = 0;  // log Γ(mα) - m log Γ(α)
    std::vector<LogWeight> w_, sigma_, upsilon_;
};

/// Σ_{τ∈T_L} F(τ), the normalizer of the prior π_F.
LogWeight sum_over_trees(const NodeWeightFunction& f, std::size_t budget = kDefaultNodeBudget);

/// max_{τ∈T_L} F(τ).
LogWeight max_over_trees(const NodeWeightFunction& f, std::size_t budget = kDefaultNodeBudget);

/// Results of one full posterior analysis.
struct PosteriorSummary {
    double log_evidence;    // natural log of E(z; F, α)
    double log10_evidence;
    ContextTree map_tree;
    double map_log_posterior;  // natural log, <= 0
    bool map_tie = false;
    std::optional<LogWeight> ref_prior;      // π_F(τ_ref), when a reference was given
    std::optional<LogWeight> ref_posterior;  // π_{F,α}(τ_ref | z)
};

/// Evidence E(z; F, α) = Σ_{FQ}(λ) / Σ_F(λ), the MAP tree and its posterior
/// probability; optionally the prior/posterior of a reference tree from the
/// same recursion pass. Throws when the prior is not normalizable
/// (Σ_F(λ) = 0) or n <= L.
PosteriorSummary evidence(const Sequence& z, const NodeWeightFunction& f, double alpha,
                          const ContextTree* reference = nullptr,
                          std::size_t budget = kDefaultNodeBudget);

/// log π_{F,α}(τ | z) = log F(τ) + log Q_α(τ, z) - log Σ_{FQ}(λ).
LogWeight posterior_prob(const Sequence& z, const NodeWeightFunction& f, double alpha,
                         const ContextTree& tree, std::size_t budget = kDefaultNodeBudget);

/// log π_F(τ) = log F(τ) - log Σ_F(λ).
LogWeight prior_prob(const NodeWeightFunction& f, const ContextTree& tree,
                     std::size_t budget = kDefaultNodeBudget);

}  // namespace bct
