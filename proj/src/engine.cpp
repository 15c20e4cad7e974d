#include "bct/engine.hpp"

#include <cmath>
#include <numbers>

#include "bct/errors.hpp"

namespace bct {

LogWeight q_alpha_node_term(std::span<const std::int64_t> counts, double alpha, int m) {
    if (!(alpha > 0)) throw ValidationError("Dirichlet hyper-parameter alpha must be > 0");
    if (static_cast<int>(counts.size()) != m)
        throw ValidationError("count vector length does not match alphabet size");
    std::int64_t total = 0;
    for (std::int64_t c : counts) {
        if (c < 0) throw ValidationError("negative count");
        total += c;
    }
    if (total == 0) return LogWeight::one();  // Γ identity: unseen node contributes exactly 1

    double log_q = std::lgamma(m * alpha) - m * std::lgamma(alpha);
    for (std::int64_t c : counts) log_q += std::lgamma(static_cast<double>(c) + alpha);
    log_q -= std::lgamma(static_cast<double>(total) + m * alpha);
    return LogWeight::from_log(log_q);
}

RecursionTable::RecursionTable(const NodeWeightFunction& f, std::size_t budget)
    : space_(f.space()), weight_(f) {
    space_.require_within_budget(budget);
    build(nullptr, 0);
}

RecursionTable::RecursionTable(const NodeWeightFunction& f, const CountTable& counts,
                               double alpha, std::size_t budget)
    : space_(f.space()), weight_(f) {
    if (!(counts.space() == space_))
        throw ValidationError("count table space does not match the weight function");
    if (!(alpha > 0)) throw ValidationError("Dirichlet hyper-parameter alpha must be > 0");
    space_.require_within_budget(budget);
    build(&counts, alpha);
}

void RecursionTable::build(const CountTable* counts, double alpha) {
    counts_ = counts;
    alpha_ = alpha;
    if (counts_) q_log_const_ = std::lgamma(space_.m() * alpha) - space_.m() * std::lgamma(alpha);

    const std::size_t n = space_.num_nodes();
    w_.assign(n, LogWeight::one());
    sigma_.assign(n, LogWeight::one());
    upsilon_.assign(n, LogWeight::one());

    std::vector<Symbol> recent_first;
    recent_first.reserve(static_cast<std::size_t>(space_.max_depth()));
    fill(0, 0, recent_first);
    counts_ = nullptr;
}

void RecursionTable::fill(std::size_t depth, std::size_t ordinal,
                          std::vector<Symbol>& recent_first) {
    const std::size_t m = static_cast<std::size_t>(space_.m());
    const std::size_t id = space_.level_offset(static_cast<int>(depth)) + ordinal;

    LogWeight w = weight_.eval_recent_first(recent_first);
    if (counts_ && !w.is_zero()) {
        auto c = counts_->node_counts(id);
        std::int64_t total = 0;
        for (std::int64_t v : c) total += v;
        if (total > 0) {
            double log_q = q_log_const_;
            for (std::int64_t v : c) log_q += std::lgamma(static_cast<double>(v) + alpha_);
            log_q -= std::lgamma(static_cast<double>(total) + m * alpha_);
            w *= LogWeight::from_log(log_q);
        }
    }
    w_[id] = w;

    if (static_cast<int>(depth) == space_.max_depth()) {
        sigma_[id] = w;
        upsilon_[id] = w;
        return;
    }

    LogWeight child_sigma = LogWeight::one();
    LogWeight child_upsilon = LogWeight::one();
    for (std::size_t k = 0; k < m; ++k) {
        recent_first.push_back(static_cast<Symbol>(k));
        fill(depth + 1, ordinal * m + k, recent_first);
        recent_first.pop_back();
        const std::size_t child = space_.level_offset(static_cast<int>(depth) + 1) +
                                  ordinal * m + k;
        child_sigma *= sigma_[child];
        child_upsilon *= upsilon_[child];
    }
    sigma_[id] = log_sum(child_sigma, w);  // w-term last, fixed order
    upsilon_[id] = child_upsilon > w ? child_upsilon : w;
}

LogWeight RecursionTable::tree_value(const ContextTree& tree) const {
    if (tree.space().m() != space_.m())
        throw ValidationError("tree alphabet size does not match the recursion table");
    if (tree.depth() > space_.max_depth())
        throw ValidationError("tree deeper than the recursion table's space");
    LogWeight v = LogWeight::one();
    for (const Context& s : tree.leaves()) {
        v *= w_[node_id(space_, s)];
        if (v.is_zero()) return v;
    }
    return v;
}

RecursionTable::MapResult RecursionTable::extract_map() const {
    if (upsilon_[0].is_zero())
        throw ValidationError("no tree has positive weight (all-zero maximum)");

    const std::size_t m = static_cast<std::size_t>(space_.m());
    std::vector<Context> leaves;
    bool tie = false;
    std::vector<Symbol> recent_first;

    auto descend = [&](auto&& self, std::size_t depth, std::size_t ordinal) -> void {
        const std::size_t id = space_.level_offset(static_cast<int>(depth)) + ordinal;
        auto as_leaf = [&]() {
            std::vector<Symbol> oldest(recent_first.rbegin(), recent_first.rend());
            leaves.emplace_back(std::move(oldest));
        };
        if (static_cast<int>(depth) == space_.max_depth()) {
            as_leaf();
            return;
        }
        LogWeight child_prod = LogWeight::one();
        for (std::size_t k = 0; k < m; ++k)
            child_prod *= upsilon_[space_.level_offset(static_cast<int>(depth) + 1) +
                                   ordinal * m + k];
        const LogWeight w = w_[id];
        if (w >= child_prod) {  // ties prune: the smaller tree wins
            if (w == child_prod && !w.is_zero()) tie = true;
            as_leaf();
            return;
        }
        for (std::size_t k = 0; k < m; ++k) {
            recent_first.push_back(static_cast<Symbol>(k));
            self(self, depth + 1, ordinal * m + k);
            recent_first.pop_back();
        }
    };
    descend(descend, 0, 0);

    return {ContextTree::validate(std::move(leaves), space_), tie};
}

LogWeight sum_over_trees(const NodeWeightFunction& f, std::size_t budget) {
    return RecursionTable(f, budget).sigma_root();
}

LogWeight max_over_trees(const NodeWeightFunction& f, std::size_t budget) {
    return RecursionTable(f, budget).upsilon_root();
}

PosteriorSummary evidence(const Sequence& z, const NodeWeightFunction& f, double alpha,
                          const ContextTree* reference, std::size_t budget) {
    CountTable counts(z, f.space(), budget);

    RecursionTable prior(f, budget);
    if (prior.sigma_root().is_zero())
        throw ValidationError("prior is not normalizable: no tree has positive weight under " +
                              f.spec());

    RecursionTable posterior(f, counts, alpha, budget);
    auto map = posterior.extract_map();

    PosteriorSummary out{
        .log_evidence = posterior.sigma_root().log() - prior.sigma_root().log(),
        .log10_evidence = 0,
        .map_tree = std::move(map.tree),
        .map_log_posterior = posterior.upsilon_root().log() - posterior.sigma_root().log(),
        .map_tie = map.tie,
        .ref_prior = {},
        .ref_posterior = {},
    };
    out.log10_evidence = out.log_evidence / std::numbers::ln10;

    if (reference) {
        LogWeight fq = posterior.tree_value(*reference);
        LogWeight fr = prior.tree_value(*reference);
        out.ref_prior = fr.is_zero()
                            ? LogWeight::zero()
                            : LogWeight::from_log(fr.log() - prior.sigma_root().log());
        out.ref_posterior = fq.is_zero()
                                ? LogWeight::zero()
                                : LogWeight::from_log(fq.log() - posterior.sigma_root().log());
    }
    return out;
}

LogWeight posterior_prob(const Sequence& z, const NodeWeightFunction& f, double alpha,
                         const ContextTree& tree, std::size_t budget) {
    CountTable counts(z, f.space(), budget);
    RecursionTable posterior(f, counts, alpha, budget);
    if (posterior.sigma_root().is_zero())
        throw ValidationError("prior is not normalizable: no tree has positive weight under " +
                              f.spec());
    LogWeight fq = posterior.tree_value(tree);
    if (fq.is_zero()) return LogWeight::zero();
    return LogWeight::from_log(fq.log() - posterior.sigma_root().log());
}

LogWeight prior_prob(const NodeWeightFunction& f, const ContextTree& tree, std::size_t budget) {
    RecursionTable prior(f, budget);
    if (prior.sigma_root().is_zero())
        throw ValidationError("prior is not normalizable: no tree has positive weight under " +
                              f.spec());
    LogWeight ft = prior.tree_value(tree);
    if (ft.is_zero()) return LogWeight::zero();
    return LogWeight::from_log(ft.log() - prior.sigma_root().log());
}

}  // namespace bct
