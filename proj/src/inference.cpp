#include "bct/inference.hpp"

#include <cmath>
#include <numbers>

#include "bct/errors.hpp"

namespace bct {

std::string_view kass_raftery_label(double log10_bf) {
    double v = std::abs(log10_bf);
    if (v > 2.0) return "decisive";
    if (v >= 1.0) return "strong";
    if (v >= 0.5) return "substantial";
    return "negligible";
}

namespace {

// log10 E(z; F, α) from one prior and one posterior recursion over a shared
// count table.
double log10_evidence_of(const NodeWeightFunction& f, const CountTable& counts, double alpha,
                         std::size_t budget) {
    RecursionTable prior(f, budget);
    if (prior.sigma_root().is_zero())
        throw ValidationError("prior is not normalizable: no tree has positive weight under " +
                              f.spec());
    RecursionTable posterior(f, counts, alpha, budget);
    return (posterior.sigma_root().log() - prior.sigma_root().log()) / std::numbers::ln10;
}

}  // namespace

BayesFactorReport bayes_factor(const Sequence& z, const NodeWeightFunction& f,
                               const NodeWeightFunction& g, double alpha, std::size_t budget) {
    if (!(f.space() == g.space()))
        throw ValidationError("Bayes factor requires both priors over the same tree space");
    CountTable counts(z, f.space(), budget);
    double bf = log10_evidence_of(f, counts, alpha, budget) -
                log10_evidence_of(g, counts, alpha, budget);
    return BayesFactorReport{
        .log10_bf = bf,
        .numerator_model = f.spec(),
        .denominator_model = g.spec(),
        .alpha = alpha,
        .interpretation = std::string(kass_raftery_label(bf)),
    };
}

DepthSelection select_depth(const Sequence& z, const TreeSpace& space, double alpha, double c,
                            std::size_t budget) {
    const int L = space.max_depth();
    CountTable counts(z, space, budget);

    // one recursion pair per candidate depth
    std::vector<double> log10_e(static_cast<std::size_t>(L) + 1);
    for (int k = 0; k <= L; ++k)
        log10_e[k] = log10_evidence_of(NodeWeightFunction::depth_indicator(space, k), counts,
                                       alpha, budget);

    DepthSelection out{L, {}};
    for (int k = L - 1; k >= 0; --k) {
        double bf = log10_e[out.depth] - log10_e[k];
        bool switched = bf < c;
        out.trace.steps.push_back({"depth:" + std::to_string(out.depth),
                                   "depth:" + std::to_string(k), bf, switched});
        if (switched) out.depth = k;
    }
    return out;
}

ModelSelection select_model(const Sequence& z, const TreeSpace& space, double alpha,
                            const std::vector<NodeWeightFunction>& candidates, double c1,
                            double c2, std::size_t budget) {
    if (candidates.empty()) throw ValidationError("model selection needs at least one candidate");
    for (const auto& f : candidates)
        if (!(f.space() == space))
            throw ValidationError("candidate " + f.spec() + " is not over the given tree space");

    const int L = space.max_depth();
    CountTable counts(z, space, budget);
    SelectionTrace trace;

    // part 1: depth selection per candidate on the products F_i · D_k
    std::vector<int> depths(candidates.size());
    std::vector<double> evidence_at_depth(candidates.size());
    std::vector<std::vector<double>> log10_e(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        auto& per_depth = log10_e[i];
        per_depth.resize(static_cast<std::size_t>(L) + 1);
        for (int k = 0; k <= L; ++k) {
            auto restricted = candidates[i] * NodeWeightFunction::depth_indicator(space, k);
            per_depth[k] = log10_evidence_of(restricted, counts, alpha, budget);
        }
        int l = L;
        for (int k = L - 1; k >= 0; --k) {
            double bf = per_depth[l] - per_depth[k];
            bool switched = bf < c1;
            trace.steps.push_back({candidates[i].spec() + "*depth:" + std::to_string(l),
                                   candidates[i].spec() + "*depth:" + std::to_string(k), bf,
                                   switched});
            if (switched) l = k;
        }
        depths[i] = l;
        evidence_at_depth[i] = per_depth[l];
    }

    // part 2: sequential comparison of the restricted candidates
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        double bf = evidence_at_depth[best] - evidence_at_depth[i];
        bool switched = bf < c2;
        trace.steps.push_back(
            {candidates[best].spec() + "*depth:" + std::to_string(depths[best]),
             candidates[i].spec() + "*depth:" + std::to_string(depths[i]), bf, switched});
        if (switched) best = i;
    }

    return ModelSelection{
        .best = candidates[best] * NodeWeightFunction::depth_indicator(space, depths[best]),
        .best_index = best,
        .best_depth = depths[best],
        .candidate_depths = std::move(depths),
        .candidate_log10_evidence = std::move(evidence_at_depth),
        .trace = std::move(trace),
    };
}

}  // namespace bct
