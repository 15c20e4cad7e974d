#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bct/engine.hpp"
#include "bct/sequence.hpp"
#include "bct/weights.hpp"

namespace bct {

/// Kass-Raftery grading of |log10 BF|: < 1/2 negligible, < 1 substantial,
/// <= 2 strong, > 2 decisive.
std::string_view kass_raftery_label(double log10_bf);

struct BayesFactorReport {
    double log10_bf;  // log10 E(z; F, α) - log10 E(z; G, α)
    std::string numerator_model;
    std::string denominator_model;
    double alpha;
    std::string interpretation;
};

/// BF_{F,G}(z) = E(z; F, α) / E(z; G, α). The count table is built once and
/// shared between the two evidences.
BayesFactorReport bayes_factor(const Sequence& z, const NodeWeightFunction& f,
                               const NodeWeightFunction& g, double alpha,
                               std::size_t budget = kDefaultNodeBudget);

struct SelectionStep {
    std::string incumbent;   // model spec of the current choice
    std::string challenger;  // model spec being tested
    double log10_bf;         // incumbent vs challenger
    bool switched;           // challenger became the incumbent
};

struct SelectionTrace {
    std::vector<SelectionStep> steps;
};

struct DepthSelection {
    int depth;
    SelectionTrace trace;  // exactly L comparisons
};

/// Sequential maximal-depth selection: start at l = L; for k = L-1 down
/// to 0, switch to k when log10 BF(D_l, D_k) < c. Evidence under each D_k
/// comes from one recursion per depth over a shared count table.
DepthSelection select_depth(const Sequence& z, const TreeSpace& space, double alpha,
                            double c, std::size_t budget = kDefaultNodeBudget);

struct ModelSelection {
    NodeWeightFunction best;  // F* = F_i · D_{l_i} of the winning candidate
    std::size_t best_index;   // into the candidate list
    int best_depth;           // l_i of the winner
    std::vector<int> candidate_depths;            // part-1 depth per candidate
    std::vector<double> candidate_log10_evidence; // at the selected depth
    SelectionTrace trace;  // |candidates|·L + |candidates|-1 comparisons
};

/// Two-stage model selection: part 1 runs depth selection per candidate on
/// the products F_i·D_k with threshold c1; part 2 scans candidates in the
/// given order, replacing the incumbent when log10 BF(F*, F_i·D_{l_i}) < c2.
ModelSelection select_model(const Sequence& z, const TreeSpace& space, double alpha,
                            const std::vector<NodeWeightFunction>& candidates, double c1,
                            double c2, std::size_t budget = kDefaultNodeBudget);

}  // namespace bct
