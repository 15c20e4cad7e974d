#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bct/alphabet.hpp"
#include "bct/context_tree.hpp"
#include "bct/sequence.hpp"

namespace bct {

/// How the first L symbols of a sample are fixed.
struct InitialPolicy {
    enum class Kind { Repeat, Fixed, UniformRandom };

    Kind kind = Kind::Repeat;
    Symbol repeat_symbol = 0;
    std::vector<Symbol> fixed;  // must have exactly L symbols when used

    static InitialPolicy repeat(Symbol s = 0) { return {Kind::Repeat, s, {}}; }
    static InitialPolicy fixed_string(std::vector<Symbol> syms) {
        return {Kind::Fixed, 0, std::move(syms)};
    }
    static InitialPolicy uniform_random() { return {Kind::UniformRandom, 0, {}}; }
};

/// A context tree (τ, p): one probability vector per leaf, each on the
/// m-simplex (entries >= 0, sum 1 within 1e-12).
class TransitionModel {
public:
    TransitionModel(Alphabet alphabet, ContextTree tree,
                    std::vector<std::pair<Context, std::vector<double>>> leaf_probs,
                    InitialPolicy initial = InitialPolicy::repeat(0));

    const Alphabet& alphabet() const { return alphabet_; }
    const ContextTree& tree() const { return tree_; }
    const InitialPolicy& initial() const { return initial_; }

    std::span<const double> probs(const Context& leaf) const;
    std::span<const double> probs_for_past(std::span<const Symbol> past) const;

private:
    Alphabet alphabet_;
    ContextTree tree_;
    std::vector<std::vector<double>> rows_;  // aligned with tree_.leaves()
    InitialPolicy initial_;
};

/// The paper's generator models: "scenario-a" (7-leaf depth-3 binary tree)
/// and "scenario-b" (the 0-renewing tree {0, 01, 011, 0111, 1111}).
TransitionModel builtin_model(std::string_view name);

/// Model file: header "alphabet=<chars> L=<int>", then one line per leaf:
/// "<leaf> : p0,p1,...". The leaf λ is spelled "λ".
TransitionModel parse_model_file(const std::filesystem::path& path);
void write_model_file(const TransitionModel& model, const std::filesystem::path& path);

/// Draws a VLMC sample of length n compatible with the model: the first
/// space.max_depth() symbols come from the initial policy; each later
/// symbol is drawn from the probability vector at the suffix leaf.
/// Deterministic for a given seed on every platform (see kGeneratorId).
Sequence sample_sequence(const TransitionModel& model, std::size_t n, std::uint64_t seed,
                         const TreeSpace& space);

}  // namespace bct
