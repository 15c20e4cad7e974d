// Python bindings: thin functional wrappers over the core library. Sequences
// travel as character strings, trees as lists of leaf strings (oldest symbol
// first, "λ" for the root).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "bct/bct.hpp"

namespace py = pybind11;
using namespace bct;

namespace {

ContextTree tree_from_leaves(const std::vector<std::string>& leaves, const Alphabet& alphabet,
                             const TreeSpace& space) {
    std::vector<Context> parsed;
    parsed.reserve(leaves.size());
    for (const auto& text : leaves) parsed.push_back(Context::parse(text, alphabet));
    return ContextTree::validate(std::move(parsed), space);
}

std::vector<std::string> leaves_of(const ContextTree& tree, const Alphabet& alphabet) {
    std::vector<std::string> out;
    out.reserve(tree.num_leaves());
    for (const Context& s : tree.leaves()) out.push_back(s.display(alphabet));
    return out;
}

py::object prob_dict(LogWeight w) {
    py::dict d;
    if (w.is_zero()) {
        d["log"] = py::none();
        d["log10"] = py::none();
        d["value"] = 0.0;
    } else {
        d["log"] = w.log();
        d["log10"] = w.log10();
        d["value"] = w.value();
    }
    return d;
}

py::dict trace_dict(const SelectionTrace& trace) {
    py::list steps;
    for (const auto& s : trace.steps) {
        py::dict step;
        step["incumbent"] = s.incumbent;
        step["challenger"] = s.challenger;
        step["log10_bf"] = s.log10_bf;
        step["switched"] = s.switched;
        steps.append(step);
    }
    py::dict d;
    d["steps"] = steps;
    return d;
}

struct Session {
    Alphabet alphabet;
    TreeSpace space;
    Session(const std::string& alphabet_spec, int max_depth)
        : alphabet(Alphabet::parse(alphabet_spec)), space(alphabet.size(), max_depth) {}
};

py::dict run_evidence(const std::string& data, const std::string& alphabet_spec, int max_depth,
                      const std::string& prior, double alpha,
                      std::optional<std::vector<std::string>> ref_leaves) {
    Session s(alphabet_spec, max_depth);
    auto f = parse_prior_spec(prior, s.alphabet, s.space);
    auto z = parse_sequence(data, s.alphabet);
    std::optional<ContextTree> ref;
    if (ref_leaves) ref = tree_from_leaves(*ref_leaves, s.alphabet, s.space);

    auto summary = evidence(z, f, alpha, ref ? &*ref : nullptr);
    py::dict out;
    out["log_evidence"] = summary.log_evidence;
    out["log10_evidence"] = summary.log10_evidence;
    out["map_tree"] = leaves_of(summary.map_tree, s.alphabet);
    out["map_log_posterior"] = summary.map_log_posterior;
    out["map_tie"] = summary.map_tie;
    if (summary.ref_prior) out["ref_prior"] = prob_dict(*summary.ref_prior);
    if (summary.ref_posterior) out["ref_posterior"] = prob_dict(*summary.ref_posterior);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Bayesian inference for variable-length Markov chains via "
              "context-tree priors";
    m.attr("__version__") = kVersion;
    m.attr("GENERATOR_ID") = kGeneratorId;

    py::register_exception<ValidationError>(m, "BctValidationError", PyExc_ValueError);
    py::register_exception<IoError>(m, "BctIoError", PyExc_OSError);

    m.def("count_trees",
          [](int m_, int max_depth) { return count_trees(TreeSpace(m_, max_depth)); },
          py::arg("m"), py::arg("max_depth"),
          "Number of bounded-depth trees |T_L| (double; may be inf).");

    m.def("sum_over_trees",
          [](const std::string& prior, const std::string& alphabet, int max_depth) {
              Session s(alphabet, max_depth);
              return prob_dict(sum_over_trees(parse_prior_spec(prior, s.alphabet, s.space)));
          },
          py::arg("prior"), py::arg("alphabet"), py::arg("max_depth"),
          "Prior normalizer: the sum of the tree function over all trees.");

    m.def("max_over_trees",
          [](const std::string& prior, const std::string& alphabet, int max_depth) {
              Session s(alphabet, max_depth);
              return prob_dict(max_over_trees(parse_prior_spec(prior, s.alphabet, s.space)));
          },
          py::arg("prior"), py::arg("alphabet"), py::arg("max_depth"));

    m.def("prior_prob",
          [](const std::string& prior, const std::string& alphabet, int max_depth,
             const std::vector<std::string>& tree) {
              Session s(alphabet, max_depth);
              auto f = parse_prior_spec(prior, s.alphabet, s.space);
              return prob_dict(prior_prob(f, tree_from_leaves(tree, s.alphabet, s.space)));
          },
          py::arg("prior"), py::arg("alphabet"), py::arg("max_depth"), py::arg("tree"),
          "Prior probability of a tree given as a list of leaf strings.");

    m.def("evidence", &run_evidence, py::arg("data"), py::arg("alphabet"),
          py::arg("max_depth"), py::arg("prior"), py::arg("alpha") = 0.5,
          py::arg("ref_tree") = py::none(),
          "Marginal likelihood, MAP tree and optional reference-tree posteriors.");

    m.def("map_tree",
          [](const std::string& data, const std::string& alphabet, int max_depth,
             const std::string& prior, double alpha) {
              return run_evidence(data, alphabet, max_depth, prior, alpha, std::nullopt)
                  ["map_tree"];
          },
          py::arg("data"), py::arg("alphabet"), py::arg("max_depth"), py::arg("prior"),
          py::arg("alpha") = 0.5, "The maximum a posteriori context tree.");

    m.def("posterior_prob",
          [](const std::string& data, const std::string& alphabet, int max_depth,
             const std::string& prior, const std::vector<std::string>& tree, double alpha) {
              Session s(alphabet, max_depth);
              auto f = parse_prior_spec(prior, s.alphabet, s.space);
              auto z = parse_sequence(data, s.alphabet);
              return prob_dict(
                  posterior_prob(z, f, alpha, tree_from_leaves(tree, s.alphabet, s.space)));
          },
          py::arg("data"), py::arg("alphabet"), py::arg("max_depth"), py::arg("prior"),
          py::arg("tree"), py::arg("alpha") = 0.5);

    m.def("bayes_factor",
          [](const std::string& data, const std::string& alphabet, int max_depth,
             const std::string& numerator, const std::string& denominator, double alpha) {
              Session s(alphabet, max_depth);
              auto report = bayes_factor(parse_sequence(data, s.alphabet),
                                         parse_prior_spec(numerator, s.alphabet, s.space),
                                         parse_prior_spec(denominator, s.alphabet, s.space),
                                         alpha);
              py::dict out;
              out["log10_bf"] = report.log10_bf;
              out["numerator_model"] = report.numerator_model;
              out["denominator_model"] = report.denominator_model;
              out["alpha"] = report.alpha;
              out["interpretation"] = report.interpretation;
              return out;
          },
          py::arg("data"), py::arg("alphabet"), py::arg("max_depth"), py::arg("numerator"),
          py::arg("denominator"), py::arg("alpha") = 0.5);

    m.def("select_depth",
          [](const std::string& data, const std::string& alphabet, int max_depth, double alpha,
             double c) {
              Session s(alphabet, max_depth);
              auto sel = select_depth(parse_sequence(data, s.alphabet), s.space, alpha, c);
              py::dict out;
              out["depth"] = sel.depth;
              out["trace"] = trace_dict(sel.trace);
              return out;
          },
          py::arg("data"), py::arg("alphabet"), py::arg("max_depth"), py::arg("alpha") = 0.5,
          py::arg("c") = 0.0, "Sequential maximal-depth selection via Bayes factors.");

    m.def("select_model",
          [](const std::string& data, const std::string& alphabet, int max_depth,
             const std::vector<std::string>& candidates, double alpha, double c1, double c2) {
              Session s(alphabet, max_depth);
              std::vector<NodeWeightFunction> fns;
              for (const auto& spec : candidates)
                  fns.push_back(parse_prior_spec(spec, s.alphabet, s.space));
              auto sel = select_model(parse_sequence(data, s.alphabet), s.space, alpha, fns,
                                      c1, c2);
              py::dict out;
              out["best_model"] = sel.best.spec();
              out["best_index"] = sel.best_index;
              out["best_depth"] = sel.best_depth;
              out["candidate_depths"] = sel.candidate_depths;
              out["candidate_log10_evidence"] = sel.candidate_log10_evidence;
              out["trace"] = trace_dict(sel.trace);
              return out;
          },
          py::arg("data"), py::arg("alphabet"), py::arg("max_depth"), py::arg("candidates"),
          py::arg("alpha") = 0.5, py::arg("c1") = 0.0, py::arg("c2") = 0.0,
          "Two-stage model selection over candidate priors.");

    m.def("structural_distance",
          [](const std::vector<std::string>& tree_a, const std::vector<std::string>& tree_b,
             const std::string& alphabet, int max_depth) {
              Session s(alphabet, max_depth);
              return structural_distance(tree_from_leaves(tree_a, s.alphabet, s.space),
                                         tree_from_leaves(tree_b, s.alphabet, s.space));
          },
          py::arg("tree_a"), py::arg("tree_b"), py::arg("alphabet"), py::arg("max_depth"),
          "Grow/prune distance |a^c Δ b^c| between two trees.");

    m.def("simulate",
          [](const std::string& model, std::size_t n, std::uint64_t seed, int max_depth) {
              auto tm = model == "scenario-a" || model == "scenario-b" ? builtin_model(model)
                                                                       : parse_model_file(model);
              int L = max_depth > 0 ? max_depth : tm.tree().space().max_depth();
              TreeSpace space(tm.alphabet().size(), L);
              return sample_sequence(tm, n, seed, space).to_string();
          },
          py::arg("model"), py::arg("n"), py::arg("seed") = 1, py::arg("max_depth") = 0,
          "Draw a sequence from a builtin scenario or a model file; returns chars.");

    m.def("model_tree",
          [](const std::string& model) {
              auto tm = model == "scenario-a" || model == "scenario-b" ? builtin_model(model)
                                                                       : parse_model_file(model);
              return leaves_of(tm.tree(), tm.alphabet());
          },
          py::arg("model"), "Leaf contexts of a builtin scenario or model file.");
}
