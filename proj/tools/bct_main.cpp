// bct: exact Bayesian inference for variable-length Markov chains over
// bounded-depth context trees. Subcommands wrap the library modules and
// emit JSON (machine interface) or CSV (table/plot interface).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bct/bct.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace bct;

namespace {

// CLI-side argument problems: exit code 2 (file/data problems exit 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t node_budget() {
    if (const char* env = std::getenv("BCT_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw UsageError("BCT_NODE_BUDGET must be a positive integer, got \"" +
                             std::string(env) + "\"");
        return static_cast<std::size_t>(v);
    }
    return kDefaultNodeBudget;
}

// 12 significant digits for serialized numbers
double sig12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

json prob_json(LogWeight w) {
    if (w.is_zero()) return json{{"log", nullptr}, {"log10", nullptr}, {"value", 0.0}};
    return json{{"log", sig12(w.log())}, {"log10", sig12(w.log10())}, {"value", sig12(w.value())}};
}

json log_pair(double natural_log) {
    return json{{"log", sig12(natural_log)}, {"log10", sig12(natural_log / std::numbers::ln10)}};
}

json envelope(json config, std::optional<std::uint64_t> seed) {
    return json{{"tool", "bct"},
                {"version", kVersion},
                {"generator", kGeneratorId},
                {"seed", seed ? json(*seed) : json(nullptr)},
                {"config", std::move(config)}};
}

json tree_json(const ContextTree& tree, const Alphabet& alphabet) {
    json leaves = json::array();
    for (const Context& s : tree.leaves()) leaves.push_back(s.display(alphabet));
    return leaves;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + out_path);
    out << text;
    if (!out) throw IoError("write failed: " + out_path);
}

void emit_json(const json& j, const std::string& out_path) {
    emit(j.dump(2) + "\n", out_path);
}

SequenceFormat parse_data_format(const std::string& name) {
    if (name == "chars") return SequenceFormat::Chars;
    if (name == "csv-int") return SequenceFormat::CsvInt;
    throw UsageError("unknown data format \"" + name + "\" (chars or csv-int)");
}

NodeWeightFunction parse_prior_arg(const std::string& spec, const Alphabet& alphabet,
                                   const TreeSpace& space) {
    try {
        return parse_prior_spec(spec, alphabet, space);
    } catch (const ValidationError& e) {
        throw UsageError(std::string("bad --prior: ") + e.what());
    }
}

InitialPolicy parse_initial_arg(const std::string& spec, const Alphabet& alphabet) {
    if (spec == "uniform") return InitialPolicy::uniform_random();
    if (spec.rfind("repeat:", 0) == 0) {
        std::string arg = spec.substr(7);
        if (arg.size() != 1) throw UsageError("repeat policy needs one alphabet character");
        auto code = alphabet.code(arg[0]);
        if (!code) throw UsageError("initial symbol not in the alphabet");
        return InitialPolicy::repeat(*code);
    }
    if (spec.rfind("str:", 0) == 0) {
        std::vector<Symbol> syms;
        for (char c : spec.substr(4)) {
            auto code = alphabet.code(c);
            if (!code) throw UsageError(std::string("initial symbol '") + c +
                                        "' not in the alphabet");
            syms.push_back(*code);
        }
        return InitialPolicy::fixed_string(std::move(syms));
    }
    throw UsageError("unknown --initial \"" + spec + "\" (repeat:<sym>, str:<syms>, uniform)");
}

TransitionModel load_model(const std::string& name) {
    if (name == "scenario-a" || name == "scenario-b") return builtin_model(name);
    return parse_model_file(name);
}

json trace_json(const SelectionTrace& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps)
        steps.push_back(json{{"incumbent", s.incumbent},
                             {"challenger", s.challenger},
                             {"log10_bf", sig12(s.log10_bf)},
                             {"switched", s.switched}});
    return steps;
}

std::string trace_csv(const SelectionTrace& trace) {
    std::string out = "incumbent,challenger,log10_bf,switched\n";
    for (const auto& s : trace.steps)
        out += s.incumbent + "," + s.challenger + "," + fmt12(s.log10_bf) + "," +
               (s.switched ? "true" : "false") + "\n";
    return out;
}

// shared analysis options
struct AnalysisArgs {
    std::string data_path;
    std::string alphabet_spec;
    std::string data_format = "chars";
    int max_depth = 0;
    double alpha = 0.5;
    std::string out;

    Alphabet alphabet() const { return Alphabet::parse(alphabet_spec); }
    TreeSpace space() const { return TreeSpace(alphabet().size(), max_depth); }
    Sequence load() const {
        return load_sequence(data_path, alphabet(), parse_data_format(data_format));
    }
    json config(const char* command) const {
        return json{{"command", command},        {"data", data_path},
                    {"alphabet", alphabet_spec}, {"data_format", data_format},
                    {"max_depth", max_depth},    {"alpha", alpha},
                    {"node_budget", node_budget()}};
    }
};

void add_analysis_options(CLI::App* cmd, AnalysisArgs& args, bool with_data = true) {
    if (with_data) {
        cmd->add_option("--data", args.data_path, "sequence file")->required();
        cmd->add_option("--data-format", args.data_format, "chars or csv-int");
        cmd->add_option("--alpha", args.alpha, "Dirichlet hyper-parameter (default 0.5)");
    }
    cmd->add_option("--alphabet", args.alphabet_spec, "alphabet characters, e.g. 01")
        ->required();
    cmd->add_option("-L,--max-depth", args.max_depth, "maximal context depth")->required();
    cmd->add_option("-o,--out", args.out, "output file (default stdout)");
}

json summary_json(const PosteriorSummary& summary, const Alphabet& alphabet) {
    json out{{"log_evidence", sig12(summary.log_evidence)},
             {"log10_evidence", sig12(summary.log10_evidence)},
             {"map_tree", tree_json(summary.map_tree, alphabet)},
             {"map_posterior", log_pair(summary.map_log_posterior)},
             {"map_tie", summary.map_tie}};
    if (summary.ref_prior) out["ref_prior"] = prob_json(*summary.ref_prior);
    if (summary.ref_posterior) out["ref_posterior"] = prob_json(*summary.ref_posterior);
    return out;
}

// ---------------------------------------------------------------- commands

int cmd_evidence(const AnalysisArgs& args, const std::string& prior_spec,
                 const std::string& ref_tree_path, const std::string& tree_out,
                 const char* command) {
    auto alphabet = args.alphabet();
    auto space = args.space();
    auto prior = parse_prior_arg(prior_spec, alphabet, space);
    auto z = args.load();

    std::optional<ContextTree> ref;
    if (!ref_tree_path.empty()) ref = parse_tree_file(ref_tree_path, alphabet, space);

    auto summary = evidence(z, prior, args.alpha, ref ? &*ref : nullptr, node_budget());

    json config = args.config(command);
    config["prior"] = prior.spec();
    if (!ref_tree_path.empty()) config["tree"] = ref_tree_path;
    json out = envelope(std::move(config), std::nullopt);
    out["result"] = summary_json(summary, alphabet);
    if (!tree_out.empty()) {
        write_tree_file(summary.map_tree, alphabet, tree_out);
        out["result"]["map_tree_file"] = tree_out;
    }
    emit_json(out, args.out);
    return 0;
}

int cmd_prior(const std::string& alphabet_spec, int max_depth, const std::string& prior_spec,
              const std::string& tree_path, const std::string& out_path) {
    auto alphabet = Alphabet::parse(alphabet_spec);
    TreeSpace space(alphabet.size(), max_depth);
    auto prior = parse_prior_arg(prior_spec, alphabet, space);
    auto tree = parse_tree_file(tree_path, alphabet, space);

    LogWeight p = prior_prob(prior, tree, node_budget());
    json config{{"command", "prior"}, {"alphabet", alphabet_spec}, {"max_depth", max_depth},
                {"prior", prior.spec()}, {"tree", tree_path}, {"node_budget", node_budget()}};
    json out = envelope(std::move(config), std::nullopt);
    out["result"] = json{{"prior_prob", prob_json(p)},
                         {"normalizer_log", sig12(sum_over_trees(prior, node_budget()).log())},
                         {"tree", tree_json(tree, alphabet)}};
    emit_json(out, out_path);
    return 0;
}

int cmd_bf(const AnalysisArgs& args, const std::string& f_spec, const std::string& g_spec,
           const std::string& format) {
    auto alphabet = args.alphabet();
    auto space = args.space();
    auto f = parse_prior_arg(f_spec, alphabet, space);
    auto g = parse_prior_arg(g_spec, alphabet, space);
    auto report = bayes_factor(args.load(), f, g, args.alpha, node_budget());

    if (format == "csv") {
        emit("numerator,denominator,alpha,log10_bf,interpretation\n" + report.numerator_model +
                 "," + report.denominator_model + "," + fmt12(report.alpha) + "," +
                 fmt12(report.log10_bf) + "," + report.interpretation + "\n",
             args.out);
        return 0;
    }
    json config = args.config("bf");
    config["numerator"] = f.spec();
    config["denominator"] = g.spec();
    json out = envelope(std::move(config), std::nullopt);
    out["result"] = json{{"log10_bf", sig12(report.log10_bf)},
                         {"numerator_model", report.numerator_model},
                         {"denominator_model", report.denominator_model},
                         {"alpha", report.alpha},
                         {"interpretation", report.interpretation}};
    emit_json(out, args.out);
    return 0;
}

int cmd_select_depth(const AnalysisArgs& args, double c, const std::string& format) {
    auto sel = select_depth(args.load(), args.space(), args.alpha, c, node_budget());
    if (format == "csv") {
        emit("selected_depth\n" + std::to_string(sel.depth) + "\n\n" + trace_csv(sel.trace),
             args.out);
        return 0;
    }
    json config = args.config("select-depth");
    config["threshold"] = c;
    json out = envelope(std::move(config), std::nullopt);
    out["result"] = json{{"selected_depth", sel.depth}, {"trace", trace_json(sel.trace)}};
    emit_json(out, args.out);
    return 0;
}

int cmd_select_model(const AnalysisArgs& args, const std::vector<std::string>& prior_specs,
                     double c1, double c2, const std::string& format) {
    auto alphabet = args.alphabet();
    auto space = args.space();
    std::vector<NodeWeightFunction> candidates;
    for (const auto& spec : prior_specs)
        candidates.push_back(parse_prior_arg(spec, alphabet, space));

    auto sel = select_model(args.load(), space, args.alpha, candidates, c1, c2, node_budget());

    if (format == "csv") {
        std::string head = "best_model,best_depth,log10_evidence\n" + sel.best.spec() + "," +
                           std::to_string(sel.best_depth) + "," +
                           fmt12(sel.candidate_log10_evidence[sel.best_index]) + "\n\n";
        emit(head + trace_csv(sel.trace), args.out);
        return 0;
    }
    json config = args.config("select-model");
    config["candidates"] = prior_specs;
    config["c1"] = c1;
    config["c2"] = c2;
    json out = envelope(std::move(config), std::nullopt);
    json per_candidate = json::array();
    for (std::size_t i = 0; i < candidates.size(); ++i)
        per_candidate.push_back(json{{"prior", candidates[i].spec()},
                                     {"depth", sel.candidate_depths[i]},
                                     {"log10_evidence", sig12(sel.candidate_log10_evidence[i])}});
    out["result"] = json{{"best_model", sel.best.spec()},
                         {"best_index", sel.best_index},
                         {"best_depth", sel.best_depth},
                         {"candidates", per_candidate},
                         {"trace", trace_json(sel.trace)}};
    emit_json(out, args.out);
    return 0;
}

int cmd_distance(const std::string& alphabet_spec, int max_depth, const std::string& tree_a,
                 const std::string& tree_b, const std::string& out_path) {
    auto alphabet = Alphabet::parse(alphabet_spec);
    TreeSpace space(alphabet.size(), max_depth);
    auto a = parse_tree_file(tree_a, alphabet, space);
    auto b = parse_tree_file(tree_b, alphabet, space);
    json config{{"command", "distance"}, {"alphabet", alphabet_spec},
                {"max_depth", max_depth}, {"tree_a", tree_a}, {"tree_b", tree_b}};
    json out = envelope(std::move(config), std::nullopt);
    out["result"] = json{{"distance", structural_distance(a, b)}};
    emit_json(out, out_path);
    return 0;
}

int cmd_simulate(const std::string& model_name, std::size_t n, std::uint64_t seed,
                 int max_depth, const std::string& initial_spec, const std::string& seq_out,
                 const std::string& out_path) {
    auto model = load_model(model_name);
    if (!initial_spec.empty()) {
        auto policy = parse_initial_arg(initial_spec, model.alphabet());
        model = TransitionModel(model.alphabet(), model.tree(), [&] {
            std::vector<std::pair<Context, std::vector<double>>> rows;
            for (const auto& leaf : model.tree().leaves())
                rows.emplace_back(leaf, std::vector<double>(model.probs(leaf).begin(),
                                                            model.probs(leaf).end()));
            return rows;
        }(), policy);
    }
    int L = max_depth > 0 ? max_depth : model.tree().space().max_depth();
    TreeSpace space(model.alphabet().size(), L);
    auto z = sample_sequence(model, n, seed, space);
    write_sequence(z, seq_out);

    json config{{"command", "simulate"}, {"model", model_name}, {"n", n},
                {"max_depth", L},        {"initial", initial_spec.empty() ? "repeat:default"
                                                                          : initial_spec},
                {"sequence_out", seq_out}};
    json out = envelope(std::move(config), seed);
    out["result"] = json{{"path", seq_out},
                         {"n", z.size()},
                         {"alphabet", model.alphabet().letters()},
                         {"tree", tree_json(model.tree(), model.alphabet())}};
    emit_json(out, out_path);
    return 0;
}

int cmd_report(const std::string& model_name, const std::vector<std::string>& prior_specs,
               std::vector<std::size_t> lengths, std::vector<std::uint64_t> seeds,
               double alpha, int max_depth, const std::string& prefix) {
    auto model = load_model(model_name);
    const Alphabet alphabet = model.alphabet();
    TreeSpace space(alphabet.size(), max_depth);
    auto true_tree = ContextTree::validate(model.tree().leaves(), space);

    std::vector<NodeWeightFunction> priors;
    for (const auto& spec : prior_specs)
        priors.push_back(parse_prior_arg(spec, alphabet, space));

    std::sort(lengths.begin(), lengths.end());
    std::sort(seeds.begin(), seeds.end());

    struct Row {
        std::string prior;
        std::size_t n;
        std::uint64_t seed;
        std::size_t delta;
        double prior_true, posterior_true, log10_e;
    };
    std::vector<Row> rows;
    for (const auto& prior : priors)
        for (std::size_t n : lengths)
            for (std::uint64_t seed : seeds) {
                auto z = sample_sequence(model, n, seed, space);
                auto summary = evidence(z, prior, alpha, &true_tree, node_budget());
                rows.push_back(Row{prior.spec(), n, seed,
                                   structural_distance(true_tree, summary.map_tree),
                                   summary.ref_prior->value(), summary.ref_posterior->value(),
                                   summary.log10_evidence});
            }

    std::string rows_csv = "F,n,seed,delta_true_map,prior_true,posterior_true,log10_evidence\n";
    for (const auto& r : rows)
        rows_csv += r.prior + "," + std::to_string(r.n) + "," + std::to_string(r.seed) + "," +
                    std::to_string(r.delta) + "," + fmt12(r.prior_true) + "," +
                    fmt12(r.posterior_true) + "," + fmt12(r.log10_e) + "\n";
    emit(rows_csv, prefix + "_rows.csv");

    // per (prior, n) summary for bar charts; log10 columns rounded to 2 dp
    std::string summary_csv =
        "F,n,prior_true,mean_posterior_true,map_recovery_rate,mean_log10_evidence\n";
    for (const auto& prior : priors)
        for (std::size_t n : lengths) {
            double post = 0, log10e = 0, prior_true = 0;
            std::size_t hits = 0, count = 0;
            for (const auto& r : rows) {
                if (r.prior != prior.spec() || r.n != n) continue;
                post += r.posterior_true;
                log10e += r.log10_e;
                prior_true = r.prior_true;
                hits += r.delta == 0;
                ++count;
            }
            summary_csv += prior.spec() + "," + std::to_string(n) + "," + fmt12(prior_true) +
                           "," + fmt12(post / count) + "," +
                           fmt12(static_cast<double>(hits) / count) + "," +
                           fmt2(log10e / count) + "\n";
        }
    emit(summary_csv, prefix + "_summary.csv");

    json config{{"command", "report"},   {"model", model_name}, {"priors", prior_specs},
                {"n", lengths},          {"seeds", seeds},      {"alpha", alpha},
                {"max_depth", max_depth}, {"out_prefix", prefix},
                {"node_budget", node_budget()}};
    json out = envelope(std::move(config), std::nullopt);
    out["result"] = json{{"rows_csv", prefix + "_rows.csv"},
                         {"summary_csv", prefix + "_summary.csv"},
                         {"rows", rows.size()}};
    emit_json(out, "-");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bayesian inference for variable-length Markov chains"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("bct ") + kVersion);

    int rc = 0;
    std::function<int()> run;

    // evidence / map / posterior share their options
    AnalysisArgs ev_args, map_args, post_args, bf_args, sd_args, sm_args;
    std::string ev_prior, ev_tree, ev_tree_out;
    auto* ev = app.add_subcommand("evidence", "marginal likelihood, MAP tree and posteriors");
    add_analysis_options(ev, ev_args);
    ev->add_option("--prior", ev_prior, "prior spec, e.g. ctw or target:8,3*depth:5")
        ->required();
    ev->add_option("--tree", ev_tree, "reference tree file (reports its prior/posterior)");
    ev->add_option("--tree-out", ev_tree_out, "write the MAP tree to this file");
    ev->callback([&] {
        run = [&] { return cmd_evidence(ev_args, ev_prior, ev_tree, ev_tree_out, "evidence"); };
    });

    std::string map_prior, map_tree_out;
    auto* mp = app.add_subcommand("map", "maximum a posteriori context tree");
    add_analysis_options(mp, map_args);
    mp->add_option("--prior", map_prior, "prior spec")->required();
    mp->add_option("--tree-out", map_tree_out, "write the MAP tree to this file");
    mp->callback([&] {
        run = [&] { return cmd_evidence(map_args, map_prior, "", map_tree_out, "map"); };
    });

    std::string post_prior, post_tree;
    auto* po = app.add_subcommand("posterior", "posterior probability of a reference tree");
    add_analysis_options(po, post_args);
    po->add_option("--prior", post_prior, "prior spec")->required();
    po->add_option("--tree", post_tree, "reference tree file")->required();
    po->callback([&] {
        run = [&] { return cmd_evidence(post_args, post_prior, post_tree, "", "posterior"); };
    });

    std::string prior_alphabet, prior_spec, prior_tree, prior_out;
    int prior_depth = 0;
    auto* pr = app.add_subcommand("prior", "prior probability of a tree (no data needed)");
    pr->add_option("--alphabet", prior_alphabet, "alphabet characters")->required();
    pr->add_option("-L,--max-depth", prior_depth, "maximal context depth")->required();
    pr->add_option("--prior", prior_spec, "prior spec")->required();
    pr->add_option("--tree", prior_tree, "tree file")->required();
    pr->add_option("-o,--out", prior_out, "output file (default stdout)");
    pr->callback([&] {
        run = [&] {
            return cmd_prior(prior_alphabet, prior_depth, prior_spec, prior_tree, prior_out);
        };
    });

    std::string bf_f, bf_g, bf_format = "json";
    auto* bf = app.add_subcommand("bf", "Bayes factor of two priors");
    add_analysis_options(bf, bf_args);
    bf->add_option("--numerator", bf_f, "numerator prior spec")->required();
    bf->add_option("--denominator", bf_g, "denominator prior spec")->required();
    bf->add_option("--format", bf_format, "json or csv");
    bf->callback([&] { run = [&] { return cmd_bf(bf_args, bf_f, bf_g, bf_format); }; });

    double sd_c = 0.0;
    std::string sd_format = "json";
    auto* sd = app.add_subcommand("select-depth", "sequential maximal depth selection");
    add_analysis_options(sd, sd_args);
    sd->add_option("-c,--threshold", sd_c, "Bayes-factor threshold (default 0)");
    sd->add_option("--format", sd_format, "json or csv");
    sd->callback([&] { run = [&] { return cmd_select_depth(sd_args, sd_c, sd_format); }; });

    std::vector<std::string> sm_priors;
    double sm_c1 = 0.0, sm_c2 = 0.0;
    std::string sm_format = "json";
    auto* sm = app.add_subcommand("select-model", "two-stage prior/depth model selection");
    add_analysis_options(sm, sm_args);
    sm->add_option("--prior", sm_priors, "candidate prior specs (repeat, in order)")
        ->required();
    sm->add_option("--c1", sm_c1, "part-1 depth threshold (default 0)");
    sm->add_option("--c2", sm_c2, "part-2 comparison threshold (default 0)");
    sm->add_option("--format", sm_format, "json or csv");
    sm->callback([&] {
        run = [&] { return cmd_select_model(sm_args, sm_priors, sm_c1, sm_c2, sm_format); };
    });

    std::string dist_alphabet, dist_a, dist_b, dist_out;
    int dist_depth = 0;
    auto* di = app.add_subcommand("distance", "structural distance between two trees");
    di->add_option("--alphabet", dist_alphabet, "alphabet characters")->required();
    di->add_option("-L,--max-depth", dist_depth, "maximal context depth")->required();
    di->add_option("--tree-a", dist_a, "first tree file")->required();
    di->add_option("--tree-b", dist_b, "second tree file")->required();
    di->add_option("-o,--out", dist_out, "output file (default stdout)");
    di->callback([&] {
        run = [&] { return cmd_distance(dist_alphabet, dist_depth, dist_a, dist_b, dist_out); };
    });

    std::string sim_model, sim_initial, sim_seq_out, sim_out;
    std::size_t sim_n = 0;
    std::uint64_t sim_seed = 1;
    int sim_depth = 0;
    auto* si = app.add_subcommand("simulate", "draw a sequence from a context-tree model");
    si->add_option("--model", sim_model, "scenario-a, scenario-b or a model file")->required();
    si->add_option("-n,--length", sim_n, "sequence length")->required();
    si->add_option("--seed", sim_seed, "random seed (default 1)");
    si->add_option("-L,--max-depth", sim_depth, "fixed prefix length (default: model depth)");
    si->add_option("--initial", sim_initial, "repeat:<sym> | str:<syms> | uniform");
    si->add_option("--out", sim_seq_out, "sequence output file")->required();
    si->add_option("-o,--report-out", sim_out, "metadata output (default stdout)");
    si->callback([&] {
        run = [&] {
            return cmd_simulate(sim_model, sim_n, sim_seed, sim_depth, sim_initial,
                                sim_seq_out, sim_out);
        };
    });

    std::string rep_model, rep_prefix;
    std::vector<std::string> rep_priors;
    std::vector<std::size_t> rep_lengths;
    std::vector<std::uint64_t> rep_seeds{1};
    double rep_alpha = 0.5;
    int rep_depth = 0;
    auto* re = app.add_subcommand("report",
                                  "simulation study tables: per-(prior,n,seed) rows + summary");
    re->add_option("--model", rep_model, "scenario-a, scenario-b or a model file")->required();
    re->add_option("--prior", rep_priors, "prior specs (repeat)")->required();
    re->add_option("-n,--length", rep_lengths, "sequence lengths (repeat)")->required();
    re->add_option("--seed", rep_seeds, "seeds (repeat, default 1)");
    re->add_option("--alpha", rep_alpha, "Dirichlet hyper-parameter (default 0.5)");
    re->add_option("-L,--max-depth", rep_depth, "maximal context depth")->required();
    re->add_option("--out", rep_prefix, "output prefix for <prefix>_rows.csv etc.")->required();
    re->callback([&] {
        run = [&] {
            return cmd_report(rep_model, rep_priors, rep_lengths, rep_seeds, rep_alpha,
                              rep_depth, rep_prefix);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        rc = run();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
