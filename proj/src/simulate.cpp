#include "bct/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "bct/errors.hpp"

namespace bct {

TransitionModel::TransitionModel(Alphabet alphabet, ContextTree tree,
                                 std::vector<std::pair<Context, std::vector<double>>> leaf_probs,
                                 InitialPolicy initial)
    : alphabet_(std::move(alphabet)), tree_(std::move(tree)), initial_(std::move(initial)) {
    const int m = alphabet_.size();
    if (m != tree_.space().m())
        throw ValidationError("model alphabet size does not match the tree space");
    if (leaf_probs.size() != tree_.num_leaves())
        throw ValidationError("model has " + std::to_string(leaf_probs.size()) +
                              " probability rows for " + std::to_string(tree_.num_leaves()) +
                              " leaves");
    rows_.assign(tree_.num_leaves(), {});
    for (auto& [leaf, row] : leaf_probs) {
        auto idx = tree_.find_leaf(leaf);
        if (!idx)
            throw ValidationError("probability row for \"" + leaf.display(alphabet_) +
                                  "\" which is not a leaf of the tree");
        if (!rows_[*idx].empty())
            throw ValidationError("duplicate probability row for leaf \"" +
                                  leaf.display(alphabet_) + "\"");
        if (static_cast<int>(row.size()) != m)
            throw ValidationError("probability vector for \"" + leaf.display(alphabet_) +
                                  "\" has length " + std::to_string(row.size()));
        double sum = 0;
        for (double p : row) {
            if (!(p >= 0)) throw ValidationError("negative transition probability");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw ValidationError("probability vector for \"" + leaf.display(alphabet_) +
                                  "\" sums to " + std::to_string(sum));
        rows_[*idx] = std::move(row);
    }
    if (initial_.kind == InitialPolicy::Kind::Repeat &&
        static_cast<int>(initial_.repeat_symbol) >= m)
        throw ValidationError("initial repeat symbol out of alphabet range");
    for (Symbol s : initial_.fixed)
        if (static_cast<int>(s) >= m)
            throw ValidationError("initial string symbol out of alphabet range");
}

std::span<const double> TransitionModel::probs(const Context& leaf) const {
    auto idx = tree_.find_leaf(leaf);
    if (!idx)
        throw ValidationError("\"" + leaf.display(alphabet_) + "\" is not a leaf of the model");
    return rows_[*idx];
}

std::span<const double> TransitionModel::probs_for_past(std::span<const Symbol> past) const {
    return rows_[tree_.suffix_leaf_index(past)];
}

Sequence sample_sequence(const TransitionModel& model, std::size_t n, std::uint64_t seed,
                         const TreeSpace& space) {
    const int m = model.alphabet().size();
    if (space.m() != m)
        throw ValidationError("sampling space alphabet size does not match the model");
    if (model.tree().depth() > space.max_depth())
        throw ValidationError("model tree depth " + std::to_string(model.tree().depth()) +
                              " exceeds the sampling space depth " +
                              std::to_string(space.max_depth()));
    const std::size_t L = static_cast<std::size_t>(space.max_depth());
    if (n <= L)
        throw ValidationError("sample length must exceed the maximal depth (n > L)");

    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        // 53-bit mantissa in [0, 1); bit-stable across platforms
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    auto draw = [&](std::span<const double> p) {
        double u = uniform();
        double acc = 0;
        for (int k = 0; k + 1 < m; ++k) {
            acc += p[k];
            if (u < acc) return static_cast<Symbol>(k);
        }
        return static_cast<Symbol>(m - 1);
    };

    std::vector<Symbol> codes;
    codes.reserve(n);
    const InitialPolicy& init = model.initial();
    switch (init.kind) {
        case InitialPolicy::Kind::Repeat:
            codes.assign(L, init.repeat_symbol);
            break;
        case InitialPolicy::Kind::Fixed:
            if (init.fixed.size() != L)
                throw ValidationError("initial string has " + std::to_string(init.fixed.size()) +
                                      " symbols, expected exactly L=" + std::to_string(L));
            codes = init.fixed;
            break;
        case InitialPolicy::Kind::UniformRandom:
            for (std::size_t i = 0; i < L; ++i)
                codes.push_back(static_cast<Symbol>(rng() % static_cast<std::uint64_t>(m)));
            break;
    }

    for (std::size_t t = L; t < n; ++t)
        codes.push_back(draw(model.probs_for_past(codes)));
    return Sequence(model.alphabet(), std::move(codes));
}

namespace {

TransitionModel make_binary_model(int depth,
                                  std::vector<std::pair<std::string, std::vector<double>>> rows) {
    Alphabet alphabet = Alphabet::parse("01");
    TreeSpace space(2, depth);
    std::vector<Context> leaves;
    std::vector<std::pair<Context, std::vector<double>>> probs;
    for (auto& [text, row] : rows) {
        Context ctx = Context::parse(text, alphabet);
        leaves.push_back(ctx);
        probs.emplace_back(std::move(ctx), std::move(row));
    }
    return TransitionModel(alphabet, ContextTree::validate(std::move(leaves), space),
                           std::move(probs));
}

}  // namespace

TransitionModel builtin_model(std::string_view name) {
    if (name == "scenario-a") {
        // 7-leaf depth-3 binary tree; leaves written oldest symbol first
        return make_binary_model(3, {
                                        {"11", {0.4, 0.6}},
                                        {"101", {0.4, 0.6}},
                                        {"001", {0.8, 0.2}},
                                        {"110", {0.3, 0.7}},
                                        {"010", {0.7, 0.3}},
                                        {"100", {0.6, 0.4}},
                                        {"000", {0.9, 0.1}},
                                    });
    }
    if (name == "scenario-b") {
        // 0-renewing tree {0, 01, 011, 0111, 1111}
        return make_binary_model(4, {
                                        {"0", {0.1, 0.9}},
                                        {"01", {0.5, 0.5}},
                                        {"011", {0.5, 0.5}},
                                        {"0111", {0.5, 0.5}},
                                        {"1111", {0.9, 0.1}},
                                    });
    }
    throw ValidationError("unknown builtin model \"" + std::string(name) +
                          "\" (try scenario-a or scenario-b)");
}

TransitionModel parse_model_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open model file: " + path.string());

    std::string header;
    if (!std::getline(in, header)) throw ValidationError("model file is empty");
    std::istringstream hs(header);
    std::string alpha_kv, depth_kv;
    if (!(hs >> alpha_kv >> depth_kv) || alpha_kv.rfind("alphabet=", 0) != 0 ||
        depth_kv.rfind("L=", 0) != 0)
        throw ValidationError("model header must be \"alphabet=<chars> L=<int>\", got \"" +
                              header + "\"");
    Alphabet alphabet = Alphabet::parse(alpha_kv.substr(9));
    int depth;
    try {
        depth = std::stoi(depth_kv.substr(2));
    } catch (const std::exception&) {
        throw ValidationError("bad L in model header: \"" + header + "\"");
    }
    TreeSpace space(alphabet.size(), depth);

    std::vector<Context> leaves;
    std::vector<std::pair<Context, std::vector<double>>> probs;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": expected \"<leaf> : p0,p1,...\"");
        auto strip = [](std::string s) {
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
            std::size_t i = 0;
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
            return s.substr(i);
        };
        Context leaf;
        try {
            leaf = Context::parse(strip(line.substr(0, colon)), alphabet);
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
        std::vector<double> row;
        std::istringstream ps(line.substr(colon + 1));
        std::string tok;
        while (std::getline(ps, tok, ',')) {
            try {
                row.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": bad probability \"" + tok + "\"");
            }
        }
        leaves.push_back(leaf);
        probs.emplace_back(std::move(leaf), std::move(row));
    }
    ContextTree tree = ContextTree::validate(std::move(leaves), space);
    return TransitionModel(alphabet, std::move(tree), std::move(probs));
}

void write_model_file(const TransitionModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "alphabet=" << model.alphabet().letters() << " L=" << model.tree().space().max_depth()
        << "\n";
    char buf[64];
    for (const Context& leaf : model.tree().leaves()) {
        out << leaf.display(model.alphabet()) << " : ";
        auto row = model.probs(leaf);
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::snprintf(buf, sizeof(buf), "%.17g", row[k]);
            out << (k ? "," : "") << buf;
        }
        out << "\n";
    }
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace bct
