#include <cmath>
#include <filesystem>
#include <map>

#include "bct/bct.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace bct;

namespace {

const Alphabet kBinary = Alphabet::parse("01");

Context ctx(const std::string& text) { return Context::parse(text, kBinary); }

// empirical next-symbol frequencies at each leaf of the model tree
std::map<std::string, std::pair<std::int64_t, std::int64_t>> leaf_stats(
    const TransitionModel& model, const Sequence& z, int max_depth) {
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> stats;  // leaf -> (n1, total)
    auto codes = z.codes();
    for (std::size_t t = static_cast<std::size_t>(max_depth); t < codes.size(); ++t) {
        const Context& leaf = model.tree().suffix_leaf(codes.subspan(0, t));
        auto& [ones, total] = stats[leaf.display(model.alphabet())];
        ones += codes[t] == 1;
        ++total;
    }
    return stats;
}

}  // namespace

TEST_CASE("builtin models match their published structure") {
    auto a = builtin_model("scenario-a");
    CHECK(a.tree().num_leaves() == 7);
    CHECK(a.tree().depth() == 3);
    CHECK(structural_distance(a.tree(), maximal_tree(TreeSpace(2, 3))) == 1);
    CHECK(a.probs(ctx("000"))[1] == doctest::Approx(0.1));
    CHECK(a.probs(ctx("11"))[1] == doctest::Approx(0.6));

    auto b = builtin_model("scenario-b");
    CHECK(b.tree().num_leaves() == 5);
    CHECK(b.tree().depth() == 4);
    CHECK(testing::is_a_renewing(b.tree(), 0));
    auto i0 = NodeWeightFunction::renewal_indicator(TreeSpace(2, 4), 0);
    for (const auto& leaf : b.tree().leaves()) CHECK(i0.eval_node(leaf).value() == 1.0);
    CHECK(b.probs(ctx("0"))[0] == doctest::Approx(0.1));
    CHECK(b.probs(ctx("0"))[1] == doctest::Approx(0.9));
    CHECK(b.probs(ctx("1111"))[0] == doctest::Approx(0.9));

    CHECK_THROWS_AS(builtin_model("scenario-c"), ValidationError);
}

TEST_CASE("deterministic point-mass model produces a constant tail") {
    TreeSpace space(2, 1);
    auto tree = ContextTree::validate({ctx("0"), ctx("1")}, space);
    TransitionModel model(kBinary, tree, {{ctx("0"), {0.0, 1.0}}, {ctx("1"), {0.0, 1.0}}});
    auto z = sample_sequence(model, 50, 1, space);
    for (std::size_t t = 1; t < z.size(); ++t) CHECK(z[t] == 1);
    CHECK(z[0] == 0);  // repeat-0 initial policy
}

TEST_CASE("same seed reproduces the sample, different seeds differ") {
    auto model = builtin_model("scenario-a");
    TreeSpace space(2, 10);
    auto a = sample_sequence(model, 2000, 42, space);
    auto b = sample_sequence(model, 2000, 42, space);
    auto c = sample_sequence(model, 2000, 43, space);
    CHECK(a.to_string() == b.to_string());
    CHECK(a.to_string() != c.to_string());
    CHECK(a.size() == 2000);
}

TEST_CASE("sampled leaf frequencies match the transition vectors") {
    for (const char* name : {"scenario-a", "scenario-b"}) {
        auto model = builtin_model(name);
        TreeSpace space(2, model.tree().depth());
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            auto z = sample_sequence(model, 100000, seed, space);
            auto stats = leaf_stats(model, z, space.max_depth());
            for (const auto& leaf : model.tree().leaves()) {
                auto [ones, total] = stats[leaf.display(model.alphabet())];
                REQUIRE(total > 500);
                double freq = static_cast<double>(ones) / static_cast<double>(total);
                CHECK(std::abs(freq - model.probs(leaf)[1]) < 0.02);
            }
        }
    }
}

TEST_CASE("frequency of a one after three zeros tracks the deepest leaf") {
    auto model = builtin_model("scenario-a");
    auto z = sample_sequence(model, 100000, 7, TreeSpace(2, 3));
    auto stats = leaf_stats(model, z, 3);
    auto [ones, total] = stats["000"];
    double freq = static_cast<double>(ones) / static_cast<double>(total);
    CHECK(std::abs(freq - 0.1) < 0.01);
}

TEST_CASE("initial policies fix the first L symbols") {
    TreeSpace space(2, 3);
    auto model = builtin_model("scenario-a");

    auto fixed = TransitionModel(model.alphabet(), model.tree(),
                                 {{ctx("11"), {0.4, 0.6}},
                                  {ctx("101"), {0.4, 0.6}},
                                  {ctx("001"), {0.8, 0.2}},
                                  {ctx("110"), {0.3, 0.7}},
                                  {ctx("010"), {0.7, 0.3}},
                                  {ctx("100"), {0.6, 0.4}},
                                  {ctx("000"), {0.9, 0.1}}},
                                 InitialPolicy::fixed_string({1, 0, 1}));
    auto z = sample_sequence(fixed, 10, 5, space);
    CHECK(z[0] == 1);
    CHECK(z[1] == 0);
    CHECK(z[2] == 1);

    auto bad = TransitionModel(model.alphabet(), model.tree(),
                               {{ctx("11"), {0.4, 0.6}},
                                {ctx("101"), {0.4, 0.6}},
                                {ctx("001"), {0.8, 0.2}},
                                {ctx("110"), {0.3, 0.7}},
                                {ctx("010"), {0.7, 0.3}},
                                {ctx("100"), {0.6, 0.4}},
                                {ctx("000"), {0.9, 0.1}}},
                               InitialPolicy::fixed_string({1, 0}));
    CHECK_THROWS_AS(sample_sequence(bad, 10, 5, space), ValidationError);
}

TEST_CASE("model validation rejects malformed inputs") {
    TreeSpace space(2, 1);
    auto tree = ContextTree::validate({ctx("0"), ctx("1")}, space);
    // bad simplex
    CHECK_THROWS_AS(
        TransitionModel(kBinary, tree, {{ctx("0"), {0.5, 0.6}}, {ctx("1"), {0.5, 0.5}}}),
        ValidationError);
    // missing row
    CHECK_THROWS_AS(TransitionModel(kBinary, tree, {{ctx("0"), {0.5, 0.5}}}), ValidationError);
    // row for a non-leaf
    CHECK_THROWS_AS(
        TransitionModel(kBinary, tree, {{ctx("0"), {1, 0}}, {ctx("00"), {1, 0}}}),
        ValidationError);
    // n <= L
    auto model = builtin_model("scenario-a");
    CHECK_THROWS_AS(sample_sequence(model, 3, 1, TreeSpace(2, 3)), ValidationError);
    // model deeper than the sampling space
    CHECK_THROWS_AS(sample_sequence(builtin_model("scenario-b"), 100, 1, TreeSpace(2, 3)),
                    ValidationError);
}

TEST_CASE("model files round-trip") {
    auto model = builtin_model("scenario-b");
    auto path = std::filesystem::temp_directory_path() / "bct_test_model.txt";
    write_model_file(model, path);
    auto loaded = parse_model_file(path);
    CHECK(loaded.tree() == model.tree());
    CHECK(loaded.alphabet() == model.alphabet());
    for (const auto& leaf : model.tree().leaves()) {
        auto a = model.probs(leaf), b = loaded.probs(leaf);
        for (int k = 0; k < 2; ++k) CHECK(a[k] == b[k]);
    }
    std::filesystem::remove(path);

    CHECK_THROWS_AS(parse_model_file("/nonexistent/bct.model"), IoError);
}

TEST_CASE("sampled sequences round-trip through sequence files") {
    auto model = builtin_model("scenario-a");
    auto z = sample_sequence(model, 500, 9, TreeSpace(2, 3));
    auto path = std::filesystem::temp_directory_path() / "bct_test_sampled.txt";
    write_sequence(z, path);
    auto back = load_sequence(path, model.alphabet());
    CHECK(back.to_string() == z.to_string());
    std::filesystem::remove(path);
}
