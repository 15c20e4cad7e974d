#include <random>

#include "bct/bct.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace bct;

namespace {

const Alphabet kBinary = Alphabet::parse("01");

std::vector<std::int64_t> vec(std::span<const std::int64_t> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("counts match the worked example") {
    TreeSpace space(2, 1);
    Sequence z(kBinary, {0, 1, 0, 1, 1});
    CountTable table(z, space);

    CHECK(vec(table.node_counts(Context{})) == std::vector<std::int64_t>{1, 3});
    CHECK(vec(table.node_counts(Context::parse("0", kBinary))) ==
          std::vector<std::int64_t>{0, 2});
    CHECK(vec(table.node_counts(Context::parse("1", kBinary))) ==
          std::vector<std::int64_t>{1, 1});
    CHECK(table.transitions() == 4);
}

TEST_CASE("constant sequence puts all events on one branch") {
    TreeSpace space(2, 1);
    Sequence z(kBinary, {0, 0, 0, 0});
    CountTable table(z, space);
    CHECK(vec(table.node_counts(Context::parse("0", kBinary))) ==
          std::vector<std::int64_t>{3, 0});
    CHECK(vec(table.node_counts(Context::parse("1", kBinary))) ==
          std::vector<std::int64_t>{0, 0});
}

TEST_CASE("sequence no longer than L is rejected") {
    TreeSpace space(2, 3);
    CHECK_THROWS_AS(CountTable(Sequence(kBinary, {0, 1, 0}), space), ValidationError);
    CHECK_NOTHROW(CountTable(Sequence(kBinary, {0, 1, 0, 1}), space));
}

TEST_CASE("counts of unseen and deep contexts") {
    TreeSpace space(2, 2);
    Sequence z(kBinary, {1, 1, 1, 1});
    CountTable table(z, space);
    CHECK(vec(table.node_counts(Context::parse("00", kBinary))) ==
          std::vector<std::int64_t>{0, 0});
    CHECK_THROWS_AS(table.node_counts(Context::parse("000", kBinary)), ValidationError);
}

TEST_CASE("counts match a direct scan and satisfy the parent-sum invariant") {
    std::mt19937 rng(23);
    for (TreeSpace space : {TreeSpace(2, 3), TreeSpace(3, 2)}) {
        const Alphabet alphabet = space.m() == 2 ? kBinary : Alphabet::parse("012");
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<Symbol> codes(30 + rng() % 40);
            for (auto& c : codes) c = static_cast<Symbol>(rng() % space.m());
            Sequence z(alphabet, codes);
            CountTable table(z, space);

            auto max = maximal_tree(space);
            std::vector<Context> nodes = max.inner_nodes();
            nodes.insert(nodes.end(), max.leaves().begin(), max.leaves().end());

            std::int64_t leaf_total = 0;
            for (const Context& s : nodes) {
                auto got = vec(table.node_counts(s));
                CHECK(got == testing::scan_counts(z, space.max_depth(), s));
                if (s.length() == space.max_depth())
                    for (auto c : got) leaf_total += c;
                if (s.length() < space.max_depth()) {
                    // parent counts are child sums
                    for (int k = 0; k < space.m(); ++k) {
                        std::int64_t child_sum = 0;
                        for (int a = 0; a < space.m(); ++a) {
                            std::vector<Symbol> ext{static_cast<Symbol>(a)};
                            ext.insert(ext.end(), s.symbols().begin(), s.symbols().end());
                            child_sum += table.node_counts(Context(ext))[k];
                        }
                        CHECK(child_sum == got[k]);
                    }
                }
            }
            CHECK(leaf_total == table.transitions());
        }
    }
}

TEST_CASE("rebuilding the table is deterministic") {
    TreeSpace space(2, 4);
    std::mt19937 rng(5);
    std::vector<Symbol> codes(200);
    for (auto& c : codes) c = static_cast<Symbol>(rng() % 2);
    Sequence z(kBinary, codes);
    CountTable a(z, space), b(z, space);
    auto max = maximal_tree(space);
    for (const auto& leaf : max.leaves())
        CHECK(vec(a.node_counts(leaf)) == vec(b.node_counts(leaf)));
}
