// End-to-end tests of the bct binary (path in $BCT_BIN). Each test drives
// the real executable and inspects its files, JSON and exit codes.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "bct/bct.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string bct_bin() {
    const char* env = std::getenv("BCT_BIN");
    REQUIRE(env != nullptr);
    return env;
}

fs::path work_dir() {
    auto dir = fs::temp_directory_path() / "bct_cli_tests";
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args) {
    std::string cmd = bct_bin() + " " + args + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json slurp_json(const fs::path& path) { return json::parse(slurp(path)); }

void write(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("prior command reproduces a known prior probability") {
    auto dir = work_dir();
    write(dir / "fig5a.tree", "000\n100\n010\n110\n001\n101\n11\n");
    auto out = dir / "prior.json";

    int rc = run("prior --alphabet 01 -L 10 --prior ctw --tree " + (dir / "fig5a.tree").string() +
                 " -o " + out.string());
    REQUIRE(rc == 0);
    auto j = slurp_json(out);
    CHECK(j["tool"] == "bct");
    CHECK(j["version"].is_string());
    CHECK(j["generator"].is_string());
    CHECK(j["config"]["prior"] == "ctw");
    double p = j["result"]["prior_prob"]["value"].get<double>();
    CHECK(std::abs(p - 1.22e-4) < 0.01 * 1.22e-4);
}

TEST_CASE("simulate is reproducible and map trees round-trip through distance") {
    auto dir = work_dir();
    auto z1 = dir / "z1.txt", z2 = dir / "z2.txt";

    REQUIRE(run("simulate --model scenario-a -n 1500 --seed 5 -L 10 --out " + z1.string() +
                " -o " + (dir / "sim.json").string()) == 0);
    REQUIRE(run("simulate --model scenario-a -n 1500 --seed 5 -L 10 --out " + z2.string() +
                " -o /dev/null") == 0);
    CHECK(slurp(z1) == slurp(z2));
    auto sim_meta = slurp_json(dir / "sim.json");
    CHECK(sim_meta["seed"] == 5);
    CHECK(sim_meta["generator"] == bct::kGeneratorId);

    // map under two priors, emitting tree files
    auto ta = dir / "map_ctw.tree", tb = dir / "map_depth.tree";
    REQUIRE(run("map --data " + z1.string() + " --alphabet 01 -L 10 --prior ctw --tree-out " +
                ta.string() + " -o " + (dir / "map1.json").string()) == 0);
    REQUIRE(run("map --data " + z1.string() + " --alphabet 01 -L 10 --prior depth:2 "
                "--tree-out " + tb.string() + " -o " + (dir / "map2.json").string()) == 0);

    auto out = dir / "dist.json";
    REQUIRE(run("distance --alphabet 01 -L 10 --tree-a " + ta.string() + " --tree-b " +
                tb.string() + " -o " + out.string()) == 0);
    auto j = slurp_json(out);

    // compare against the in-process distance of the emitted trees
    auto alphabet = bct::Alphabet::parse("01");
    bct::TreeSpace space(2, 10);
    auto a = bct::parse_tree_file(ta, alphabet, space);
    auto b = bct::parse_tree_file(tb, alphabet, space);
    CHECK(j["result"]["distance"].get<std::size_t>() == bct::structural_distance(a, b));
}

TEST_CASE("evidence reports both log bases and the reference tree") {
    auto dir = work_dir();
    auto z = dir / "zb.txt";
    REQUIRE(run("simulate --model scenario-b -n 800 --seed 3 -L 10 --out " + z.string() +
                " -o /dev/null") == 0);
    write(dir / "fig5b.tree", "0\n01\n011\n0111\n1111\n");

    auto out = dir / "ev.json";
    REQUIRE(run("evidence --data " + z.string() + " --alphabet 01 -L 10 --prior renewal:0 "
                "--tree " + (dir / "fig5b.tree").string() + " -o " + out.string()) == 0);
    auto j = slurp_json(out);
    double ln_e = j["result"]["log_evidence"].get<double>();
    double l10_e = j["result"]["log10_evidence"].get<double>();
    CHECK(std::abs(ln_e / std::numbers::ln10 - l10_e) < 1e-9);
    CHECK(j["result"]["map_tree"].is_array());
    CHECK(j["result"]["ref_prior"]["value"].get<double>() > 0);
    CHECK(j["result"]["ref_posterior"]["value"].get<double>() >= 0);
    CHECK(j["config"]["alpha"] == 0.5);
}

TEST_CASE("posterior command scores a reference tree") {
    auto dir = work_dir();
    auto z = dir / "zp.txt";
    REQUIRE(run("simulate --model scenario-a -n 1200 --seed 8 -L 10 --out " + z.string() +
                " -o /dev/null") == 0);
    write(dir / "ref.tree", "0\n1\n");

    auto out = dir / "post.json";
    REQUIRE(run("posterior --data " + z.string() + " --alphabet 01 -L 10 --prior ctw --tree " +
                (dir / "ref.tree").string() + " -o " + out.string()) == 0);
    auto j = slurp_json(out);
    double p = j["result"]["ref_posterior"]["value"].get<double>();
    CHECK(p >= 0);
    CHECK(p <= 1);
    CHECK(j["result"]["ref_prior"]["value"].get<double>() > 0);
}

TEST_CASE("simulate accepts model files") {
    auto dir = work_dir();
    write(dir / "coin.model", "alphabet=01 L=1\n0 : 0.2,0.8\n1 : 0.2,0.8\n");
    auto z = dir / "coin.txt";
    REQUIRE(run("simulate --model " + (dir / "coin.model").string() + " -n 5000 --seed 1 " +
                "--out " + z.string() + " -o /dev/null") == 0);
    auto text = slurp(z);
    REQUIRE(text.size() == 5000);
    auto ones = static_cast<double>(std::count(text.begin(), text.end(), '1')) / 5000.0;
    CHECK(ones > 0.75);
    CHECK(ones < 0.85);
}

TEST_CASE("select-depth finds the scenario depth and emits a full trace") {
    auto dir = work_dir();
    auto z = dir / "za.txt";
    REQUIRE(run("simulate --model scenario-a -n 2500 --seed 2 -L 10 --out " + z.string() +
                " -o /dev/null") == 0);

    auto out = dir / "depth.json";
    REQUIRE(run("select-depth --data " + z.string() + " --alphabet 01 -L 10 -c 0 -o " +
                out.string()) == 0);
    auto j = slurp_json(out);
    CHECK(j["result"]["selected_depth"] == 3);
    CHECK(j["result"]["trace"].size() == 10);

    auto csv = dir / "depth.csv";
    REQUIRE(run("select-depth --data " + z.string() + " --alphabet 01 -L 10 -c 0 "
                "--format csv -o " + csv.string()) == 0);
    CHECK(slurp(csv).rfind("selected_depth\n3\n", 0) == 0);
}

TEST_CASE("select-model favors the renewal prior on renewal data") {
    auto dir = work_dir();
    auto z = dir / "zb2.txt";
    REQUIRE(run("simulate --model scenario-b -n 1000 --seed 4 -L 10 --out " + z.string() +
                " -o /dev/null") == 0);

    auto out = dir / "model.json";
    REQUIRE(run("select-model --data " + z.string() + " --alphabet 01 -L 10 "
                "--prior ctw --prior renewal:0 --prior depth:4 -o " + out.string()) == 0);
    auto j = slurp_json(out);
    CHECK(j["result"]["best_model"].get<std::string>().rfind("renewal:0", 0) == 0);
    CHECK(j["result"]["trace"].size() == 3 * 10 + 2);
}

TEST_CASE("bf output carries the interpretation scale") {
    auto dir = work_dir();
    auto z = dir / "zc.txt";
    REQUIRE(run("simulate --model scenario-a -n 600 --seed 6 -L 10 --out " + z.string() +
                " -o /dev/null") == 0);

    auto out = dir / "bf.json";
    REQUIRE(run("bf --data " + z.string() + " --alphabet 01 -L 10 --numerator depth:3 "
                "--denominator depth:0 -o " + out.string()) == 0);
    auto j = slurp_json(out);
    CHECK(j["result"].contains("log10_bf"));
    std::string label = j["result"]["interpretation"];
    CHECK((label == "negligible" || label == "substantial" || label == "strong" ||
           label == "decisive"));

    auto csv = dir / "bf.csv";
    REQUIRE(run("bf --data " + z.string() + " --alphabet 01 -L 10 --numerator depth:3 "
                "--denominator depth:0 --format csv -o " + csv.string()) == 0);
    CHECK(slurp(csv).rfind("numerator,denominator,alpha,log10_bf,interpretation\n", 0) == 0);
}

TEST_CASE("report writes row and summary tables with a constant prior column") {
    auto dir = work_dir();
    auto prefix = (dir / "study").string();
    REQUIRE(run("report --model scenario-a --prior depth:3 --prior ctw -n 300 "
                "--seed 1 --seed 2 -L 10 --out " + prefix + " > /dev/null") == 0);

    auto rows = slurp(prefix + "_rows.csv");
    std::istringstream in(rows);
    std::string line;
    std::getline(in, line);
    CHECK(line == "F,n,seed,delta_true_map,prior_true,posterior_true,log10_evidence");
    int count = 0;
    std::string d3_prior;
    while (std::getline(in, line)) {
        ++count;
        if (line.rfind("depth:3,", 0) == 0) {
            auto first = line.find(',', line.find(',', line.find(',', line.find(',') + 1) + 1) + 1);
            auto second = line.find(',', first + 1);
            std::string prior_col = line.substr(first + 1, second - first - 1);
            if (d3_prior.empty()) d3_prior = prior_col;
            CHECK(prior_col == d3_prior);  // data-independent column
        }
    }
    CHECK(count == 4);  // 2 priors x 1 length x 2 seeds
    CHECK(std::abs(std::stod(d3_prior) - 1.0 / 26.0) < 1e-6);

    auto summary = slurp(prefix + "_summary.csv");
    CHECK(summary.rfind("F,n,prior_true,mean_posterior_true,map_recovery_rate,"
                        "mean_log10_evidence\n", 0) == 0);
}

TEST_CASE("report covers the full eleven-prior study grid") {
    auto dir = work_dir();
    auto prefix = (dir / "full_study").string();
    REQUIRE(run("report --model scenario-a "
                "--prior depth:3 --prior ctw --prior gctw:0.2 --prior gctw:0.7 "
                "--prior target:2,3 --prior target:3,3 --prior target:8,3 "
                "--prior target:2,4 --prior exp:2 --prior exp:5 --prior lenexp "
                "-n 2500 --seed 1 -L 10 --out " + prefix + " > /dev/null") == 0);
    std::istringstream in(slurp(prefix + "_rows.csv"));
    std::string line;
    std::getline(in, line);  // header
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 11);
}

TEST_CASE("exit codes distinguish usage from data errors") {
    auto dir = work_dir();
    // missing required flag -> usage (2)
    CHECK(run("map --alphabet 01 -L 10 --prior ctw") == 2);
    // unknown subcommand -> usage (2)
    CHECK(run("frobnicate") == 2);
    // bad prior spec -> usage (2)
    write(dir / "tiny.txt", "0101010101010101");
    CHECK(run("map --data " + (dir / "tiny.txt").string() +
              " --alphabet 01 -L 2 --prior nope") == 2);
    // empty candidate list -> usage (2)
    CHECK(run("select-model --data " + (dir / "tiny.txt").string() + " --alphabet 01 -L 2") ==
          2);
    // missing data file -> data error (1)
    CHECK(run("map --data " + (dir / "missing.txt").string() +
              " --alphabet 01 -L 2 --prior ctw") == 1);
    // bad symbol in the data -> data error (1)
    write(dir / "bad.txt", "0102");
    CHECK(run("map --data " + (dir / "bad.txt").string() + " --alphabet 01 -L 1 --prior ctw") ==
          1);
    // sequence shorter than L -> data error (1)
    write(dir / "short.txt", "01");
    CHECK(run("map --data " + (dir / "short.txt").string() +
              " --alphabet 01 -L 5 --prior ctw") == 1);
    // malformed tree file -> data error (1), line number included
    write(dir / "bad.tree", "0\n00\n");
    CHECK(run("prior --alphabet 01 -L 3 --prior ctw --tree " + (dir / "bad.tree").string()) ==
          1);
}

TEST_CASE("csv-int data feeds every analysis command") {
    auto dir = work_dir();
    write(dir / "codes.csv", "0,1,0,1,1\n");
    auto out = dir / "ev_csvint.json";
    REQUIRE(run("evidence --data " + (dir / "codes.csv").string() +
                " --alphabet 01 --data-format csv-int -L 1 --prior unity -o " +
                out.string()) == 0);
    auto j = slurp_json(out);
    // the five-symbol worked example: E = (0.0390625 + 0.046875) / 2
    double e = std::exp(j["result"]["log_evidence"].get<double>());
    CHECK(std::abs(e - 0.04296875) < 1e-12);
    CHECK(j["result"]["map_tree"] == json::array({"0", "1"}));
}

TEST_CASE("node budget guard is overridable through the environment") {
    auto dir = work_dir();
    write(dir / "z.txt", "01010101010101010101");
    std::string base = "map --data " + (dir / "z.txt").string() +
                       " --alphabet 01 -L 10 --prior ctw -o /dev/null";
    std::string small = "BCT_NODE_BUDGET=100 " + bct_bin() + " " + base + " 2>/dev/null";
    CHECK(WEXITSTATUS(std::system(small.c_str())) == 1);
    std::string big = "BCT_NODE_BUDGET=10000 " + bct_bin() + " " + base + " 2>/dev/null";
    CHECK(WEXITSTATUS(std::system(big.c_str())) == 0);
}
