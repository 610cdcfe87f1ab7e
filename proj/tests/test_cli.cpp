#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "cli.hpp"
#include "subseq/document.hpp"
#include "subseq/single_builders.hpp"

using subseq::cli::run_cli;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "subseq_test_cli";
    fs::create_directories(dir);
    return dir / name;
}

std::string write(const std::string& name, const std::string& content) {
    const auto path = scratch(name);
    std::ofstream(path, std::ios::binary) << content;
    return path.string();
}

int exit_status(const std::string& command) {
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("build writes a klevel document") {
    const auto r = cli({"build", "--variant", "klevel", "--k", "2", "--text", "abadca"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["variant"] == "klevel");
    CHECK(doc["k"] == 2);
    CHECK(doc["n"] == 6);
}

TEST_CASE("build rejects invalid parameters") {
    auto r = cli({"build", "--variant", "klevel", "--k", "1", "--text", "abadca"});
    CHECK(r.code == 2);
    CHECK(r.err.find("k must satisfy") != std::string::npos);
    CHECK(cli({"build", "--variant", "level", "--k", "2", "--text", "ab"}).code == 2);
    CHECK(cli({"build", "--variant", "nope", "--text", "ab"}).code == 2);
    CHECK(cli({"build", "--variant", "sa", "--texts", "ab", "ba"}).code == 2);
    CHECK(cli({"build", "--variant", "common-level", "--text", "ab"}).code == 2);
    CHECK(cli({"build", "--file", scratch("missing.txt").string()}).code == 2);
    CHECK(cli({"build"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    const auto budget = cli({"build", "--variant", "common-level", "--texts", "abcdef", "abcdef", "--state-budget", "10"});
    CHECK(budget.code == 2);
    CHECK(budget.err.find("budget") != std::string::npos);
}

TEST_CASE("build common-level over two texts") {
    const auto r = cli({"build", "--variant", "common-level", "--texts", "ab", "ba"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["states"].size() == 5);
    CHECK(doc["lengths"] == nlohmann::json::array({2, 2}));
    // --mode picks the multi-string flavour of "level".
    const auto any = nlohmann::json::parse(cli({"build", "--variant", "level", "--mode", "any", "--texts", "ab", "ba"}).out);
    CHECK(any["variant"] == "any-level");
}

TEST_CASE("match verdicts and exit codes") {
    const auto doc = write("sa.json", cli({"build", "--variant", "sa", "--text", "abadca"}).out);
    auto r = cli({"match", "--automaton", doc, "--pattern", "bda"});
    CHECK(r.code == 0);
    CHECK(r.out == "accept\n");
    r = cli({"match", "--automaton", doc, "--pattern", "aab"});
    CHECK(r.code == 1);
    CHECK(r.out == "reject\n");
    r = cli({"match", "--automaton", doc, "--pattern", ""});
    CHECK(r.code == 0);
    CHECK(r.out == "accept\n");
    r = cli({"match", "--automaton", doc, "--pattern", "bda", "--trace"});
    CHECK(r.out == "accept\ntargets: 2 4 6\ndefaults: 0 0 0\n");

    const auto chain = write("chain.json", cli({"build", "--variant", "chain", "--text", "abadca"}).out);
    r = cli({"match", "--automaton", chain, "--pattern", "ca", "--trace"});
    CHECK(r.out == "accept\ntargets: 5 6\ndefaults: 4 0\n");

    const auto bad = write("bad.json", "{\"version\": 99}");
    CHECK(cli({"match", "--automaton", bad, "--pattern", "a"}).code == 2);
}

TEST_CASE("stats") {
    auto r = cli({"stats", "--variant", "chain", "--text", "abadca", "--format", "structured"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["regular_transitions"] == 6);
    CHECK(doc["default_transitions"] == 6);
    CHECK(doc["states"] == 7);

    doc = nlohmann::json::parse(cli({"stats", "--variant", "sa", "--text", "abadca", "--format", "structured"}).out);
    CHECK(doc["regular_transitions"] == 17);

    doc = nlohmann::json::parse(cli({"stats", "--variant", "level", "--text", "abacbabcabad", "--format", "structured"}).out);
    CHECK(doc["longest_default_chain"] == 4);
    CHECK(doc["delay_bound_structural"] == 5);

    std::vector<std::string> keys;
    const auto ordered = nlohmann::ordered_json::parse(cli({"stats", "--variant", "level", "--text", "abacbabcabad", "--format", "structured"}).out);
    for (const auto& [key, value] : ordered.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"version", "variant", "n", "sigma", "k", "states", "regular_transitions",
                                           "default_transitions", "size_total", "longest_default_chain",
                                           "reachable_states", "delay_bound_structural", "theoretical_delay_cap"});

    const auto level_doc = write("level.json", cli({"build", "--variant", "level", "--text", "abacbabcabad"}).out);
    r = cli({"stats", "--automaton", level_doc});
    CHECK(r.code == 0);
    CHECK(r.out.find("longest_default_chain:  4") != std::string::npos);
}

TEST_CASE("verify") {
    auto r = cli({"verify", "--variant", "level", "--text", "abacbabcabad", "--max-len", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify: pass") != std::string::npos);

    r = cli({"verify", "--variant", "common-level", "--texts", "ab", "ba", "--max-len", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS trace vs naive-common") != std::string::npos);

    r = cli({"verify", "--variant", "any-level", "--texts", "ab", "ba", "c", "--max-len", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("SKIP trace") != std::string::npos);

    // Drop the 'c' transition out of state 4 (cap level, no default).
    auto text = cli({"build", "--variant", "klevel", "--k", "2", "--text", "abadca"}).out;
    const std::string from = "{\"default\": null, \"trans\": [[0, 6], [2, 5]]}";
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, from.size(), "{\"default\": null, \"trans\": [[0, 6]]}");
    const auto mutated = write("mutated.json", text);
    r = cli({"verify", "--automaton", mutated, "--text", "abadca", "--max-len", "4"});
    CHECK(r.code == 3);
    CHECK(r.out.find("FAIL equivalence") != std::string::npos);
    CHECK(r.out.find("first \"") != std::string::npos);
    CHECK(r.out.find("verify: fail") != std::string::npos);

    r = cli({"verify", "--variant", "sa", "--text", "abcdefgh", "--max-len", "9", "--enum-budget", "1000"});
    CHECK(r.code == 2);
    CHECK(r.err.find("budget exceeded") != std::string::npos);
    r = cli({"verify", "--variant", "sa", "--text", "abcdefgh", "--max-len", "9", "--enum-budget", "1000", "--sample"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1000 sampled patterns") != std::string::npos);
}

TEST_CASE("bench") {
    auto r = cli({"bench", "--random", "10000", "256", "7", "--ks", "2,4,16,256", "--format", "structured"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["seed"] == 7);
    std::vector<std::size_t> delays;
    for (const auto& row : doc["rows"]) {
        if (row["variant"] == "klevel") delays.push_back(row["delay_bound_structural"].get<std::size_t>());
    }
    REQUIRE(delays.size() == 4);
    CHECK(std::is_sorted(delays.rbegin(), delays.rend()));
    CHECK(cli({"bench", "--random", "10000", "256", "7", "--ks", "2,4,16,256", "--format", "structured"}).out == r.out);

    r = cli({"bench", "--text", "abadca", "--ks", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sa ") != std::string::npos);
    const auto structured = nlohmann::json::parse(cli({"bench", "--text", "abadca", "--ks", "2", "--format", "structured"}).out);
    CHECK(structured["rows"][0]["variant"] == "sa");
    CHECK(structured["rows"][0]["size_total"] == 7 + 17);
    CHECK(structured["seed"].is_null());

    CHECK(cli({"bench", "--text", "abadca", "--ks", "2,x"}).code == 2);
    CHECK(cli({"bench", "--text", "abadca", "--ks", "9"}).code == 2);
}

TEST_CASE("export") {
    const auto a = cli({"export", "--variant", "chain", "--text", "ab"});
    CHECK(a.code == 0);
    CHECK(a.out.rfind("digraph", 0) == 0);
    CHECK(a.out == cli({"export", "--variant", "chain", "--text", "ab"}).out);
    const auto doc = write("export_sa.json", cli({"build", "--text", "abadca"}).out);
    const auto from_doc = cli({"export", "--automaton", doc});
    CHECK(from_doc.out.find("0 -> 2 [label=\"b\"]") != std::string::npos);
    const auto out_path = scratch("out.dot").string();
    CHECK(cli({"export", "--automaton", doc, "--out", out_path}).code == 0);
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == from_doc.out);
}

TEST_CASE("codepoint inputs") {
    const auto r = cli({"build", "--variant", "sa", "--text", "héé", "--codepoints"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["n"] == 3);
    const auto bytes = nlohmann::json::parse(cli({"build", "--variant", "sa", "--text", "héé"}).out);
    CHECK(bytes["n"] == 5);
    const auto path = write("utf8.json", r.out);
    CHECK(cli({"match", "--automaton", path, "--pattern", "hé", "--codepoints"}).code == 0);
}

TEST_CASE("binary exit codes") {
    const std::string bin = SUBSEQ_CLI_PATH;
    const auto doc = scratch("bin_sa.json").string();
    CHECK(exit_status(bin + " build --text abadca --out " + doc) == 0);
    CHECK(exit_status(bin + " match --automaton " + doc + " --pattern bda > /dev/null") == 0);
    CHECK(exit_status(bin + " match --automaton " + doc + " --pattern aab > /dev/null") == 1);
    CHECK(exit_status(bin + " match --automaton " + doc + " --pattern '' > /dev/null") == 0);
    CHECK(exit_status(bin + " build --variant klevel --k 1 --text abadca 2> /dev/null") == 2);
    CHECK(exit_status(bin + " --help > /dev/null") == 0);
    CHECK(exit_status(bin + " > /dev/null 2>&1") == 2);
}
