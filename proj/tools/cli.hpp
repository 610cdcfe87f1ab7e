#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "subseq/text.hpp"

namespace subseq::cli {

enum ExitCode : int {
    kOk = 0,
    kReject = 1,
    kUsageError = 2,
    kVerificationFailed = 3,
};

/// Parsed command line; one instance per invocation.
struct CliConfig {
    std::string subcommand;

    std::vector<std::string> inline_texts;
    std::vector<std::string> files;
    std::vector<std::uint64_t> random;  // n, sigma, seed
    bool codepoints = false;

    std::string variant;
    std::optional<unsigned> k;
    std::string mode = "common";
    std::optional<std::size_t> sigma;
    bool strip_defaults = false;
    std::uint64_t state_budget = 1'000'000;

    std::string automaton_path;
    std::optional<std::string> pattern;
    bool trace = false;

    std::size_t max_len = 4;
    std::uint64_t enum_budget = 5'000'000;
    bool sample = false;
    std::uint64_t seed = 1;

    std::string ks = "2";
    std::string format;
    std::string out_path;
};

/// Seeded uniform text over sigma symbols ('a'.. for sigma <= 26, else code points 0..sigma-1).
Text random_text(std::size_t n, std::size_t sigma, std::uint64_t seed);

/// Entry point shared by the binary and the tests. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace subseq::cli
