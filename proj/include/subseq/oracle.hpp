#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "subseq/automaton.hpp"
#include "subseq/text.hpp"

namespace subseq {

/// Greedy leftmost embedding, linear time.
bool is_subsequence(TextView pattern, TextView text);

/// Independent dynamic-programming check used to cross-validate the greedy oracle.
bool is_subsequence_dp(TextView pattern, TextView text);

bool is_common_subsequence(TextView pattern, std::span<const Text> texts);
bool is_any_subsequence(TextView pattern, std::span<const Text> texts);

using Oracle = std::function<bool(TextView)>;

struct EnumerationOptions {
    /// Maximum number of patterns to check.
    std::uint64_t budget = 5'000'000;
    /// When the full space exceeds the budget, draw `budget` random patterns
    /// instead of refusing.
    bool allow_sampling = false;
    std::uint64_t seed = 1;
};

struct Mismatch {
    Text pattern;
    bool automaton_verdict;
    bool oracle_verdict;
};

struct EquivalenceReport {
    std::uint64_t patterns_checked = 0;
    bool sampled = false;
    std::vector<Mismatch> mismatches;
    std::uint32_t max_defaults_per_char = 0;
    std::chrono::duration<double> elapsed{};

    bool equivalent() const noexcept { return mismatches.empty(); }
};

/// Number of patterns of length <= max_len over an alphabet of the given
/// size, saturating at UINT64_MAX.
std::uint64_t pattern_space_size(std::size_t alphabet_size, std::size_t max_len);

/// Calls visit for every pattern over `alphabet` of length <= max_len, or for
/// a seeded sample when the space exceeds the budget and sampling is enabled.
/// Returns whether sampling was used. Throws BudgetError otherwise.
bool for_each_pattern(std::span<const Symbol> alphabet, std::size_t max_len,
                      const EnumerationOptions& options,
                      const std::function<void(TextView)>& visit);

EquivalenceReport equivalence_check(const Automaton& a, const Oracle& oracle,
                                    std::span<const Symbol> alphabet, std::size_t max_len,
                                    const EnumerationOptions& options = {});

struct TraceReport {
    bool equivalent = true;
    std::uint64_t patterns_checked = 0;
    std::optional<Text> counterexample;
};

/// Both automata must agree on acceptance and, for accepted patterns, on the
/// consumed-transition targets (compared by state_key).
TraceReport trace_equivalence(const Automaton& first, const Automaton& second,
                              std::span<const Symbol> alphabet, std::size_t max_len,
                              const EnumerationOptions& options = {});

/// Σ(texts) plus one symbol absent from all of them.
std::vector<Symbol> probe_alphabet(std::span<const Text> texts);

}  // namespace subseq
