#include "subseq/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "subseq/alphabet.hpp"
#include "subseq/errors.hpp"

namespace subseq {

bool is_subsequence(TextView pattern, TextView text) {
    std::size_t matched = 0;
    for (std::size_t i = 0; i < text.size() && matched < pattern.size(); ++i) {
        if (text[i] == pattern[matched]) ++matched;
    }
    return matched == pattern.size();
}

bool is_subsequence_dp(TextView pattern, TextView text) {
    // embeds[j] == pattern[0, i) embeds in text[0, j), rolled over i.
    std::vector<char> embeds(text.size() + 1, 1), next(text.size() + 1);
    for (std::size_t i = 1; i <= pattern.size(); ++i) {
        next[0] = 0;
        for (std::size_t j = 1; j <= text.size(); ++j) {
            next[j] = next[j - 1] || (embeds[j - 1] && text[j - 1] == pattern[i - 1]);
        }
        embeds.swap(next);
    }
    return embeds[text.size()] != 0;
}

bool is_common_subsequence(TextView pattern, std::span<const Text> texts) {
    return std::all_of(texts.begin(), texts.end(),
                       [&](const Text& t) { return is_subsequence(pattern, t); });
}

bool is_any_subsequence(TextView pattern, std::span<const Text> texts) {
    return std::any_of(texts.begin(), texts.end(),
                       [&](const Text& t) { return is_subsequence(pattern, t); });
}

std::uint64_t pattern_space_size(std::size_t alphabet_size, std::size_t max_len) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t layer = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (total > kMax - layer) return kMax;
        total += layer;
        if (alphabet_size != 0 && layer > kMax / alphabet_size) {
            layer = kMax;
        } else {
            layer *= alphabet_size;
        }
        if (layer == 0) break;
    }
    return total;
}

bool for_each_pattern(std::span<const Symbol> alphabet, std::size_t max_len,
                      const EnumerationOptions& options,
                      const std::function<void(TextView)>& visit) {
    const auto space = pattern_space_size(alphabet.size(), max_len);
    if (space <= options.budget) {
        Text pattern;
        visit(pattern);
        if (alphabet.empty()) return false;
        // Odometer over each length in lexicographic order.
        std::vector<std::size_t> digits;
        for (std::size_t len = 1; len <= max_len; ++len) {
            digits.assign(len, 0);
            pattern.assign(len, alphabet[0]);
            while (true) {
                visit(pattern);
                std::size_t pos = len;
                while (pos > 0 && digits[pos - 1] + 1 == alphabet.size()) {
                    digits[pos - 1] = 0;
                    pattern[pos - 1] = alphabet[0];
                    --pos;
                }
                if (pos == 0) break;
                pattern[pos - 1] = alphabet[++digits[pos - 1]];
            }
        }
        return false;
    }
    if (!options.allow_sampling) {
        throw BudgetError("pattern space of " + std::to_string(space) +
                              " exceeds the enumeration budget of " +
                              std::to_string(options.budget),
                          space, options.budget);
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> length(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    Text pattern;
    for (std::uint64_t i = 0; i < options.budget; ++i) {
        pattern.resize(length(rng));
        for (auto& c : pattern) c = alphabet[pick(rng)];
        visit(pattern);
    }
    return true;
}

EquivalenceReport equivalence_check(const Automaton& a, const Oracle& oracle,
                                    std::span<const Symbol> alphabet, std::size_t max_len,
                                    const EnumerationOptions& options) {
    EquivalenceReport report;
    const auto start = std::chrono::steady_clock::now();
    report.sampled = for_each_pattern(alphabet, max_len, options, [&](TextView pattern) {
        ++report.patterns_checked;
        const auto outcome = run(a, pattern);
        for (const auto d : outcome.defaults_per_char) {
            report.max_defaults_per_char = std::max(report.max_defaults_per_char, d);
        }
        const bool expected = oracle(pattern);
        if (outcome.accepted != expected) {
            report.mismatches.push_back({Text(pattern), outcome.accepted, expected});
        }
    });
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

TraceReport trace_equivalence(const Automaton& first, const Automaton& second,
                              std::span<const Symbol> alphabet, std::size_t max_len,
                              const EnumerationOptions& options) {
    TraceReport report;
    for_each_pattern(alphabet, max_len, options, [&](TextView pattern) {
        if (!report.equivalent) return;
        ++report.patterns_checked;
        const auto x = run(first, pattern);
        const auto y = run(second, pattern);
        bool same = x.accepted == y.accepted;
        if (same && x.accepted) {
            for (std::size_t i = 0; i < x.consumed_targets.size() && same; ++i) {
                same = state_key(first, x.consumed_targets[i]) ==
                       state_key(second, y.consumed_targets[i]);
            }
        }
        if (!same) {
            report.equivalent = false;
            report.counterexample = Text(pattern);
        }
    });
    return report;
}

std::vector<Symbol> probe_alphabet(std::span<const Text> texts) {
    const auto alphabet = Alphabet::from_texts(texts);
    auto symbols = alphabet.symbols();
    symbols.push_back(alphabet.fresh_symbol());
    std::sort(symbols.begin(), symbols.end());
    return symbols;
}

}  // namespace subseq
