#pragma once

#include <optional>

#include "subseq/automaton.hpp"
#include "subseq/text.hpp"

namespace subseq {

/// Classic subsequence automaton: n + 1 states, no defaults.
Automaton build_sa(TextView text);

/// One labeled and one default edge from each state i < n to i + 1.
Automaton build_chain(TextView text);

/// Uncapped base-2 level automaton.
Automaton build_level(TextView text);

struct KLevelOptions {
    /// Alphabet size used for the cap and the full-suffix threshold. Must be
    /// at least |Σ(text)|; defaults to it.
    std::optional<std::size_t> sigma;
    /// Drop defaults from states that already carry full-suffix transitions.
    bool strip_redundant_defaults = false;
};

/// Alphabet-aware level automaton with base k (k = 2 gives the
/// alphabet-aware level automaton). Throws ParameterError unless
/// 2 <= k <= max(sigma, 2).
Automaton build_k_level(TextView text, unsigned k, const KLevelOptions& options = {});

/// Effective sigma for a k-level build after applying an override.
std::size_t effective_sigma(TextView text, std::optional<std::size_t> sigma_override);

}  // namespace subseq
