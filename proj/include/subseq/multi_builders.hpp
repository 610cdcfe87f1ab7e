#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subseq/automaton.hpp"
#include "subseq/text.hpp"
#include "subseq/tuple_indexer.hpp"

namespace subseq {

inline constexpr std::uint64_t kDefaultStateBudget = 1'000'000;

struct MultiOptions {
    std::uint64_t state_budget = kDefaultStateBudget;
};

/// Base-2 level of min(coords), clamped to cap. t must not be the origin.
unsigned level_multi(const TupleState& t, unsigned cap);

/// Smallest state on t's diagonal with a higher level, or nullopt when the
/// diagonal ends first or t is already at the cap.
std::optional<TupleState> bar_multi(const TupleState& t, unsigned cap,
                                    std::span<const std::size_t> lengths);

/// Number of states on the diagonal through t (t must not be the origin).
std::size_t diagonal_size(const TupleState& t, std::span<const std::size_t> lengths);

/// Naive common-subsequence automaton with default transitions for two strings.
Automaton build_naive_common(TextView first, TextView second,
                             const MultiOptions& options = {});

/// Alphabet-aware level automaton accepting subsequences common to all texts.
Automaton build_common_level(std::span<const Text> texts, const MultiOptions& options = {});

/// Alphabet-aware level automaton accepting subsequences of at least one
/// text. Coordinate n_i + 1 marks string i as exhausted.
Automaton build_any_level(std::span<const Text> texts, const MultiOptions& options = {});

}  // namespace subseq
