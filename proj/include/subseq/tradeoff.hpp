#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subseq/automaton.hpp"
#include "subseq/text.hpp"

namespace subseq {

/// One measured row of the size/delay trade-off.
struct TradeoffRow {
    std::string variant;
    std::vector<std::size_t> lengths;
    std::size_t sigma = 0;
    std::optional<unsigned> k;
    SizeMetrics metrics;
    std::size_t reachable_states = 0;
    /// longest_default_chain + 1.
    std::size_t delay_bound = 0;
    /// Bound on longest_default_chain implied by the construction.
    std::size_t theoretical_delay_cap = 0;
    std::string theoretical_bound;
};

/// Measures an already built automaton. sigma is the alphabet size the
/// construction used.
TradeoffRow measure(const Automaton& a, std::size_t sigma);

/// Rows for sa, chain and level, then one klevel row per distinct k, ascending.
std::vector<TradeoffRow> tradeoff_table(TextView text, const std::vector<unsigned>& ks,
                                        std::optional<std::size_t> sigma_override = std::nullopt);

}  // namespace subseq
