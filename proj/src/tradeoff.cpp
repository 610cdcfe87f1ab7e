#include "subseq/tradeoff.hpp"

#include <algorithm>
#include <bit>

#include "subseq/level.hpp"
#include "subseq/single_builders.hpp"

namespace subseq {

namespace {

std::size_t floor_log2(std::size_t n) { return n == 0 ? 0 : std::bit_width(n) - 1; }

}  // namespace

TradeoffRow measure(const Automaton& a, std::size_t sigma) {
    TradeoffRow row;
    const auto& meta = a.meta();
    row.variant = meta.variant;
    row.lengths = meta.lengths;
    row.sigma = sigma;
    row.k = meta.k;
    row.metrics = size_metrics(a);
    row.reachable_states = reachable_state_count(a);
    row.delay_bound = row.metrics.longest_default_chain + 1;

    const auto n = meta.lengths.empty() ? 0 : meta.lengths.front();
    if (meta.variant == "sa") {
        row.theoretical_delay_cap = 0;
        row.theoretical_bound = "size O(n*sigma), no defaults";
    } else if (meta.variant == "chain") {
        row.theoretical_delay_cap = n;
        row.theoretical_bound = "size O(n), chain <= n";
    } else if (meta.variant == "level") {
        row.theoretical_delay_cap = n == 0 ? 0 : floor_log2(n) + 1;
        row.theoretical_bound = "size O(n log n), chain <= floor(log2 n)+1";
    } else if (meta.variant == "klevel") {
        const auto cap = *LevelParams::alphabet_aware(meta.k.value_or(2), sigma, n).cap;
        row.theoretical_delay_cap = cap + 1;
        row.theoretical_bound = "size O(n*k*log_k sigma), chain <= ceil(log_k sigma)+1";
    } else if (meta.variant == "naive-common") {
        row.theoretical_delay_cap = *std::min_element(meta.lengths.begin(), meta.lengths.end());
        row.theoretical_bound = "size O(n1*n2), chain <= min(n_i)";
    } else {
        const auto cap = std::max(1u, ceil_log(std::max<std::size_t>(sigma, 1), 2));
        row.theoretical_delay_cap = cap + 1;
        row.theoretical_bound = "size O(N log sigma * prod n_i), chain <= ceil(log2 sigma)+1";
    }
    return row;
}

std::vector<TradeoffRow> tradeoff_table(TextView text, const std::vector<unsigned>& ks,
                                        std::optional<std::size_t> sigma_override) {
    const auto actual_sigma = effective_sigma(text, std::nullopt);
    const auto sigma = effective_sigma(text, sigma_override);
    std::vector<TradeoffRow> rows;
    rows.push_back(measure(build_sa(text), actual_sigma));
    rows.push_back(measure(build_chain(text), actual_sigma));
    rows.push_back(measure(build_level(text), actual_sigma));
    KLevelOptions options;
    options.sigma = sigma_override;
    auto sorted = ks;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const unsigned k : sorted) rows.push_back(measure(build_k_level(text, k, options), sigma));
    return rows;
}

}  // namespace subseq
