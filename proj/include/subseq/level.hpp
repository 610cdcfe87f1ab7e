#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace subseq {

/// Parameters of the (ruler-style) level function and its successor s̄.
struct LevelParams {
    unsigned k = 2;
    /// Level ceiling; nullopt means uncapped.
    std::optional<unsigned> cap;
    /// Highest state id.
    std::size_t n = 0;

    /// k = 2 without a cap.
    static LevelParams uncapped(std::size_t n) { return {2, std::nullopt, n}; }
    /// cap = max(1, ceil(log_k sigma)).
    static LevelParams alphabet_aware(unsigned k, std::size_t sigma, std::size_t n);
};

/// Smallest x with k^x >= value (value >= 1, k >= 2).
unsigned ceil_log(std::uint64_t value, unsigned k);

/// Largest x with k^x dividing i, clamped to the cap. Requires i >= 1.
unsigned level(std::size_t i, const LevelParams& p);

/// Smallest s' in (s, n] with level(s') >= level(s) + 1, if any.
/// Requires 1 <= s <= n.
std::optional<std::size_t> bar(std::size_t s, const LevelParams& p);

/// Distance from position s to the next position whose level exceeds
/// level(s), ignoring n. nullopt when level(s) is at the cap.
std::optional<std::size_t> level_step(std::size_t s, const LevelParams& p);

}  // namespace subseq
