#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subseq/alphabet.hpp"
#include "subseq/text.hpp"

namespace subseq {

/// For each position i in [0, n] and symbol id a: the smallest j > i with
/// S[j] = a (1-based positions), or absent. Built by one backward scan.
class NextOccurrenceTable {
public:
    /// Symbol ids refer to `alphabet`, which must contain every symbol of `text`.
    NextOccurrenceTable(TextView text, const Alphabet& alphabet);

    std::size_t length() const noexcept { return n_; }
    std::size_t sigma() const noexcept { return sigma_; }

    std::optional<std::size_t> next(std::size_t i, SymbolId a) const {
        const auto v = table_[i * sigma_ + a];
        if (v == kAbsent) return std::nullopt;
        return v;
    }
    bool has_next(std::size_t i, SymbolId a) const { return table_[i * sigma_ + a] != kAbsent; }

    /// Symbol id of S[pos], 1-based.
    SymbolId symbol_at(std::size_t pos) const { return ids_[pos - 1]; }

private:
    static constexpr std::uint32_t kAbsent = UINT32_MAX;

    std::size_t n_;
    std::size_t sigma_;
    std::vector<SymbolId> ids_;
    std::vector<std::uint32_t> table_;
};

NextOccurrenceTable next_occurrence_table(TextView text);

}  // namespace subseq
