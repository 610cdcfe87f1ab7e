#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subseq/text.hpp"

namespace subseq {

using SymbolId = std::uint32_t;

/// Sorted set of distinct symbols with a dense id per symbol.
class Alphabet {
public:
    Alphabet();

    /// Sorts and deduplicates.
    static Alphabet from_symbols(std::vector<Symbol> symbols);
    static Alphabet from_text(TextView text);
    static Alphabet from_texts(std::span<const Text> texts);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }

    Symbol symbol(SymbolId id) const { return symbols_.at(id); }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    std::optional<SymbolId> id_of(Symbol symbol) const noexcept;
    bool contains(Symbol symbol) const noexcept { return id_of(symbol).has_value(); }

    /// Smallest printable-ish symbol not in the alphabet, used to probe rejection paths.
    Symbol fresh_symbol() const noexcept;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

private:
    static constexpr std::int32_t kAbsent = -1;

    std::vector<Symbol> symbols_;
    // Byte-range symbols resolve through a direct table; the rest by binary search.
    std::array<std::int32_t, 256> byte_index_;
};

}  // namespace subseq
