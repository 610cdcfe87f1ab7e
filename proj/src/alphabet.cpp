#include "subseq/alphabet.hpp"

#include <algorithm>

namespace subseq {

Alphabet::Alphabet() { byte_index_.fill(kAbsent); }

Alphabet Alphabet::from_symbols(std::vector<Symbol> symbols) {
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    Alphabet a;
    a.symbols_ = std::move(symbols);
    for (std::size_t id = 0; id < a.symbols_.size(); ++id) {
        if (a.symbols_[id] < 256) a.byte_index_[a.symbols_[id]] = static_cast<std::int32_t>(id);
    }
    return a;
}

Alphabet Alphabet::from_text(TextView text) { return from_symbols({text.begin(), text.end()}); }

Alphabet Alphabet::from_texts(std::span<const Text> texts) {
    std::vector<Symbol> all;
    for (const auto& t : texts) all.insert(all.end(), t.begin(), t.end());
    return from_symbols(std::move(all));
}

std::optional<SymbolId> Alphabet::id_of(Symbol symbol) const noexcept {
    if (symbol < 256) {
        const auto id = byte_index_[symbol];
        if (id == kAbsent) return std::nullopt;
        return static_cast<SymbolId>(id);
    }
    const auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol);
    if (it == symbols_.end() || *it != symbol) return std::nullopt;
    return static_cast<SymbolId>(it - symbols_.begin());
}

Symbol Alphabet::fresh_symbol() const noexcept {
    // Prefer something readable in traces: '#', then '$', then digits, then upward.
    for (const Symbol candidate : {U'#', U'$', U'0', U'1', U'2'}) {
        if (!contains(candidate)) return candidate;
    }
    Symbol candidate = 0x100;
    while (contains(candidate)) ++candidate;
    return candidate;
}

}  // namespace subseq
