#include "subseq/next_occurrence.hpp"

#include <algorithm>
#include <stdexcept>

namespace subseq {

NextOccurrenceTable::NextOccurrenceTable(TextView text, const Alphabet& alphabet)
    : n_(text.size()), sigma_(alphabet.size()) {
    ids_.reserve(n_);
    for (const Symbol c : text) {
        const auto id = alphabet.id_of(c);
        if (!id) throw std::invalid_argument("text symbol missing from alphabet");
        ids_.push_back(*id);
    }
    table_.assign((n_ + 1) * sigma_, kAbsent);
    // Row i is row i + 1 with S[i + 1] pointing at position i + 1.
    for (std::size_t i = n_; i-- > 0;) {
        std::copy_n(table_.begin() + static_cast<std::ptrdiff_t>((i + 1) * sigma_), sigma_,
                    table_.begin() + static_cast<std::ptrdiff_t>(i * sigma_));
        table_[i * sigma_ + ids_[i]] = static_cast<std::uint32_t>(i + 1);
    }
}

NextOccurrenceTable next_occurrence_table(TextView text) {
    return NextOccurrenceTable(text, Alphabet::from_text(text));
}

}  // namespace subseq
