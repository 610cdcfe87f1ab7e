#include "subseq/tuple_indexer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "subseq/errors.hpp"

namespace subseq {

bool TupleState::is_origin() const noexcept {
    return std::all_of(coords.begin(), coords.end(), [](std::size_t c) { return c == 0; });
}

std::size_t TupleState::min_coord() const noexcept {
    return coords.empty() ? 0 : *std::min_element(coords.begin(), coords.end());
}

std::string TupleState::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(coords[i]);
    }
    out += ')';
    return out;
}

TupleIndexer::TupleIndexer(std::vector<std::size_t> extents) : extents_(std::move(extents)) {
    if (extents_.empty()) throw ParameterError("tuple indexer needs at least one dimension");
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    strides_.assign(extents_.size(), 0);
    std::uint64_t product = 1;
    // Last coordinate varies fastest.
    for (std::size_t i = extents_.size(); i-- > 0;) {
        strides_[i] = product;
        const std::uint64_t e = extents_[i];
        if (product != kMax) product = (e != 0 && product > kMax / e) ? kMax : product * e;
    }
    total_ = product == kMax ? kMax : product + 1;
}

TupleIndexer TupleIndexer::for_meta(const AutomatonMeta& meta) {
    std::vector<std::size_t> extents = meta.lengths;
    if (uses_dead_sentinel(meta.variant)) {
        for (auto& e : extents) ++e;
    }
    return TupleIndexer(std::move(extents));
}

StateId TupleIndexer::encode(std::span<const std::size_t> coords) const {
    if (coords.size() != extents_.size()) throw std::invalid_argument("tuple arity mismatch");
    if (std::all_of(coords.begin(), coords.end(), [](std::size_t c) { return c == 0; })) return 0;
    std::uint64_t id = 1;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 1 || coords[i] > extents_[i]) {
            throw std::out_of_range("tuple coordinate " + std::to_string(coords[i]) +
                                    " outside [1, " + std::to_string(extents_[i]) + "]");
        }
        id += (coords[i] - 1) * strides_[i];
    }
    return static_cast<StateId>(id);
}

void TupleIndexer::decode_into(StateId id, std::span<std::size_t> coords) const {
    if (id >= total_) throw std::out_of_range("state id " + std::to_string(id));
    if (id == 0) {
        std::fill(coords.begin(), coords.end(), 0);
        return;
    }
    std::uint64_t rest = id - 1;
    for (std::size_t i = 0; i < extents_.size(); ++i) {
        coords[i] = static_cast<std::size_t>(rest / strides_[i]) + 1;
        rest %= strides_[i];
    }
}

TupleState TupleIndexer::decode(StateId id) const {
    TupleState t;
    t.coords.resize(extents_.size());
    decode_into(id, t.coords);
    return t;
}

bool uses_dead_sentinel(const std::string& variant) { return variant == "any-level"; }

}  // namespace subseq
