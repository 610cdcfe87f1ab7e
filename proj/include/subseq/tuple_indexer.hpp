#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subseq/automaton.hpp"

namespace subseq {

/// Product state (s_1, ..., s_N); the origin is all zeros.
struct TupleState {
    std::vector<std::size_t> coords;

    bool is_origin() const noexcept;
    std::size_t min_coord() const noexcept;
    std::string to_string() const;

    friend bool operator==(const TupleState&, const TupleState&) = default;
};

/// Mixed-radix encoding of the product state space
/// {origin} ∪ [1, e_1] × ... × [1, e_N] onto dense ids, origin = 0.
///
/// For common-subsequence automata e_i = n_i. The "any" automaton reserves
/// coordinate n_i + 1 as a dead sentinel, so e_i = n_i + 1.
class TupleIndexer {
public:
    explicit TupleIndexer(std::vector<std::size_t> extents);

    /// Indexer matching the state layout of a product automaton's meta.
    static TupleIndexer for_meta(const AutomatonMeta& meta);

    std::size_t dimensions() const noexcept { return extents_.size(); }
    std::span<const std::size_t> extents() const noexcept { return extents_; }

    /// 1 + prod(e_i), saturating at UINT64_MAX.
    std::uint64_t total_states() const noexcept { return total_; }

    StateId encode(std::span<const std::size_t> coords) const;
    StateId encode(const TupleState& t) const { return encode(t.coords); }
    TupleState decode(StateId id) const;
    /// Allocation-free decode into an existing buffer of size dimensions().
    void decode_into(StateId id, std::span<std::size_t> coords) const;

private:
    std::vector<std::size_t> extents_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t total_;
};

/// True for the variant names of product automata whose coordinates use a
/// dead sentinel.
bool uses_dead_sentinel(const std::string& variant);

}  // namespace subseq
