#pragma once

#include <string>
#include <string_view>

#include "subseq/automaton.hpp"

namespace subseq {

inline constexpr int kDocumentVersion = 1;

/// Versioned JSON layout:
///   {"version":1, "variant":..., "n":N | "lengths":[...], "k":K|null,
///    "alphabet":["a",...], "states":[{"default":id|null, "trans":[[sym,target],...]}, ...]}
/// An "accepting" array is written only when some state is non-accepting.
std::string serialize(const Automaton& a);

/// Throws ParseError on bad syntax, unknown version, malformed structure or
/// invariant violations.
Automaton deserialize(std::string_view document);

}  // namespace subseq
