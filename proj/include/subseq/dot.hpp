#pragma once

#include <string>

#include "subseq/automaton.hpp"

namespace subseq {

/// Graphviz rendering: states in id order, accepting states double-circled,
/// regular edges labeled, default edges dashed and unlabeled.
std::string export_dot(const Automaton& a);

}  // namespace subseq
