#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subseq/alphabet.hpp"
#include "subseq/text.hpp"

namespace subseq {

using StateId = std::uint32_t;

struct Transition {
    SymbolId symbol;
    StateId target;

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// Construction descriptor carried alongside the automaton.
struct AutomatonMeta {
    std::string variant;
    /// One entry per source string; single-string automata have exactly one.
    std::vector<std::size_t> lengths;
    std::optional<unsigned> k;

    bool is_multi() const noexcept { return lengths.size() != 1; }

    friend bool operator==(const AutomatonMeta&, const AutomatonMeta&) = default;
};

/// Deterministic automaton with an optional default transition per state.
///
/// Storage is compressed-row: the regular transitions of state s are
/// edges_[offsets_[s], offsets_[s + 1]), sorted by symbol id. The initial
/// state is always 0. Instances are immutable; build them with
/// AutomatonBuilder.
class Automaton {
public:
    std::size_t state_count() const noexcept { return defaults_.size(); }
    StateId initial() const noexcept { return 0; }

    std::span<const Transition> transitions(StateId s) const;
    std::optional<StateId> default_target(StateId s) const;
    bool accepting(StateId s) const { return accepting_.at(s); }

    /// Regular-transition lookup by binary search.
    std::optional<StateId> find(StateId s, SymbolId symbol) const;

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const AutomatonMeta& meta() const noexcept { return meta_; }

    std::size_t regular_transition_count() const noexcept { return edges_.size(); }
    std::size_t default_transition_count() const noexcept;

    friend bool operator==(const Automaton&, const Automaton&) = default;

private:
    friend class AutomatonBuilder;
    static constexpr StateId kNoState = UINT32_MAX;

    Alphabet alphabet_;
    AutomatonMeta meta_;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<Transition> edges_;
    std::vector<StateId> defaults_;
    std::vector<bool> accepting_;
};

/// Appends states in id order. Transitions are sorted by symbol but never
/// deduplicated, so malformed automata can be assembled for validation tests.
class AutomatonBuilder {
public:
    AutomatonBuilder(Alphabet alphabet, AutomatonMeta meta);

    void reserve(std::size_t states, std::size_t edges);

    /// Adds the next state; returns its id.
    StateId add_state(std::vector<Transition> transitions, std::optional<StateId> default_target,
                      bool accepting = true);

    std::size_t state_count() const noexcept { return automaton_.defaults_.size(); }

    Automaton build() &&;

private:
    Automaton automaton_;
};

/// Strict order on state ids that every edge must respect.
using ForwardOrder = std::function<bool(StateId from, StateId to)>;

ForwardOrder numeric_order();

/// Numeric order for single-string automata, componentwise tuple order for
/// product automata (decoded through the automaton's TupleIndexer).
ForwardOrder forward_order_for(const AutomatonMeta& meta);

struct Violation {
    enum class Kind { duplicate_label, unsorted_labels, symbol_out_of_range, target_out_of_range,
                      non_forward_transition, non_forward_default, empty_automaton };
    Kind kind;
    StateId state;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    std::string summary() const;
};

ValidationReport validate(const Automaton& a, const ForwardOrder& order);

struct RunOutcome {
    bool accepted = false;
    std::vector<StateId> consumed_targets;
    std::vector<std::uint32_t> defaults_per_char;
    std::optional<std::size_t> reject_position;
};

/// Deterministic simulation: regular transition if one matches, else the
/// default (without consuming), else reject at the current pattern index.
RunOutcome run(const Automaton& a, TextView pattern);

/// Verdict only; same semantics as run() without recording a trace.
bool accepts(const Automaton& a, TextView pattern);

struct SizeMetrics {
    std::size_t states = 0;
    std::size_t regular_transitions = 0;
    std::size_t default_transitions = 0;
    std::size_t size_total = 0;
    std::size_t longest_default_chain = 0;

    friend bool operator==(const SizeMetrics&, const SizeMetrics&) = default;
};

SizeMetrics size_metrics(const Automaton& a);

/// States reachable from the initial state over regular and default edges.
std::size_t reachable_state_count(const Automaton& a);

/// Human-readable state name: the id for single-string automata, the
/// coordinate tuple for product automata.
std::string state_label(const Automaton& a, StateId s);

/// Identity used to compare states across automata built over the same
/// input(s): {id} for single-string automata, the decoded tuple otherwise.
std::vector<std::size_t> state_key(const Automaton& a, StateId s);

}  // namespace subseq
