#include "subseq/automaton.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "subseq/tuple_indexer.hpp"

namespace subseq {

std::span<const Transition> Automaton::transitions(StateId s) const {
    if (s >= state_count()) throw std::out_of_range("state id " + std::to_string(s));
    return {edges_.data() + offsets_[s], edges_.data() + offsets_[s + 1]};
}

std::optional<StateId> Automaton::default_target(StateId s) const {
    const StateId d = defaults_.at(s);
    if (d == kNoState) return std::nullopt;
    return d;
}

std::optional<StateId> Automaton::find(StateId s, SymbolId symbol) const {
    const auto first = edges_.begin() + offsets_[s];
    const auto last = edges_.begin() + offsets_[s + 1];
    const auto it = std::lower_bound(first, last, symbol,
                                     [](const Transition& t, SymbolId a) { return t.symbol < a; });
    if (it == last || it->symbol != symbol) return std::nullopt;
    return it->target;
}

std::size_t Automaton::default_transition_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(defaults_.begin(), defaults_.end(), [](StateId d) { return d != kNoState; }));
}

AutomatonBuilder::AutomatonBuilder(Alphabet alphabet, AutomatonMeta meta) {
    automaton_.alphabet_ = std::move(alphabet);
    automaton_.meta_ = std::move(meta);
}

void AutomatonBuilder::reserve(std::size_t states, std::size_t edges) {
    automaton_.offsets_.reserve(states + 1);
    automaton_.defaults_.reserve(states);
    automaton_.accepting_.reserve(states);
    automaton_.edges_.reserve(edges);
}

StateId AutomatonBuilder::add_state(std::vector<Transition> transitions,
                                    std::optional<StateId> default_target, bool accepting) {
    std::stable_sort(transitions.begin(), transitions.end(),
                     [](const Transition& a, const Transition& b) { return a.symbol < b.symbol; });
    auto& a = automaton_;
    const auto id = static_cast<StateId>(a.defaults_.size());
    a.edges_.insert(a.edges_.end(), transitions.begin(), transitions.end());
    a.offsets_.push_back(static_cast<std::uint32_t>(a.edges_.size()));
    a.defaults_.push_back(default_target.value_or(Automaton::kNoState));
    a.accepting_.push_back(accepting);
    return id;
}

Automaton AutomatonBuilder::build() && { return std::move(automaton_); }

ForwardOrder numeric_order() {
    return [](StateId from, StateId to) { return from < to; };
}

ForwardOrder forward_order_for(const AutomatonMeta& meta) {
    if (!meta.is_multi()) return numeric_order();
    auto indexer = std::make_shared<TupleIndexer>(TupleIndexer::for_meta(meta));
    return [indexer](StateId from, StateId to) {
        if (from >= indexer->total_states() || to >= indexer->total_states()) return false;
        const auto u = indexer->decode(from);
        const auto v = indexer->decode(to);
        bool strict = false;
        for (std::size_t i = 0; i < u.coords.size(); ++i) {
            if (v.coords[i] < u.coords[i]) return false;
            strict = strict || v.coords[i] > u.coords[i];
        }
        return strict;
    };
}

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream out;
    out << violations.size() << " violation(s): " << violations.front().message;
    if (violations.size() > 1) out << "; ...";
    return out.str();
}

ValidationReport validate(const Automaton& a, const ForwardOrder& order) {
    ValidationReport report;
    auto add = [&](Violation::Kind kind, StateId s, std::string message) {
        report.violations.push_back({kind, s, std::move(message)});
    };
    const auto n = a.state_count();
    if (n == 0) {
        add(Violation::Kind::empty_automaton, 0, "automaton has no states");
        return report;
    }
    const auto sigma = a.alphabet().size();
    for (StateId s = 0; s < n; ++s) {
        const auto edges = a.transitions(s);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& t = edges[i];
            const std::string at = " at state " + std::to_string(s);
            if (i > 0 && edges[i - 1].symbol == t.symbol) {
                add(Violation::Kind::duplicate_label, s, "duplicate label" + at);
            } else if (i > 0 && edges[i - 1].symbol > t.symbol) {
                add(Violation::Kind::unsorted_labels, s, "unsorted labels" + at);
            }
            if (t.symbol >= sigma) {
                add(Violation::Kind::symbol_out_of_range, s,
                    "symbol id " + std::to_string(t.symbol) + " out of range" + at);
            }
            if (t.target >= n) {
                add(Violation::Kind::target_out_of_range, s,
                    "transition target " + std::to_string(t.target) + " out of range" + at);
            } else if (!order(s, t.target)) {
                add(Violation::Kind::non_forward_transition, s,
                    "non-forward transition " + std::to_string(s) + "->" + std::to_string(t.target));
            }
        }
        if (const auto d = a.default_target(s)) {
            if (*d >= n) {
                add(Violation::Kind::target_out_of_range, s,
                    "default target " + std::to_string(*d) + " out of range at state " +
                        std::to_string(s));
            } else if (!order(s, *d)) {
                add(Violation::Kind::non_forward_default, s,
                    "non-forward default " + std::to_string(s) + "->" + std::to_string(*d));
            }
        }
    }
    return report;
}

namespace {

// Shared simulation loop. Record receives (target, defaults followed).
template <typename Record>
std::optional<std::size_t> simulate(const Automaton& a, TextView pattern, StateId& state,
                                    Record&& record) {
    const auto& alphabet = a.alphabet();
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        const auto symbol = alphabet.id_of(pattern[i]);
        if (!symbol) return i;
        std::uint32_t defaults = 0;
        while (true) {
            if (const auto next = a.find(state, *symbol)) {
                state = *next;
                record(*next, defaults);
                break;
            }
            const auto d = a.default_target(state);
            if (!d) return i;
            state = *d;
            ++defaults;
        }
    }
    return std::nullopt;
}

}  // namespace

RunOutcome run(const Automaton& a, TextView pattern) {
    RunOutcome out;
    out.consumed_targets.reserve(pattern.size());
    out.defaults_per_char.reserve(pattern.size());
    StateId state = a.initial();
    out.reject_position = simulate(a, pattern, state, [&](StateId target, std::uint32_t defaults) {
        out.consumed_targets.push_back(target);
        out.defaults_per_char.push_back(defaults);
    });
    out.accepted = !out.reject_position && a.accepting(state);
    return out;
}

bool accepts(const Automaton& a, TextView pattern) {
    StateId state = a.initial();
    const auto rejected = simulate(a, pattern, state, [](StateId, std::uint32_t) {});
    return !rejected && a.accepting(state);
}

SizeMetrics size_metrics(const Automaton& a) {
    SizeMetrics m;
    m.states = a.state_count();
    m.regular_transitions = a.regular_transition_count();
    m.default_transitions = a.default_transition_count();
    m.size_total = m.states + m.regular_transitions + m.default_transitions;

    // Default edges form a forest of forward chains; memoize chain length per
    // state, walking unresolved suffixes with an explicit stack.
    constexpr std::size_t kUnknown = SIZE_MAX;
    std::vector<std::size_t> chain(m.states, kUnknown);
    std::vector<bool> on_path(m.states, false);
    std::vector<StateId> path;
    for (StateId s = 0; s < m.states; ++s) {
        StateId cur = s;
        while (chain[cur] == kUnknown) {
            const auto d = a.default_target(cur);
            if (!d) {
                chain[cur] = 0;
                break;
            }
            if (on_path[cur]) throw std::logic_error("default transitions form a cycle");
            on_path[cur] = true;
            path.push_back(cur);
            cur = *d;
        }
        std::size_t len = chain[cur];
        while (!path.empty()) {
            const StateId p = path.back();
            path.pop_back();
            on_path[p] = false;
            chain[p] = ++len;
        }
        m.longest_default_chain = std::max(m.longest_default_chain, chain[s]);
    }
    return m;
}

std::size_t reachable_state_count(const Automaton& a) {
    std::vector<bool> seen(a.state_count(), false);
    std::vector<StateId> stack{a.initial()};
    seen[a.initial()] = true;
    std::size_t count = 1;
    auto visit = [&](StateId t) {
        if (t < seen.size() && !seen[t]) {
            seen[t] = true;
            ++count;
            stack.push_back(t);
        }
    };
    while (!stack.empty()) {
        const StateId s = stack.back();
        stack.pop_back();
        for (const auto& t : a.transitions(s)) visit(t.target);
        if (const auto d = a.default_target(s)) visit(*d);
    }
    return count;
}

std::string state_label(const Automaton& a, StateId s) {
    if (!a.meta().is_multi()) return std::to_string(s);
    return TupleIndexer::for_meta(a.meta()).decode(s).to_string();
}

std::vector<std::size_t> state_key(const Automaton& a, StateId s) {
    if (!a.meta().is_multi()) return {s};
    return TupleIndexer::for_meta(a.meta()).decode(s).coords;
}

}  // namespace subseq
