#include "subseq/multi_builders.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "subseq/errors.hpp"
#include "subseq/level.hpp"
#include "subseq/next_occurrence.hpp"

namespace subseq {

namespace {

LevelParams diagonal_params(unsigned cap) { return {2, cap, 0}; }

// Offset along the diagonal to the next higher-level state, if it stays in
// bounds for every coordinate selected by `live`.
template <typename Live>
std::optional<std::size_t> diagonal_step(std::span<const std::size_t> coords, unsigned cap,
                                         std::span<const std::size_t> lengths, Live&& live) {
    std::size_t position = SIZE_MAX;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (live(i)) position = std::min(position, coords[i]);
    }
    if (position == SIZE_MAX) return std::nullopt;
    const auto step = level_step(position, diagonal_params(cap));
    if (!step) return std::nullopt;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (live(i) && coords[i] + *step > lengths[i]) return std::nullopt;
    }
    return step;
}

unsigned multi_cap(std::size_t sigma) { return std::max(1u, ceil_log(std::max<std::size_t>(sigma, 1), 2)); }

struct ProductInputs {
    std::vector<std::size_t> lengths;
    Alphabet alphabet;
    std::vector<NextOccurrenceTable> next;
    unsigned cap;
};

ProductInputs prepare(std::span<const Text> texts) {
    ProductInputs in{{}, Alphabet::from_texts(texts), {}, 0};
    for (const auto& t : texts) {
        in.lengths.push_back(t.size());
        in.next.emplace_back(t, in.alphabet);
    }
    in.cap = multi_cap(in.alphabet.size());
    return in;
}

void check_budget(const TupleIndexer& indexer, const MultiOptions& options) {
    const auto total = indexer.total_states();
    if (total > options.state_budget || total > UINT32_MAX) {
        throw BudgetError("product automaton needs " + std::to_string(total) +
                              " states, exceeding the state budget of " +
                              std::to_string(options.state_budget),
                          total, options.state_budget);
    }
}

// Collects the distinct symbols occurring in S_i[from_i + 1, to_i] across
// the selected strings.
class SymbolUnion {
public:
    explicit SymbolUnion(std::size_t sigma) : stamp_(sigma, 0) {}

    void begin() {
        ++epoch_;
        symbols_.clear();
    }
    void add_range(const NextOccurrenceTable& next, std::size_t from, std::size_t to) {
        for (std::size_t pos = from + 1; pos <= to; ++pos) add(next.symbol_at(pos));
    }
    void add_suffix(const NextOccurrenceTable& next, std::size_t from) {
        for (SymbolId a = 0; a < next.sigma(); ++a) {
            if (next.has_next(from, a)) add(a);
        }
    }
    void add(SymbolId a) {
        if (stamp_[a] == epoch_) return;
        stamp_[a] = epoch_;
        symbols_.push_back(a);
    }
    const std::vector<SymbolId>& symbols() const { return symbols_; }

private:
    std::vector<std::uint64_t> stamp_;
    std::uint64_t epoch_ = 0;
    std::vector<SymbolId> symbols_;
};

void require_multiple(std::span<const Text> texts) {
    if (texts.size() < 2) throw ParameterError("multi-string automata need at least two strings");
}

}  // namespace

unsigned level_multi(const TupleState& t, unsigned cap) {
    return level(t.min_coord(), diagonal_params(cap));
}

std::optional<TupleState> bar_multi(const TupleState& t, unsigned cap,
                                    std::span<const std::size_t> lengths) {
    if (t.coords.size() != lengths.size()) throw ParameterError("tuple arity mismatch");
    const auto step = diagonal_step(t.coords, cap, lengths, [](std::size_t) { return true; });
    if (!step) return std::nullopt;
    TupleState out = t;
    for (auto& c : out.coords) c += *step;
    return out;
}

std::size_t diagonal_size(const TupleState& t, std::span<const std::size_t> lengths) {
    std::size_t ahead = SIZE_MAX;
    for (std::size_t i = 0; i < lengths.size(); ++i) ahead = std::min(ahead, lengths[i] - t.coords[i]);
    return t.min_coord() + ahead;
}

Automaton build_naive_common(TextView first, TextView second, const MultiOptions& options) {
    const std::vector<Text> texts{Text(first), Text(second)};
    const auto in = prepare(texts);
    const TupleIndexer indexer(in.lengths);
    check_budget(indexer, options);
    const auto n1 = in.lengths[0];
    const auto n2 = in.lengths[1];

    AutomatonBuilder builder(in.alphabet, {"naive-common", in.lengths, std::nullopt});
    builder.reserve(indexer.total_states(), 2 * indexer.total_states());
    std::array<std::size_t, 2> c{};
    for (StateId id = 0; id < indexer.total_states(); ++id) {
        indexer.decode_into(id, c);
        std::vector<Transition> edges;
        std::optional<StateId> default_target;
        if (c[0] + 1 <= n1 && c[1] + 1 <= n2) {
            const std::array<std::size_t, 2> d{c[0] + 1, c[1] + 1};
            default_target = indexer.encode(d);
        }
        if (c[0] < n1) {
            const SymbolId a = in.next[0].symbol_at(c[0] + 1);
            if (const auto j = in.next[1].next(c[1], a)) {
                const std::array<std::size_t, 2> t{c[0] + 1, *j};
                edges.push_back({a, indexer.encode(t)});
            }
        }
        if (c[1] < n2) {
            const SymbolId b = in.next[1].symbol_at(c[1] + 1);
            if (const auto i = in.next[0].next(c[0], b)) {
                const std::array<std::size_t, 2> t{*i, c[1] + 1};
                const Transition edge{b, indexer.encode(t)};
                if (!edges.empty() && edges.front().symbol == b) {
                    if (edges.front().target != edge.target) {
                        throw std::logic_error("naive common automaton: conflicting targets at " +
                                               indexer.decode(id).to_string());
                    }
                } else {
                    edges.push_back(edge);
                }
            }
        }
        builder.add_state(std::move(edges), default_target);
    }
    return std::move(builder).build();
}

Automaton build_common_level(std::span<const Text> texts, const MultiOptions& options) {
    require_multiple(texts);
    const auto in = prepare(texts);
    const TupleIndexer indexer(in.lengths);
    check_budget(indexer, options);
    const auto dims = texts.size();
    const auto sigma = in.alphabet.size();

    AutomatonBuilder builder(in.alphabet, {"common-level", in.lengths, std::nullopt});
    SymbolUnion symbols(sigma);
    std::vector<std::size_t> c(dims), target(dims);

    auto emit = [&](std::span<const std::size_t> from, std::vector<Transition>& edges) {
        for (const SymbolId a : symbols.symbols()) {
            bool everywhere = true;
            for (std::size_t i = 0; i < dims && everywhere; ++i) {
                const auto j = in.next[i].next(from[i], a);
                everywhere = j.has_value();
                if (j) target[i] = *j;
            }
            if (everywhere) edges.push_back({a, indexer.encode(target)});
        }
    };

    for (StateId id = 0; id < indexer.total_states(); ++id) {
        indexer.decode_into(id, c);
        std::vector<Transition> edges;
        std::optional<StateId> default_target;
        symbols.begin();
        if (id == 0) {
            // total_states() == 1 whenever some string is empty, so here all n_i >= 1.
            if (indexer.total_states() > 1) {
                for (std::size_t i = 0; i < dims; ++i) symbols.add(in.next[i].symbol_at(1));
                const std::vector<std::size_t> ones(dims, 1);
                default_target = indexer.encode(ones);
            }
        } else {
            const auto step =
                diagonal_step(c, in.cap, in.lengths, [](std::size_t) { return true; });
            if (step) {
                for (std::size_t i = 0; i < dims; ++i) target[i] = c[i] + *step;
                default_target = indexer.encode(target);
            }
            const bool full = !step || *step >= sigma;
            for (std::size_t i = 0; i < dims; ++i) {
                if (full) {
                    symbols.add_suffix(in.next[i], c[i]);
                } else {
                    symbols.add_range(in.next[i], c[i], c[i] + *step);
                }
            }
        }
        emit(c, edges);
        builder.add_state(std::move(edges), default_target);
    }
    return std::move(builder).build();
}

Automaton build_any_level(std::span<const Text> texts, const MultiOptions& options) {
    require_multiple(texts);
    const auto in = prepare(texts);
    AutomatonMeta meta{"any-level", in.lengths, std::nullopt};
    const auto indexer = TupleIndexer::for_meta(meta);
    check_budget(indexer, options);
    const auto dims = texts.size();
    const auto sigma = in.alphabet.size();

    AutomatonBuilder builder(in.alphabet, std::move(meta));
    SymbolUnion symbols(sigma);
    std::vector<std::size_t> c(dims), target(dims);
    auto live = [&](std::size_t i) { return c[i] <= in.lengths[i]; };
    auto dead = [&](std::size_t i) { return in.lengths[i] + 1; };

    for (StateId id = 0; id < indexer.total_states(); ++id) {
        indexer.decode_into(id, c);
        std::vector<Transition> edges;
        std::optional<StateId> default_target;
        symbols.begin();
        if (id == 0) {
            bool any_text = false;
            for (std::size_t i = 0; i < dims; ++i) {
                if (in.lengths[i] == 0) continue;
                any_text = true;
                symbols.add(in.next[i].symbol_at(1));
            }
            if (any_text) {
                const std::vector<std::size_t> ones(dims, 1);
                default_target = indexer.encode(ones);
            }
        } else {
            bool any_live = false;
            for (std::size_t i = 0; i < dims; ++i) any_live = any_live || live(i);
            if (!any_live) {
                builder.add_state({}, std::nullopt);
                continue;
            }
            const auto step = diagonal_step(c, in.cap, in.lengths, live);
            if (step) {
                for (std::size_t i = 0; i < dims; ++i) target[i] = live(i) ? c[i] + *step : c[i];
                default_target = indexer.encode(target);
            }
            const bool full = !step || *step >= sigma;
            for (std::size_t i = 0; i < dims; ++i) {
                if (!live(i)) continue;
                if (full) {
                    symbols.add_suffix(in.next[i], c[i]);
                } else {
                    symbols.add_range(in.next[i], c[i], c[i] + *step);
                }
            }
        }
        for (const SymbolId a : symbols.symbols()) {
            for (std::size_t i = 0; i < dims; ++i) {
                target[i] = live(i) ? in.next[i].next(c[i], a).value_or(dead(i)) : c[i];
            }
            edges.push_back({a, indexer.encode(target)});
        }
        builder.add_state(std::move(edges), default_target);
    }
    return std::move(builder).build();
}

}  // namespace subseq
