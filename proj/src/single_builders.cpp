#include "subseq/single_builders.hpp"

#include "subseq/errors.hpp"
#include "subseq/level.hpp"
#include "subseq/next_occurrence.hpp"

namespace subseq {

namespace {

AutomatonMeta single_meta(std::string variant, std::size_t n, std::optional<unsigned> k = {}) {
    return {std::move(variant), {n}, k};
}

// Emits one transition per distinct symbol of S[s + 1, last], each to its
// leftmost occurrence after s. `stamp` is scratch space of size sigma.
class WindowEmitter {
public:
    explicit WindowEmitter(const NextOccurrenceTable& next)
        : next_(next), stamp_(next.sigma(), SIZE_MAX) {}

    std::vector<Transition> window(std::size_t s, std::size_t last) {
        std::vector<Transition> out;
        for (std::size_t pos = s + 1; pos <= last; ++pos) {
            const SymbolId a = next_.symbol_at(pos);
            if (stamp_[a] == s) continue;
            stamp_[a] = s;
            out.push_back({a, static_cast<StateId>(pos)});
        }
        return out;
    }

    std::vector<Transition> full_suffix(std::size_t s) const {
        std::vector<Transition> out;
        for (SymbolId a = 0; a < next_.sigma(); ++a) {
            if (const auto j = next_.next(s, a)) out.push_back({a, static_cast<StateId>(*j)});
        }
        return out;
    }

private:
    const NextOccurrenceTable& next_;
    std::vector<std::size_t> stamp_;
};

// State 0 of every level variant: S[1] -> 1 and default -> 1.
void add_level_origin(AutomatonBuilder& builder, const NextOccurrenceTable& next) {
    if (next.length() == 0) {
        builder.add_state({}, std::nullopt);
        return;
    }
    builder.add_state({{next.symbol_at(1), 1}}, StateId{1});
}

}  // namespace

Automaton build_sa(TextView text) {
    const auto alphabet = Alphabet::from_text(text);
    const NextOccurrenceTable next(text, alphabet);
    const WindowEmitter emit(next);
    AutomatonBuilder builder(alphabet, single_meta("sa", text.size()));
    builder.reserve(text.size() + 1, (text.size() + 1) * alphabet.size());
    for (std::size_t s = 0; s <= text.size(); ++s) {
        builder.add_state(emit.full_suffix(s), std::nullopt);
    }
    return std::move(builder).build();
}

Automaton build_chain(TextView text) {
    const auto alphabet = Alphabet::from_text(text);
    AutomatonBuilder builder(alphabet, single_meta("chain", text.size()));
    builder.reserve(text.size() + 1, text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto next = static_cast<StateId>(i + 1);
        builder.add_state({{*alphabet.id_of(text[i]), next}}, next);
    }
    builder.add_state({}, std::nullopt);
    return std::move(builder).build();
}

Automaton build_level(TextView text) {
    const auto n = text.size();
    const auto alphabet = Alphabet::from_text(text);
    const NextOccurrenceTable next(text, alphabet);
    WindowEmitter emit(next);
    const auto params = LevelParams::uncapped(n);

    AutomatonBuilder builder(alphabet, single_meta("level", n));
    add_level_origin(builder, next);
    for (std::size_t s = 1; s <= n; ++s) {
        const auto b = bar(s, params);
        std::optional<StateId> default_target;
        if (b) default_target = static_cast<StateId>(*b);
        builder.add_state(emit.window(s, b.value_or(n)), default_target);
    }
    return std::move(builder).build();
}

std::size_t effective_sigma(TextView text, std::optional<std::size_t> sigma_override) {
    const auto actual = Alphabet::from_text(text).size();
    if (!sigma_override) return actual;
    if (*sigma_override < actual) {
        throw ParameterError("sigma override " + std::to_string(*sigma_override) +
                             " is smaller than the text's alphabet size " + std::to_string(actual));
    }
    return *sigma_override;
}

Automaton build_k_level(TextView text, unsigned k, const KLevelOptions& options) {
    const auto n = text.size();
    const auto sigma = effective_sigma(text, options.sigma);
    const auto max_k = std::max<std::size_t>(sigma, 2);
    if (k < 2 || k > max_k) {
        throw ParameterError("k must satisfy 2 <= k <= " + std::to_string(max_k) + " (sigma = " +
                             std::to_string(sigma) + "), got " + std::to_string(k));
    }
    const auto alphabet = Alphabet::from_text(text);
    const NextOccurrenceTable next(text, alphabet);
    WindowEmitter emit(next);
    const auto params = LevelParams::alphabet_aware(k, sigma, n);

    AutomatonBuilder builder(alphabet, single_meta("klevel", n, k));
    add_level_origin(builder, next);
    for (std::size_t s = 1; s <= n; ++s) {
        const auto b = bar(s, params);
        const bool full = !b || *b - s >= sigma;
        std::optional<StateId> default_target;
        if (b && !(full && options.strip_redundant_defaults)) default_target = static_cast<StateId>(*b);
        builder.add_state(full ? emit.full_suffix(s) : emit.window(s, *b), default_target);
    }
    return std::move(builder).build();
}

}  // namespace subseq
