#include <doctest.h>

#include <map>
#include <random>

#include "reference.hpp"
#include "subseq/errors.hpp"
#include "subseq/level.hpp"
#include "subseq/multi_builders.hpp"
#include "subseq/oracle.hpp"

using namespace subseq;
using ref::T;

namespace {

TupleState tup(std::vector<std::size_t> c) { return {std::move(c)}; }

std::map<char, TupleState> edges(const Automaton& a, const TupleIndexer& ix, const TupleState& from) {
    std::map<char, TupleState> out;
    for (const auto& t : a.transitions(ix.encode(from))) {
        out[static_cast<char>(a.alphabet().symbol(t.symbol))] = ix.decode(t.target);
    }
    return out;
}

std::optional<TupleState> default_of(const Automaton& a, const TupleIndexer& ix, const TupleState& from) {
    if (const auto d = a.default_target(ix.encode(from))) return ix.decode(*d);
    return std::nullopt;
}

std::set<Text> accepted_up_to(const Automaton& a, std::span<const Symbol> alphabet, std::size_t len) {
    std::set<Text> out;
    for_each_pattern(alphabet, len, {}, [&](TextView p) {
        if (accepts(a, p)) out.insert(Text(p));
    });
    return out;
}

}  // namespace

TEST_CASE("tuple indexer encodes and decodes the full state space") {
    const TupleIndexer ix({3, 2, 4});
    CHECK(ix.total_states() == 25);
    CHECK(ix.encode(tup({0, 0, 0})) == 0);
    std::set<StateId> seen;
    for (std::size_t a = 1; a <= 3; ++a) {
        for (std::size_t b = 1; b <= 2; ++b) {
            for (std::size_t c = 1; c <= 4; ++c) {
                const auto id = ix.encode(tup({a, b, c}));
                CHECK(ix.decode(id) == tup({a, b, c}));
                seen.insert(id);
            }
        }
    }
    CHECK(seen.size() == 24);
    CHECK(*seen.begin() == 1);
    CHECK(*seen.rbegin() == 24);
    CHECK_THROWS(ix.encode(tup({0, 1, 1})));
    CHECK_THROWS(ix.encode(tup({4, 1, 1})));
    CHECK_THROWS(ix.decode(25));
}

TEST_CASE("tuple indexer saturates instead of overflowing") {
    const TupleIndexer ix({1u << 30, 1u << 30, 1u << 30});
    CHECK(ix.total_states() == UINT64_MAX);
}

TEST_CASE("level_multi") {
    CHECK(level_multi(tup({4, 7}), 3) == 2);
    CHECK(level_multi(tup({8, 12}), 2) == 2);
    CHECK(level_multi(tup({5, 3}), 2) == 0);
}

TEST_CASE("bar_multi") {
    const std::vector<std::size_t> small{2, 2};
    CHECK(bar_multi(tup({1, 1}), 1, small) == tup({2, 2}));
    CHECK_FALSE(bar_multi(tup({1, 2}), 1, small).has_value());
    const std::vector<std::size_t> big{20, 20};
    CHECK(bar_multi(tup({6, 9}), 3, big) == tup({8, 11}));
    CHECK_FALSE(bar_multi(tup({4, 12}), 2, big).has_value());  // already at the cap
    CHECK(bar_multi(tup({8, 3}), 2, big) == tup({9, 4}));
}

TEST_CASE("bar_multi agrees with a scan along the diagonal") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t dims = 2 + rng() % 2;
        std::vector<std::size_t> lengths(dims);
        TupleState t;
        for (auto& n : lengths) {
            n = 1 + rng() % 40;
            t.coords.push_back(1 + rng() % n);
        }
        const unsigned cap = 1 + static_cast<unsigned>(rng() % 5);
        std::optional<TupleState> expected;
        const auto base = ref::level(t.min_coord(), 2, cap);
        for (std::size_t d = 1;; ++d) {
            bool inside = true;
            for (std::size_t i = 0; i < dims; ++i) inside = inside && t.coords[i] + d <= lengths[i];
            if (!inside) break;
            if (ref::level(t.min_coord() + d, 2, cap) > base) {
                expected = t;
                for (auto& c : expected->coords) c += d;
                break;
            }
        }
        REQUIRE(bar_multi(t, cap, lengths) == expected);
        if (expected) {
            // Displacement identity below the cap.
            CHECK(expected->coords[0] - t.coords[0] == (std::size_t{1} << level_multi(t, cap)));
        }
    }
}

TEST_CASE("diagonal sizes partition the non-origin states") {
    for (const auto& lengths : std::vector<std::vector<std::size_t>>{{2, 2}, {5, 3}, {1, 7}, {4, 3, 5}}) {
        const TupleIndexer ix(lengths);
        std::size_t total = 0;
        std::size_t product = 1;
        for (const auto n : lengths) product *= n;
        for (StateId id = 1; id < ix.total_states(); ++id) {
            const auto t = ix.decode(id);
            if (t.min_coord() == 1) total += diagonal_size(t, lengths);  // first state of each diagonal
        }
        CHECK(total == product);
    }
}

TEST_CASE("naive common automaton for ab/ba") {
    const auto a = build_naive_common(T("ab"), T("ba"));
    const TupleIndexer ix({2, 2});
    CHECK(a.state_count() == 5);
    CHECK(a.meta().variant == "naive-common");
    CHECK(edges(a, ix, tup({0, 0})) == std::map<char, TupleState>{{'a', tup({1, 2})}, {'b', tup({2, 1})}});
    CHECK(default_of(a, ix, tup({0, 0})) == tup({1, 1}));
    CHECK(accepted_up_to(a, probe_alphabet(std::vector<Text>{T("ab"), T("ba")}), 2) ==
          std::set<Text>{U"", U"a", U"b"});
    CHECK(validate(a, forward_order_for(a.meta())).ok());
}

TEST_CASE("naive common size accounting") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s1 = ref::random_text(rng, 1 + rng() % 8, 1 + rng() % 4);
        const auto s2 = ref::random_text(rng, 1 + rng() % 8, 1 + rng() % 4);
        const auto a = build_naive_common(s1, s2);
        CHECK(a.state_count() == s1.size() * s2.size() + 1);
        std::size_t with_both = 1;  // origin -> (1,1)
        for (std::size_t i = 1; i <= s1.size(); ++i) {
            for (std::size_t j = 1; j <= s2.size(); ++j) with_both += i < s1.size() && j < s2.size();
        }
        CHECK(a.default_transition_count() == with_both);
        CHECK(size_metrics(a).longest_default_chain <= std::min(s1.size(), s2.size()));
    }
}

TEST_CASE("common level automaton for ab/ba") {
    const std::vector<Text> texts{T("ab"), T("ba")};
    const auto a = build_common_level(texts);
    const TupleIndexer ix({2, 2});
    CHECK(a.state_count() == 5);
    CHECK(edges(a, ix, tup({1, 1})).empty());
    CHECK(default_of(a, ix, tup({1, 1})) == tup({2, 2}));
    CHECK(edges(a, ix, tup({1, 2})).empty());
    CHECK_FALSE(default_of(a, ix, tup({1, 2})).has_value());
    CHECK(accepted_up_to(a, probe_alphabet(texts), 2) == std::set<Text>{U"", U"a", U"b"});
}

TEST_CASE("common level automaton over identical strings") {
    const std::vector<Text> texts{T("abc"), T("abc"), T("abc")};
    const auto a = build_common_level(texts);
    CHECK(a.state_count() == 28);
    CHECK(accepted_up_to(a, probe_alphabet(texts), 4) == ref::all_subsequences(T("abc")));
    CHECK(ref::all_subsequences(T("abc")).size() == 8);
}

TEST_CASE("any level automaton") {
    const std::vector<Text> texts{T("ab"), T("ba")};
    const auto a = build_any_level(texts);
    CHECK(a.meta().variant == "any-level");
    CHECK(a.state_count() == 10);
    CHECK(accepts(a, U"ab"));
    CHECK(accepts(a, U"ba"));
    CHECK_FALSE(accepts(a, U"aa"));
    CHECK(validate(a, forward_order_for(a.meta())).ok());

    const std::vector<Text> xy{T("x"), T("y")};
    CHECK(accepted_up_to(build_any_level(xy), probe_alphabet(xy), 3) == std::set<Text>{U"", U"x", U"y"});
}

TEST_CASE("multi builders refuse oversize products and too few strings") {
    const std::vector<Text> big{Text(200, U'a'), Text(200, U'b'), Text(200, U'c')};
    try {
        (void)build_common_level(big);
        FAIL("expected a budget error");
    } catch (const BudgetError& e) {
        CHECK(e.required() == 8'000'001);
        CHECK(e.budget() == kDefaultStateBudget);
    }
    CHECK_THROWS_AS(build_any_level(big, {1000}), BudgetError);
    CHECK_THROWS_AS(build_naive_common(Text(2000, U'a'), Text(2000, U'a')), BudgetError);
    const std::vector<Text> one{T("ab")};
    CHECK_THROWS_AS(build_common_level(one), ParameterError);
    CHECK_THROWS_AS(build_any_level(one), ParameterError);
}

TEST_CASE("empty strings degrade gracefully") {
    const std::vector<Text> with_empty{T(""), T("ab")};
    const auto common = build_common_level(with_empty);
    CHECK(common.state_count() == 1);
    CHECK(accepted_up_to(common, probe_alphabet(with_empty), 2) == std::set<Text>{U""});
    CHECK(build_naive_common(T("ab"), T("")).state_count() == 1);
    const auto any = build_any_level(with_empty);
    CHECK(accepted_up_to(any, probe_alphabet(with_empty), 3) == std::set<Text>{U"", U"a", U"b", U"ab"});
}

TEST_CASE("multi-string automata agree with their oracles") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t count = 2 + rng() % 2;
        const std::size_t sigma = 1 + rng() % 4;
        std::vector<Text> texts;
        for (std::size_t i = 0; i < count; ++i) texts.push_back(ref::random_text(rng, 1 + rng() % (count == 2 ? 7 : 4), sigma));
        const auto alphabet = probe_alphabet(texts);
        const auto common = build_common_level(texts);
        const auto any = build_any_level(texts);
        REQUIRE(validate(common, forward_order_for(common.meta())).ok());
        REQUIRE(validate(any, forward_order_for(any.meta())).ok());
        const auto common_report = equivalence_check(common, [&](TextView p) { return is_common_subsequence(p, texts); }, alphabet, 4);
        CHECK(common_report.equivalent());
        const auto any_report = equivalence_check(any, [&](TextView p) { return is_any_subsequence(p, texts); }, alphabet, 4);
        CHECK(any_report.equivalent());
        if (count == 2) {
            const auto naive = build_naive_common(texts[0], texts[1]);
            CHECK(equivalence_check(naive, [&](TextView p) { return is_common_subsequence(p, texts); }, alphabet, 4).equivalent());
            CHECK(trace_equivalence(naive, common, alphabet, 4).equivalent);
        }
        const auto cap = std::max(1u, ceil_log(Alphabet::from_texts(texts).size(), 2));
        CHECK(size_metrics(common).longest_default_chain <= cap + 1);
        CHECK(size_metrics(any).longest_default_chain <= cap + 1);
    }
}

TEST_CASE("default edges in product automata strictly increase the level") {
    const std::vector<Text> texts{T("abcabcabdd"), T("cabbacadab")};
    const auto a = build_common_level(texts);
    const TupleIndexer ix({10, 10});
    const unsigned cap = 2;
    for (StateId id = 1; id < a.state_count(); ++id) {
        if (const auto d = a.default_target(id)) {
            CHECK(level_multi(ix.decode(*d), cap) > level_multi(ix.decode(id), cap));
        }
    }
}
