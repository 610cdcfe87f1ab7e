#include "subseq/document.hpp"

#include <json.hpp>

#include "subseq/errors.hpp"
#include "subseq/tuple_indexer.hpp"

namespace subseq {

using nlohmann::json;

std::string serialize(const Automaton& a) {
    const auto& meta = a.meta();
    std::string out = "{\n";
    out += "  \"version\": " + std::to_string(kDocumentVersion) + ",\n";
    out += "  \"variant\": " + json(meta.variant).dump() + ",\n";
    if (meta.is_multi()) {
        out += "  \"lengths\": " + json(meta.lengths).dump() + ",\n";
    } else {
        out += "  \"n\": " + std::to_string(meta.lengths.front()) + ",\n";
    }
    out += "  \"k\": " + (meta.k ? std::to_string(*meta.k) : std::string("null")) + ",\n";

    json alphabet = json::array();
    for (const Symbol s : a.alphabet().symbols()) alphabet.push_back(utf8_encode(s));
    out += "  \"alphabet\": " + alphabet.dump() + ",\n";

    bool all_accepting = true;
    for (StateId s = 0; s < a.state_count(); ++s) all_accepting = all_accepting && a.accepting(s);
    if (!all_accepting) {
        json accepting = json::array();
        for (StateId s = 0; s < a.state_count(); ++s) accepting.push_back(a.accepting(s));
        out += "  \"accepting\": " + accepting.dump() + ",\n";
    }

    out += "  \"states\": [";
    for (StateId s = 0; s < a.state_count(); ++s) {
        out += s == 0 ? "\n    " : ",\n    ";
        const auto d = a.default_target(s);
        out += "{\"default\": " + (d ? std::to_string(*d) : std::string("null")) + ", \"trans\": [";
        bool first = true;
        for (const auto& t : a.transitions(s)) {
            if (!first) out += ", ";
            first = false;
            out += "[" + std::to_string(t.symbol) + ", " + std::to_string(t.target) + "]";
        }
        out += "]}";
    }
    out += "\n  ]\n}\n";
    return out;
}

namespace {

[[noreturn]] void structure_error(const std::string& what) {
    throw ParseError(ParseError::Kind::structure, "malformed automaton document: " + what);
}

const json& require(const json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) structure_error(std::string("missing field '") + key + "'");
    return *it;
}

std::size_t as_index(const json& v, const std::string& what) {
    if (!v.is_number_unsigned()) structure_error(what + " must be a non-negative integer");
    return v.get<std::size_t>();
}

}  // namespace

Automaton deserialize(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError(ParseError::Kind::syntax, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) structure_error("top level must be an object");

    const auto& version = require(doc, "version");
    if (!version.is_number_integer() || version.get<long long>() != kDocumentVersion) {
        throw ParseError(ParseError::Kind::version,
                         "unsupported document version " + version.dump() + " (expected " +
                             std::to_string(kDocumentVersion) + ")");
    }

    AutomatonMeta meta;
    const auto& variant = require(doc, "variant");
    if (!variant.is_string()) structure_error("'variant' must be a string");
    meta.variant = variant.get<std::string>();

    if (doc.contains("lengths")) {
        const auto& lengths = doc["lengths"];
        if (!lengths.is_array() || lengths.size() < 2) {
            structure_error("'lengths' must be an array of at least two integers");
        }
        for (const auto& l : lengths) meta.lengths.push_back(as_index(l, "'lengths' entry"));
    } else {
        meta.lengths.push_back(as_index(require(doc, "n"), "'n'"));
    }

    const auto& k = require(doc, "k");
    if (!k.is_null()) {
        if (!k.is_number_unsigned()) structure_error("'k' must be an integer or null");
        meta.k = k.get<unsigned>();
    }

    const auto& alphabet_json = require(doc, "alphabet");
    if (!alphabet_json.is_array()) structure_error("'alphabet' must be an array");
    std::vector<Symbol> symbols;
    for (const auto& entry : alphabet_json) {
        if (!entry.is_string()) structure_error("alphabet entries must be strings");
        Text decoded;
        try {
            decoded = text_from_utf8(entry.get<std::string>());
        } catch (const ParameterError& e) {
            structure_error(std::string("alphabet entry: ") + e.what());
        }
        if (decoded.size() != 1) structure_error("alphabet entries must be single characters");
        if (!symbols.empty() && symbols.back() >= decoded.front()) {
            structure_error("alphabet must be sorted and free of duplicates");
        }
        symbols.push_back(decoded.front());
    }

    const auto& states = require(doc, "states");
    if (!states.is_array() || states.empty()) structure_error("'states' must be a non-empty array");

    std::vector<bool> accepting(states.size(), true);
    if (doc.contains("accepting")) {
        const auto& acc = doc["accepting"];
        if (!acc.is_array() || acc.size() != states.size()) {
            structure_error("'accepting' must have one boolean per state");
        }
        for (std::size_t s = 0; s < acc.size(); ++s) {
            if (!acc[s].is_boolean()) structure_error("'accepting' entries must be booleans");
            accepting[s] = acc[s].get<bool>();
        }
    }

    AutomatonBuilder builder(Alphabet::from_symbols(std::move(symbols)), meta);
    for (std::size_t s = 0; s < states.size(); ++s) {
        const auto& state = states[s];
        const std::string where = "state " + std::to_string(s);
        if (!state.is_object()) structure_error(where + " must be an object");
        std::optional<StateId> default_target;
        const auto& d = require(state, "default");
        if (!d.is_null()) default_target = static_cast<StateId>(as_index(d, where + " default"));
        const auto& trans = require(state, "trans");
        if (!trans.is_array()) structure_error(where + " 'trans' must be an array");
        std::vector<Transition> edges;
        edges.reserve(trans.size());
        for (const auto& pair : trans) {
            if (!pair.is_array() || pair.size() != 2) {
                structure_error(where + " transitions must be [symbol, target] pairs");
            }
            const auto symbol = as_index(pair[0], where + " symbol index");
            const auto target = as_index(pair[1], where + " target");
            if (!edges.empty() && edges.back().symbol >= symbol) {
                structure_error(where + " transitions must be sorted by symbol index");
            }
            edges.push_back({static_cast<SymbolId>(symbol), static_cast<StateId>(target)});
        }
        builder.add_state(std::move(edges), default_target, accepting[s]);
    }
    auto automaton = std::move(builder).build();

    if (automaton.meta().is_multi()) {
        const auto expected = TupleIndexer::for_meta(automaton.meta()).total_states();
        if (expected != automaton.state_count()) {
            structure_error("product automaton over lengths " + json(meta.lengths).dump() +
                            " must have " + std::to_string(expected) + " states");
        }
    }
    const auto report = validate(automaton, forward_order_for(automaton.meta()));
    if (!report.ok()) {
        throw ParseError(ParseError::Kind::validation, "invalid automaton: " + report.summary());
    }
    return automaton;
}

}  // namespace subseq
