#include "subseq/dot.hpp"

#include <cstdio>

#include "subseq/tuple_indexer.hpp"

namespace subseq {

namespace {

std::string escape_label(Symbol s) {
    if (s == U'"' || s == U'\\') return std::string("\\") + static_cast<char>(s);
    if (s < 0x20 || s == 0x7F) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "0x%02X", static_cast<unsigned>(s));
        return buf;
    }
    return utf8_encode(s);
}

}  // namespace

std::string export_dot(const Automaton& a) {
    const auto& meta = a.meta();
    std::optional<TupleIndexer> indexer;
    if (meta.is_multi()) indexer.emplace(TupleIndexer::for_meta(meta));

    std::string out = "digraph \"" + meta.variant + "\" {\n";
    out += "  rankdir=LR;\n";
    out += "  node [shape=circle];\n";
    for (StateId s = 0; s < a.state_count(); ++s) {
        const std::string label = indexer ? indexer->decode(s).to_string() : std::to_string(s);
        out += "  " + std::to_string(s) + " [label=\"" + label + "\"";
        if (a.accepting(s)) out += ", shape=doublecircle";
        out += "];\n";
    }
    for (StateId s = 0; s < a.state_count(); ++s) {
        for (const auto& t : a.transitions(s)) {
            out += "  " + std::to_string(s) + " -> " + std::to_string(t.target) + " [label=\"" +
                   escape_label(a.alphabet().symbol(t.symbol)) + "\"];\n";
        }
        if (const auto d = a.default_target(s)) {
            out += "  " + std::to_string(s) + " -> " + std::to_string(*d) + " [style=dashed];\n";
        }
    }
    out += "}\n";
    return out;
}

}  // namespace subseq
