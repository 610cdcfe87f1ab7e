#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "subseq/document.hpp"
#include "subseq/dot.hpp"
#include "subseq/errors.hpp"
#include "subseq/level.hpp"
#include "subseq/multi_builders.hpp"
#include "subseq/oracle.hpp"
#include "subseq/single_builders.hpp"
#include "subseq/tradeoff.hpp"

namespace subseq::cli {

namespace {

using nlohmann::ordered_json;

/// Usage, IO or parameter problem; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kSingleVariants{"sa", "chain", "level", "klevel"};
const std::vector<std::string> kMultiVariants{"naive-common", "common-level", "any-level"};

bool contains(const std::vector<std::string>& names, const std::string& name) {
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const CliConfig& cfg, const std::string& content, std::ostream& out) {
    if (cfg.out_path.empty() || cfg.out_path == "-") {
        out << content;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + cfg.out_path + "'");
    file << content;
}

Text decode(const CliConfig& cfg, std::string_view raw) {
    return cfg.codepoints ? text_from_utf8(raw) : text_from_bytes(raw);
}

std::vector<Text> collect_texts(const CliConfig& cfg) {
    std::vector<Text> texts;
    for (const auto& t : cfg.inline_texts) texts.push_back(decode(cfg, t));
    for (const auto& f : cfg.files) texts.push_back(decode(cfg, read_file(f)));
    if (!cfg.random.empty()) {
        texts.push_back(random_text(cfg.random[0], cfg.random[1], cfg.random[2]));
    }
    return texts;
}

std::optional<std::uint64_t> random_seed(const CliConfig& cfg) {
    if (cfg.random.empty()) return std::nullopt;
    return cfg.random[2];
}

std::string resolve_variant(const CliConfig& cfg, std::size_t text_count) {
    std::string variant = cfg.variant;
    if (cfg.mode != "common" && cfg.mode != "any") {
        throw UsageError("--mode must be 'common' or 'any'");
    }
    if (text_count >= 2) {
        if (variant.empty() || variant == "level") {
            variant = cfg.mode == "any" ? "any-level" : "common-level";
        } else if (variant == "naive") {
            variant = "naive-common";
        }
        if (!contains(kMultiVariants, variant)) {
            throw UsageError("variant '" + variant + "' takes a single text");
        }
        if (variant == "naive-common" && text_count != 2) {
            throw UsageError("naive-common takes exactly two texts");
        }
    } else {
        if (variant.empty()) variant = "sa";
        if (contains(kMultiVariants, variant)) {
            throw UsageError("variant '" + variant + "' needs at least two texts");
        }
        if (!contains(kSingleVariants, variant)) throw UsageError("unknown variant '" + variant + "'");
    }
    if (cfg.k && variant != "klevel") throw UsageError("--k is only valid with --variant klevel");
    return variant;
}

struct Built {
    Automaton automaton;
    std::vector<Text> texts;
    std::size_t sigma;
};

Built build_from_config(const CliConfig& cfg) {
    auto texts = collect_texts(cfg);
    if (texts.empty()) throw UsageError("no input: use --text, --texts, --file or --random");
    const auto variant = resolve_variant(cfg, texts.size());
    MultiOptions multi;
    multi.state_budget = cfg.state_budget;
    const auto single_sigma = [&] { return effective_sigma(texts.front(), std::nullopt); };
    const auto union_sigma = [&] { return Alphabet::from_texts(texts).size(); };

    if (variant == "sa") return {build_sa(texts.front()), texts, single_sigma()};
    if (variant == "chain") return {build_chain(texts.front()), texts, single_sigma()};
    if (variant == "level") return {build_level(texts.front()), texts, single_sigma()};
    if (variant == "klevel") {
        KLevelOptions options;
        options.sigma = cfg.sigma;
        options.strip_redundant_defaults = cfg.strip_defaults;
        auto a = build_k_level(texts.front(), cfg.k.value_or(2), options);
        return {std::move(a), texts, effective_sigma(texts.front(), cfg.sigma)};
    }
    if (variant == "naive-common") {
        return {build_naive_common(texts[0], texts[1], multi), texts, union_sigma()};
    }
    if (variant == "common-level") return {build_common_level(texts, multi), texts, union_sigma()};
    return {build_any_level(texts, multi), texts, union_sigma()};
}

Automaton load_automaton(const CliConfig& cfg) { return deserialize(read_file(cfg.automaton_path)); }

ordered_json stats_document(const TradeoffRow& row) {
    ordered_json doc;
    doc["version"] = kDocumentVersion;
    doc["variant"] = row.variant;
    if (row.lengths.size() == 1) {
        doc["n"] = row.lengths.front();
    } else {
        doc["lengths"] = row.lengths;
    }
    doc["sigma"] = row.sigma;
    doc["k"] = row.k ? ordered_json(*row.k) : ordered_json(nullptr);
    doc["states"] = row.metrics.states;
    doc["regular_transitions"] = row.metrics.regular_transitions;
    doc["default_transitions"] = row.metrics.default_transitions;
    doc["size_total"] = row.metrics.size_total;
    doc["longest_default_chain"] = row.metrics.longest_default_chain;
    doc["reachable_states"] = row.reachable_states;
    doc["delay_bound_structural"] = row.delay_bound;
    doc["theoretical_delay_cap"] = row.theoretical_delay_cap;
    return doc;
}

std::string lengths_string(const std::vector<std::size_t>& lengths) {
    std::string s;
    for (std::size_t i = 0; i < lengths.size(); ++i) s += (i ? "x" : "") + std::to_string(lengths[i]);
    return s;
}

std::string stats_text(const TradeoffRow& row) {
    std::ostringstream o;
    o << "variant:                " << row.variant << '\n'
      << (row.lengths.size() == 1 ? "n:                      " : "lengths:                ")
      << lengths_string(row.lengths) << '\n'
      << "sigma:                  " << row.sigma << '\n'
      << "k:                      " << (row.k ? std::to_string(*row.k) : "-") << '\n'
      << "states:                 " << row.metrics.states << '\n'
      << "regular_transitions:    " << row.metrics.regular_transitions << '\n'
      << "default_transitions:    " << row.metrics.default_transitions << '\n'
      << "size_total:             " << row.metrics.size_total << '\n'
      << "longest_default_chain:  " << row.metrics.longest_default_chain << '\n'
      << "reachable_states:       " << row.reachable_states << '\n'
      << "delay_bound_structural: " << row.delay_bound << '\n'
      << "theoretical_delay_cap:  " << row.theoretical_delay_cap << '\n';
    return o.str();
}

bool has_build_inputs(const CliConfig& cfg) {
    return !cfg.inline_texts.empty() || !cfg.files.empty() || !cfg.random.empty();
}

int cmd_build(const CliConfig& cfg, std::ostream& out) {
    const auto built = build_from_config(cfg);
    const auto report = validate(built.automaton, forward_order_for(built.automaton.meta()));
    if (!report.ok()) throw std::logic_error("builder produced an invalid automaton: " + report.summary());
    write_output(cfg, cfg.format == "dot" ? export_dot(built.automaton) : serialize(built.automaton), out);
    return kOk;
}

int cmd_match(const CliConfig& cfg, std::ostream& out) {
    const auto a = load_automaton(cfg);
    const auto outcome = run(a, decode(cfg, cfg.pattern.value_or("")));
    out << (outcome.accepted ? "accept" : "reject") << '\n';
    if (cfg.trace) {
        out << "targets:";
        for (const auto t : outcome.consumed_targets) out << ' ' << state_label(a, t);
        out << "\ndefaults:";
        for (const auto d : outcome.defaults_per_char) out << ' ' << d;
        out << '\n';
        if (outcome.reject_position) out << "reject_position: " << *outcome.reject_position << '\n';
    }
    return outcome.accepted ? kOk : kReject;
}

int cmd_stats(const CliConfig& cfg, std::ostream& out) {
    TradeoffRow row;
    if (!cfg.automaton_path.empty()) {
        const auto a = load_automaton(cfg);
        row = measure(a, cfg.sigma.value_or(a.alphabet().size()));
    } else {
        const auto built = build_from_config(cfg);
        row = measure(built.automaton, built.sigma);
    }
    write_output(cfg, cfg.format == "structured" ? stats_document(row).dump(2) + "\n" : stats_text(row), out);
    return kOk;
}

std::string show(TextView pattern) { return "\"" + utf8_encode(pattern) + "\""; }

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    std::optional<Automaton> loaded;
    std::vector<Text> texts = collect_texts(cfg);
    std::size_t sigma = 0;
    if (!cfg.automaton_path.empty()) {
        loaded = load_automaton(cfg);
        if (texts.empty()) throw UsageError("verify --automaton needs the source text(s)");
        if (loaded->meta().lengths.size() != texts.size()) {
            throw UsageError("document was built over " + std::to_string(loaded->meta().lengths.size()) +
                             " text(s), got " + std::to_string(texts.size()));
        }
        for (std::size_t i = 0; i < texts.size(); ++i) {
            if (loaded->meta().lengths[i] != texts[i].size()) {
                throw UsageError("text " + std::to_string(i) + " length does not match the document");
            }
        }
        sigma = cfg.sigma.value_or(loaded->meta().is_multi() ? Alphabet::from_texts(texts).size()
                                                             : loaded->alphabet().size());
    } else {
        auto built = build_from_config(cfg);
        loaded = std::move(built.automaton);
        texts = std::move(built.texts);
        sigma = built.sigma;
    }
    const Automaton& a = *loaded;
    const auto& variant = a.meta().variant;

    bool pass = true;
    auto line = [&](bool ok, const std::string& what) {
        out << (ok ? "PASS " : "FAIL ") << what << '\n';
        pass = pass && ok;
    };

    const auto report = validate(a, forward_order_for(a.meta()));
    line(report.ok(), "validate: " + report.summary());

    Oracle oracle;
    if (variant == "any-level") {
        oracle = [&](TextView p) { return is_any_subsequence(p, texts); };
    } else if (a.meta().is_multi()) {
        oracle = [&](TextView p) { return is_common_subsequence(p, texts); };
    } else {
        oracle = [&](TextView p) { return is_subsequence(p, texts.front()); };
    }
    EnumerationOptions enumeration{cfg.enum_budget, cfg.sample, cfg.seed};
    const auto alphabet = probe_alphabet(texts);
    const auto eq = equivalence_check(a, oracle, alphabet, cfg.max_len, enumeration);
    {
        std::ostringstream msg;
        msg << "equivalence: " << eq.patterns_checked << (eq.sampled ? " sampled" : "")
            << " patterns, max defaults/char " << eq.max_defaults_per_char;
        if (!eq.equivalent()) {
            const auto& m = eq.mismatches.front();
            msg << ", " << eq.mismatches.size() << " mismatch(es), first " << show(m.pattern)
                << " automaton=" << (m.automaton_verdict ? "accept" : "reject")
                << " oracle=" << (m.oracle_verdict ? "accept" : "reject");
        }
        line(eq.equivalent(), msg.str());
    }

    std::optional<Automaton> reference;
    std::string reference_name;
    if (!a.meta().is_multi()) {
        reference = build_sa(texts.front());
        reference_name = "sa";
    } else if (texts.size() == 2 && variant == "naive-common") {
        reference = build_common_level(texts, {cfg.state_budget});
        reference_name = "common-level";
    } else if (texts.size() == 2 && variant == "common-level") {
        reference = build_naive_common(texts[0], texts[1], {cfg.state_budget});
        reference_name = "naive-common";
    }
    if (reference) {
        const auto tr = trace_equivalence(a, *reference, alphabet, cfg.max_len, enumeration);
        line(tr.equivalent, "trace vs " + reference_name + ": " + std::to_string(tr.patterns_checked) +
                                " patterns" +
                                (tr.counterexample ? ", counterexample " + show(*tr.counterexample) : ""));
    } else {
        out << "SKIP trace: no reference construction for " << variant << " over "
            << texts.size() << " texts\n";
    }

    const auto row = measure(a, sigma);
    const bool bounded = row.metrics.longest_default_chain <= row.theoretical_delay_cap ||
                         variant == "sa";
    line(bounded, "delay: longest default chain " + std::to_string(row.metrics.longest_default_chain) +
                      " <= " + std::to_string(row.theoretical_delay_cap));
    const bool within = eq.max_defaults_per_char <= row.metrics.longest_default_chain;
    line(within, "per-character defaults " + std::to_string(eq.max_defaults_per_char) +
                     " <= longest default chain");

    out << "verify: " << (pass ? "pass" : "fail") << '\n';
    return pass ? kOk : kVerificationFailed;
}

std::vector<unsigned> parse_ks(const std::string& list) {
    std::vector<unsigned> ks;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const auto v = std::stoul(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            ks.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw UsageError("--ks expects a comma-separated list of integers, got '" + list + "'");
        }
    }
    return ks;
}

int cmd_bench(const CliConfig& cfg, std::ostream& out) {
    const auto texts = collect_texts(cfg);
    if (texts.size() != 1) throw UsageError("bench takes exactly one text (--text, --file or --random)");
    const auto rows = tradeoff_table(texts.front(), parse_ks(cfg.ks), cfg.sigma);
    const auto seed = random_seed(cfg);
    std::string content;
    if (cfg.format == "structured") {
        ordered_json doc;
        doc["version"] = kDocumentVersion;
        doc["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
        doc["rows"] = ordered_json::array();
        for (const auto& row : rows) doc["rows"].push_back(stats_document(row));
        content = doc.dump(2) + "\n";
    } else {
        std::ostringstream o;
        o << "# n=" << texts.front().size();
        if (seed) o << " seed=" << *seed;
        o << '\n';
        o << std::left << std::setw(8) << "variant" << std::right << std::setw(5) << "k"
          << std::setw(7) << "sigma" << std::setw(10) << "states" << std::setw(12) << "regular"
          << std::setw(10) << "defaults" << std::setw(12) << "size" << std::setw(7) << "chain"
          << std::setw(7) << "delay" << std::setw(7) << "cap" << '\n';
        for (const auto& r : rows) {
            o << std::left << std::setw(8) << r.variant << std::right << std::setw(5)
              << (r.k ? std::to_string(*r.k) : "-") << std::setw(7) << r.sigma << std::setw(10)
              << r.metrics.states << std::setw(12) << r.metrics.regular_transitions << std::setw(10)
              << r.metrics.default_transitions << std::setw(12) << r.metrics.size_total
              << std::setw(7) << r.metrics.longest_default_chain << std::setw(7) << r.delay_bound
              << std::setw(7) << r.theoretical_delay_cap << '\n';
        }
        content = o.str();
    }
    write_output(cfg, content, out);
    return kOk;
}

int cmd_export(const CliConfig& cfg, std::ostream& out) {
    const auto a = cfg.automaton_path.empty() ? build_from_config(cfg).automaton : load_automaton(cfg);
    write_output(cfg, cfg.format == "structured" ? serialize(a) : export_dot(a), out);
    return kOk;
}

void add_input_options(CLI::App* sub, CliConfig& cfg) {
    sub->add_option("--text", cfg.inline_texts, "Input text literal")->take_last()->expected(1);
    sub->add_option("--texts", cfg.inline_texts, "Several input text literals")->expected(1, -1);
    sub->add_option("--file", cfg.files, "Read an input text from a file")->expected(1);
    sub->add_option("--random", cfg.random, "Synthesize a uniform random text: N SIGMA SEED")
        ->expected(3);
    sub->add_flag("--codepoints", cfg.codepoints, "Decode inputs as UTF-8 code points instead of bytes");
}

void add_build_options(CLI::App* sub, CliConfig& cfg) {
    add_input_options(sub, cfg);
    sub->add_option("--variant", cfg.variant,
                    "sa | chain | level | klevel | naive-common | common-level | any-level");
    sub->add_option_function<unsigned>("--k", [&cfg](const unsigned& k) { cfg.k = k; }, "Base k for klevel");
    sub->add_option("--mode", cfg.mode, "common | any (multi-string)");
    sub->add_option_function<std::size_t>("--sigma", [&cfg](const std::size_t& s) { cfg.sigma = s; },
                                          "Override sigma upward");
    sub->add_flag("--strip-defaults", cfg.strip_defaults,
                  "Drop defaults from states that already have full-suffix transitions");
    sub->add_option("--state-budget", cfg.state_budget, "Maximum product states");
}

}  // namespace

Text random_text(std::size_t n, std::size_t sigma, std::uint64_t seed) {
    if (sigma == 0) throw UsageError("--random needs SIGMA >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, sigma - 1);
    Text t(n, 0);
    for (auto& c : t) {
        const auto r = pick(rng);
        c = static_cast<Symbol>(sigma <= 26 ? U'a' + r : r);
    }
    return t;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Subsequence automata with default transitions"};
    app.require_subcommand(1, 1);

    auto* build = app.add_subcommand("build", "Build an automaton and write its document");
    add_build_options(build, cfg);
    build->add_option("--format", cfg.format, "structured | dot")->check(CLI::IsMember({"structured", "dot"}));
    build->add_option("--out", cfg.out_path, "Output path");

    auto* match = app.add_subcommand("match", "Run a pattern against an automaton document");
    match->add_option("--automaton", cfg.automaton_path, "Automaton document ('-' for stdin)")->required();
    match->add_option_function<std::string>("--pattern", [&cfg](const std::string& p) { cfg.pattern = p; },
                                            "Pattern")->required();
    match->add_flag("--trace", cfg.trace, "Print consumed targets and defaults per character");
    match->add_flag("--codepoints", cfg.codepoints, "Decode the pattern as UTF-8 code points");

    auto* stats = app.add_subcommand("stats", "Size and delay metrics");
    add_build_options(stats, cfg);
    stats->add_option("--automaton", cfg.automaton_path, "Automaton document instead of build flags");
    stats->add_option("--format", cfg.format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
    stats->add_option("--out", cfg.out_path, "Output path");

    auto* verify = app.add_subcommand("verify", "Oracle equivalence, trace equivalence and invariants");
    add_build_options(verify, cfg);
    verify->add_option("--automaton", cfg.automaton_path, "Verify a document against the given text(s)");
    verify->add_option("--max-len", cfg.max_len, "Maximum pattern length to enumerate");
    verify->add_option("--enum-budget", cfg.enum_budget, "Maximum number of patterns");
    verify->add_flag("--sample", cfg.sample, "Sample patterns when the space exceeds the budget");
    verify->add_option("--seed", cfg.seed, "Sampling seed");

    auto* bench = app.add_subcommand("bench", "Size/delay trade-off table");
    add_input_options(bench, cfg);
    bench->add_option("--ks", cfg.ks, "Comma-separated list of k values");
    bench->add_option_function<std::size_t>("--sigma", [&cfg](const std::size_t& s) { cfg.sigma = s; },
                                            "Override sigma upward");
    bench->add_option("--format", cfg.format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
    bench->add_option("--out", cfg.out_path, "Output path");

    auto* exp = app.add_subcommand("export", "Export an automaton as DOT or document");
    add_build_options(exp, cfg);
    exp->add_option("--automaton", cfg.automaton_path, "Automaton document instead of build flags");
    exp->add_option("--format", cfg.format, "dot | structured")->check(CLI::IsMember({"dot", "structured"}));
    exp->add_option("--out", cfg.out_path, "Output path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (build->parsed()) return cmd_build(cfg, out);
        if (match->parsed()) return cmd_match(cfg, out);
        if (stats->parsed()) return cmd_stats(cfg, out);
        if (verify->parsed()) {
            if (cfg.automaton_path.empty() && !has_build_inputs(cfg)) {
                throw UsageError("verify needs --automaton or build inputs");
            }
            return cmd_verify(cfg, out);
        }
        if (bench->parsed()) return cmd_bench(cfg, out);
        if (exp->parsed()) return cmd_export(cfg, out);
    } catch (const BudgetError& e) {
        err << "error: budget exceeded: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace subseq::cli
