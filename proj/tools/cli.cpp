#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "hyperlogic/hyperlogic.hpp"

namespace hyperlogic::cli {

namespace {

Formula read_formula(const std::string& path) { return parse_formula(strip_comments(read_file(path))); }

// A closed HyperLTL formula: either prenex, or a Boolean combination of prenex sentences.
Sentence read_sentence(const std::string& path) {
    const Formula f = read_formula(path);
    check_closed(f);
    return to_prenex(f);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::size_t> split_numbers(const std::string& s) {
    std::vector<std::size_t> out;
    for (const auto& t : split_list(s)) {
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw Error("expected a list of natural numbers, got '" + s + "'");
        }
        out.push_back(std::stoul(t));
    }
    return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << text;
}

struct Options {
    std::string formula;
    std::string traces;
    std::string system;
    std::string output;
    std::string engine = "direct";
    std::string game_dump;
    std::size_t stem_bound = 1;
    std::size_t loop_bound = 1;
    std::size_t budget_traces = 1;
    std::size_t budget_stem = 1;
    std::size_t budget_loop = 1;
    std::optional<std::size_t> time_limit_ms;
    unsigned jobs = 1;
    bool naive = false;
    std::string tiles;
    std::string props;
    std::size_t depth = 1;
    std::vector<std::string> sets;
    std::string left;
    std::string right;
    std::string input;
    std::string word;
    std::optional<std::size_t> stretch;
    std::string table;
};

int check_trace(const Options& o, std::ostream& out) {
    const Sentence phi = read_sentence(o.formula);
    const TraceSet t = parse_trace_set(read_file(o.traces));
    const bool r = check(phi, t, CheckOptions{!o.naive});
    out << "RESULT: " << (r ? "true" : "false") << "\n";
    return r ? 0 : 1;
}

int check_sys(const Options& o, std::ostream& out) {
    const Formula phi = parse_hyperctl(strip_comments(read_file(o.formula)));
    const KripkeStructure k = parse_kripke(read_file(o.system));
    const PathBounds b{o.stem_bound, o.loop_bound};
    std::optional<bool> direct;
    std::optional<bool> game;
    if (o.engine == "direct" || o.engine == "both") direct = check_bounded(phi, k, b);
    if (o.engine == "game" || o.engine == "both" || !o.game_dump.empty()) {
        const Game g = build_game(phi, k, b);
        game = solve_game(g).winner == Player::Verifier;
        if (!o.game_dump.empty()) emit(g.dump(k), o.game_dump, out);
    }
    if (direct && game && *direct != *game) throw Error("direct evaluation and game solving disagree");
    const bool r = direct ? *direct : *game;
    out << "RESULT: " << (r ? "true" : "false") << " (bounded semantics at S=" << o.stem_bound
        << ",L=" << o.loop_bound << ")\n";
    return r ? 0 : 1;
}

int sat(const Options& o, std::ostream& out) {
    const Sentence phi = read_sentence(o.formula);
    SearchBudget budget{o.budget_traces, o.budget_stem, o.budget_loop, std::nullopt};
    if (o.time_limit_ms) budget.time_limit = std::chrono::milliseconds(*o.time_limit_ms);
    const SatResult r = sat_enum(phi, budget, o.jobs);
    switch (r.status) {
        case SatStatus::Found:
            out << "RESULT: FOUND\n";
            emit(format_trace_set(r.model), o.output, out);
            return 0;
        case SatStatus::Exhausted:
            out << "RESULT: EXHAUSTED (" << r.sets_checked << " sets checked)\n";
            return 1;
        case SatStatus::TimedOut:
            out << "RESULT: EXHAUSTED (time limit reached after " << r.sets_checked << " sets checked)\n";
            return 1;
    }
    return 1;
}

int classify_cmd(const Options& o, std::ostream& out) {
    const AlternationClass c = classify(read_sentence(o.formula));
    out << "CLASS: " << to_string(c) << "\n";
    return 0;
}

int pnf(const Options& o, std::ostream& out) {
    emit(to_string(read_sentence(o.formula)) + "\n", o.output, out);
    return 0;
}

Word read_word(const std::string& path) { return parse_word(read_file(path)); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hyperproperty logics toolkit", "hyperlogic"};
    app.require_subcommand(1);
    Options o;

    auto formula_opt = [&](CLI::App* c) { c->add_option("--formula,-f", o.formula, "Formula file")->required(); };
    auto output_opt = [&](CLI::App* c) { c->add_option("-o,--output", o.output, "Output file (default: stdout)"); };

    auto* ct = app.add_subcommand("check-trace", "Check a HyperLTL sentence on a trace set");
    formula_opt(ct);
    ct->add_option("--traces,-t", o.traces, "Trace set file")->required();
    ct->add_flag("--naive", o.naive, "Enumerate full assignments without miniscoping");

    auto* cs = app.add_subcommand("check-sys", "Check a HyperCTL* formula on a Kripke structure (bounded paths)");
    formula_opt(cs);
    cs->add_option("--system,-s", o.system, "Kripke structure file")->required();
    cs->add_option("--stem-bound", o.stem_bound, "Maximal path stem length")->check(CLI::PositiveNumber);
    cs->add_option("--loop-bound", o.loop_bound, "Maximal path loop length")->check(CLI::PositiveNumber);
    cs->add_option("--engine", o.engine, "direct, game, or both")->check(CLI::IsMember({"direct", "game", "both"}));
    cs->add_option("--game-dump", o.game_dump, "Write the game graph to this file");

    auto* se = app.add_subcommand("sat-enum", "Search for a finite lasso model of a HyperLTL sentence");
    formula_opt(se);
    output_opt(se);
    se->add_option("--budget-traces", o.budget_traces, "Maximal number of traces")->check(CLI::PositiveNumber);
    se->add_option("--budget-stem", o.budget_stem, "Maximal stem length")->check(CLI::PositiveNumber);
    se->add_option("--budget-loop", o.budget_loop, "Maximal loop length")->check(CLI::PositiveNumber);
    se->add_option("--time-limit", o.time_limit_ms, "Wall-clock limit in milliseconds");
    se->add_option("--jobs,-j", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* cl = app.add_subcommand("classify", "Print the quantifier alternation class");
    formula_opt(cl);
    auto* pn = app.add_subcommand("pnf", "Convert to prenex normal form");
    formula_opt(pn);
    output_opt(pn);

    auto* gen = app.add_subcommand("gen", "Generate constructions");
    gen->require_subcommand(1);
    auto* g_tiling = gen->add_subcommand("tiling", "Recurring tiling sentence");
    auto* g_diag = gen->add_subcommand("tiling-diagonal", "Lower-triangle tiling sentence");
    for (auto* c : {g_tiling, g_diag}) {
        c->add_option("--tiles", o.tiles, "Tile set file")->required();
        output_opt(c);
    }
    auto* g_phiset = gen->add_subcommand("phiset", "Set-encoding structure formula");
    auto* g_phiop = gen->add_subcommand("phiop", "Arithmetic operation sentence");
    output_opt(g_phiset);
    output_opt(g_phiop);
    auto* g_phib = gen->add_subcommand("phib", "Boundedness sentence");
    auto* g_fin = gen->add_subcommand("finmodel", "Finite-model selector sentence");
    for (auto* c : {g_phib, g_fin}) {
        c->add_option("--props", o.props, "Comma-separated propositions")->required();
        output_opt(c);
    }
    auto* g_kset = gen->add_subcommand("kset", "Finite fragment of the set-encoding structure");
    g_kset->add_option("--depth", o.depth, "Tree depth")->check(CLI::PositiveNumber);
    g_kset->add_option("--set", o.sets, "Comma-separated members of one set (repeatable; empty for the empty set)");
    output_opt(g_kset);
    auto* g_split = gen->add_subcommand("combine-split", "Combine sentences for the two halves of a split set");
    g_split->add_option("--left", o.left, "Left sentence file")->required();
    g_split->add_option("--right", o.right, "Right sentence file")->required();
    output_opt(g_split);
    auto* g_arith = gen->add_subcommand("arith", "Translate a third-order arithmetic sentence");
    g_arith->add_option("--input", o.input, "Arithmetic sentence file")->required();
    output_opt(g_arith);

    auto* fo = app.add_subcommand("fo", "First-order logic over finite words");
    fo->require_subcommand(1);
    auto* fo_eval = fo->add_subcommand("eval", "Evaluate a first-order sentence on a word");
    fo_eval->add_option("--formula,-f", o.formula, "Formula file")->required();
    fo_eval->add_option("--word,-w", o.word, "Word file")->required();
    auto* fo_enc = fo->add_subcommand("encode", "Encode a word as a trace set");
    fo_enc->add_option("--word,-w", o.word, "Word file")->required();
    auto* stretch = fo_enc->add_option("--stretch", o.stretch, "Uniform factor N: marker n at N(n+1)")
                        ->check(CLI::PositiveNumber);
    auto* table = fo_enc->add_option("--table", o.table, "Explicit comma-separated marker times");
    stretch->excludes(table);
    output_opt(fo_enc);
    auto* fo_tr = fo->add_subcommand("translate", "Translate a prenex first-order sentence to HyperLTL");
    fo_tr->add_option("--formula,-f", o.formula, "Formula file")->required();
    output_opt(fo_tr);
    auto* fo_simpl = fo->add_subcommand("simpl", "Simplify a quantifier-free formula over marker encodings");
    fo_simpl->add_option("--formula,-f", o.formula, "Formula file")->required();
    output_opt(fo_simpl);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto produce = [&](const std::string& text) {
        emit(text, o.output, out);
        return 0;
    };

    try {
        if (*ct) return check_trace(o, out);
        if (*cs) return check_sys(o, out);
        if (*se) return sat(o, out);
        if (*cl) return classify_cmd(o, out);
        if (*pn) return pnf(o, out);
        if (*g_tiling) return produce(to_string(gen_tiling(parse_tiles(read_file(o.tiles)))) + "\n");
        if (*g_diag) return produce(to_string(gen_tiling_diagonal(parse_tiles(read_file(o.tiles)))) + "\n");
        if (*g_phiset) return produce(to_string(gen_phiset()) + "\n");
        if (*g_phiop) return produce(to_string(gen_phiop()) + "\n");
        if (*g_phib) return produce(to_string(gen_phib(split_list(o.props))) + "\n");
        if (*g_fin) return produce(to_string(gen_finite_model_selector(split_list(o.props))) + "\n");
        if (*g_kset) {
            std::vector<std::set<std::size_t>> sets;
            for (const auto& s : o.sets) {
                const auto nums = split_numbers(s);
                sets.emplace_back(nums.begin(), nums.end());
            }
            emit(format_kripke(gen_kset_truncation(o.depth, sets)), o.output, out);
            return 0;
        }
        if (*g_split) {
            emit(to_string(combine_split(read_sentence(o.left), read_sentence(o.right))) + "\n", o.output, out);
            return 0;
        }
        if (*g_arith) {
            emit(to_string(arith_to_hyperctl(parse_arith(read_file(o.input)))) + "\n", o.output, out);
            return 0;
        }
        if (*fo_eval) {
            const bool r = eval_fo(read_word(o.word), parse_fo(strip_comments(read_file(o.formula))));
            out << "RESULT: " << (r ? "true" : "false") << "\n";
            return r ? 0 : 1;
        }
        if (*fo_enc) {
            const StretchSpec f = o.table.empty() ? StretchSpec::uniform(o.stretch.value_or(1))
                                                  : StretchSpec::table(split_numbers(o.table));
            emit(format_trace_set(encode_word(read_word(o.word), f)), o.output, out);
            return 0;
        }
        if (*fo_tr) {
            emit(to_string(fo_to_hyperltl(parse_fo(strip_comments(read_file(o.formula))))) + "\n", o.output, out);
            return 0;
        }
        if (*fo_simpl) {
            emit(to_string(simplify_qf(read_formula(o.formula))) + "\n", o.output, out);
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 2;
}

}  // namespace hyperlogic::cli
