#include "cli.hpp"

#include "fragile/constructions.hpp"
#include "fragile/decomposition.hpp"
#include "fragile/engine.hpp"
#include "fragile/error.hpp"
#include "fragile/extremal.hpp"
#include "fragile/io.hpp"
#include "fragile/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fragile::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_error = 2;

struct Input {
    std::string source = "-";
    std::string format;
};

Format pick_format(const std::string& name, const std::string& source) {
    if (!name.empty()) {
        auto f = format_from_name(name);
        if (!f) throw Error(Errc::parse_error, "unknown format '" + name + "'");
        return *f;
    }
    auto dot = source.rfind('.');
    if (dot != std::string::npos) {
        if (auto f = format_from_name(source.substr(dot + 1))) return *f;
    }
    return Format::edgelist;
}

Graph load(const Input& input, std::istream& in) {
    if (input.source.size() > 1 && input.source[0] == '@') return named(input.source.substr(1));
    std::string text;
    if (input.source == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream file(input.source, std::ios::binary);
        if (!file) throw Error(Errc::parse_error, "cannot open '" + input.source + "'");
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return parse(text, pick_format(input.format, input.source));
}

std::string join(const std::vector<Vertex>& vs) {
    std::string s;
    for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

std::vector<int> parse_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw Error(Errc::parse_error, "bad list item '" + item + "'");
        out.push_back(value);
    }
    return out;
}

json colouring_json(const Colouring& c) {
    json colours = json::object();
    for (Vertex v = 0; v < c.size(); ++v) colours[std::to_string(v)] = c[v];
    return colours;
}

void print_colouring(std::ostream& out, const Colouring& c, const std::string& header) {
    out << "# " << header << '\n' << emit_colouring(c);
}

double millis_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// verify subcommand rows
struct Row {
    std::string item;
    std::string expected;
    std::string actual;
    bool pass;
};

int emit_rows(std::ostream& out, const std::string& check, const std::vector<Row>& rows, bool as_json,
              std::uint64_t seed) {
    bool all = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
    if (as_json) {
        json doc;
        doc["check"] = check;
        doc["seed"] = seed;
        doc["rows"] = json::array();
        for (const auto& r : rows)
            doc["rows"].push_back({{"item", r.item}, {"expected", r.expected}, {"actual", r.actual},
                                   {"status", r.pass ? "PASS" : "FAIL"}});
        doc["status"] = all ? "PASS" : "FAIL";
        out << doc.dump(2) << '\n';
    } else {
        out << "# verify " << check << " seed=" << seed << '\n';
        std::size_t w = 4;
        for (const auto& r : rows) w = std::max(w, r.item.size());
        out << std::left << std::setw(static_cast<int>(w)) << "item" << "  " << std::setw(22) << "expected"
            << std::setw(22) << "actual" << "status\n";
        for (const auto& r : rows)
            out << std::left << std::setw(static_cast<int>(w)) << r.item << "  " << std::setw(22) << r.expected
                << std::setw(22) << r.actual << (r.pass ? "PASS" : "FAIL") << '\n';
        out << (all ? "all PASS" : "FAILURES") << " (" << rows.size() << " rows)\n";
    }
    return all ? exit_ok : exit_negative;
}

std::vector<std::pair<std::string, Graph>> small_corpus(int count, int max_n, std::uint64_t seed) {
    std::vector<std::pair<std::string, Graph>> corpus;
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        int n = rng.between(2, max_n);
        double p = 0.2 + 0.6 * rng.unit();
        std::uint64_t s = rng.next();
        corpus.emplace_back("random" + std::to_string(i) + "(n=" + std::to_string(n) + ")", random_graph(n, p, s));
    }
    return corpus;
}

std::vector<Row> verify_poljak(int count, std::uint64_t seed) {
    auto corpus = small_corpus(count, 8, seed);
    for (const char* name : {"k3", "k4", "k5", "c5", "petersen"}) corpus.emplace_back(name, named(name));
    auto opts = OracleOptions::uncapped(200'000'000);
    std::vector<Row> rows;
    for (const auto& [name, g] : corpus) {
        int expected = independence_number(g, opts) + static_cast<int>(g.size());
        int actual = independence_number(double_subdivide(g).graph, opts);
        rows.push_back({name, "alpha=" + std::to_string(expected), "alpha=" + std::to_string(actual),
                        expected == actual});
    }
    return rows;
}

std::vector<Row> verify_gpp(int count, std::uint64_t seed) {
    auto corpus = small_corpus(count, 6, seed);
    for (const char* name : {"k3", "k4", "c5", "diamond"}) corpus.emplace_back(name, named(name));
    auto opts = OracleOptions::uncapped(500'000'000);
    std::vector<Row> rows;
    for (const auto& [name, g] : corpus) {
        Graph gpp = build_g_double_prime(g).graph;
        bool base = exact_colour(g, 3, {}, opts).has_value();
        bool lifted = exact_colour(gpp, 3, {}, opts).has_value();
        bool frag = is_fragile(gpp).fragile;
        auto show = [](bool col, bool fr) {
            return std::string(col ? "3col" : "not3col") + (fr ? " fragile" : " notfragile");
        };
        rows.push_back({name, show(base, true), show(lifted, frag), base == lifted && frag});
    }
    return rows;
}

std::vector<Row> verify_gadget() {
    std::vector<Row> rows;
    auto gadget = neq_gadget();
    const Graph& g = gadget.graph;
    auto opts = OracleOptions::uncapped(500'000'000);
    auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };

    bool triangle = false;
    for (auto [u, v] : g.edges())
        for (Vertex w : g.neighbours(u))
            if (w != v && g.adjacent(w, v)) triangle = true;
    rows.push_back({"gadget triangle-free", "yes", yes(!triangle), !triangle});
    int d = degeneracy(g).value;
    rows.push_back({"gadget degeneracy", "2", std::to_string(d), d == 2});
    int chi = chromatic_number(g, opts);
    rows.push_back({"gadget chromatic number", "3", std::to_string(chi), chi == 3});
    std::size_t total = 0, equal = 0;
    for_each_k_colouring(g, 3, [&](const Colouring& c) {
        ++total;
        if (c[gadget.terminal_a] == c[gadget.terminal_b]) ++equal;
        return true;
    }, opts);
    rows.push_back({"gadget 3-colourings with c(a)=c(b)", "0 of >0",
                    std::to_string(equal) + " of " + std::to_string(total), equal == 0 && total > 0});

    for (const char* base : {"k4", "c5"}) {
        Graph r = replace_edges_with_gadget(named(base)).graph;
        int want = std::string(base) == "k4" ? 4 : 3;
        int got = chromatic_number(r, opts);
        bool frag = is_fragile(r).fragile;
        rows.push_back({std::string("replace(") + base + ") chi, fragile", std::to_string(want) + " yes",
                        std::to_string(got) + " " + yes(frag), got == want && frag});
    }
    return rows;
}

std::vector<Row> verify_bounds(int count, std::uint64_t seed) {
    std::vector<std::pair<std::string, Graph>> corpus;
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        int n = rng.between(4, 60);
        std::uint64_t s = rng.next();
        corpus.emplace_back("random_fragile(" + std::to_string(n) + ")", random_fragile(n, s));
    }
    for (int k : {1, 2, 5, 10, 50}) corpus.emplace_back("tight" + std::to_string(k), tight_chain(k));
    corpus.emplace_back("double_subdivide(k5)", double_subdivide(named("k5")).graph);
    corpus.emplace_back("cubic_pair(petersen)", cubic_girth_pair(named("petersen"), {0, 1}));
    std::vector<Row> rows;
    for (const auto& [name, g] : corpus) {
        if (!is_fragile(g).fragile) {
            rows.push_back({name, "fragile", "not fragile", false});
            continue;
        }
        auto r = check_edge_bound(g);
        int used = greedy_colour(g).colours_used();
        bool g4 = r.girth4_applies();
        int limit = g4 ? 4 : 5;
        std::string expected = "e<=" + format_half(g4 ? r.twice_bound_girth4 : r.twice_bound_general) +
                               " greedy<=" + std::to_string(limit);
        std::string actual = "e=" + std::to_string(r.e) + " greedy=" + std::to_string(used);
        rows.push_back({name, expected, actual, !r.general_violated() && !r.girth4_violated() && used <= limit});
    }
    return rows;
}

struct Options {
    Input input;
    bool as_json = false;
    int m = 4;
    std::string mode = "constructive";
    bool verify = false;
    bool no_memo = false;
    std::string cond;
    std::string verts;
    std::string gen_name;
    int gen_n = 30;
    int gen_k = 3;
    std::string gen_of = "k4";
    std::vector<int> gen_edge{0, 1};
    bool gen_search = false;
    std::uint64_t attempts = 2000;
    std::string out_format = "edgelist";
    std::uint64_t seed = 1;
    std::string verify_what;
    int corpus = 0;
    std::string sizes = "10,100,500";
    std::uint64_t budget = 50'000'000;
};

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
    Graph g = load(o.input, in);
    auto report = is_fragile(g);
    if (o.as_json) {
        json doc{{"fragile", report.fragile}, {"vertices", g.order()}, {"edges", g.size()}};
        doc["witness"] = report.witness ? json(*report.witness) : json(nullptr);
        out << doc.dump(2) << '\n';
    } else {
        out << "fragile: " << (report.fragile ? "yes" : "no") << '\n';
        out << "vertices: " << g.order() << "\nedges: " << g.size() << '\n';
        if (report.witness) out << "witness: " << join(*report.witness) << '\n';
    }
    return report.fragile ? exit_ok : exit_negative;
}

int cmd_colour(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    Graph g = load(o.input, in);
    Colouring c;
    EngineConfig cfg;
    cfg.memo_enabled = !o.no_memo;
    cfg.oracle_budget = o.budget;
    if (o.mode == "constructive") {
        c = colour(g, o.m, cfg);
    } else if (o.mode == "greedy") {
        c = greedy_colour(g);
        if (c.colours_used() > o.m) {
            err << "greedy colouring needs " << c.colours_used() << " colours, more than m = " << o.m << '\n';
            return exit_negative;
        }
        c.palette = o.m;
    } else if (o.mode == "exact") {
        auto opts = OracleOptions::uncapped(o.budget);
        auto found = exact_colour(g, o.m, {}, opts);
        if (!found) {
            err << "graph is not " << o.m << "-colourable\n";
            return exit_negative;
        }
        c = *found;
    } else {
        throw Error(Errc::parse_error, "unknown mode '" + o.mode + "'");
    }
    if (o.verify && !is_proper(g, c)) {
        err << "internal error: colouring failed verification\n";
        return exit_error;
    }
    std::string header = "m=" + std::to_string(o.m) + " mode=" + o.mode + " colours=" +
                         std::to_string(c.colours_used()) + (o.verify ? " verified" : "");
    if (o.as_json) {
        json doc{{"m", o.m}, {"mode", o.mode}, {"colours", c.colours_used()}, {"verified", o.verify}};
        doc["colouring"] = colouring_json(c);
        out << doc.dump(2) << '\n';
    } else {
        print_colouring(out, c, header);
    }
    return exit_ok;
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out) {
    Graph g = load(o.input, in);
    if (g.order() < 2) {
        out << (o.as_json ? "{\n  \"nodes\": []\n}\n" : "");
        return exit_ok;
    }
    DecompTree tree = decompose(g);
    if (!o.as_json) {
        out << tree.serialize();
        return exit_ok;
    }
    json nodes = json::array();
    for (NodeId id = tree.size() - 1; id >= 0; --id) {
        const auto& nd = tree.node(id);
        json node{{"id", id}};
        if (nd.is_leaf()) {
            node["kind"] = "leaf";
            node["vertices"] = nd.root_ids;
        } else {
            std::vector<Vertex> cut;
            for (Vertex v : nd.cutset) cut.push_back(nd.root_ids[v]);
            node["kind"] = "cut";
            node["cutset"] = cut;
            node["children"] = {nd.children[0], nd.children[1]};
        }
        nodes.push_back(node);
    }
    out << json{{"nodes", nodes}}.dump(2) << '\n';
    return exit_ok;
}

int cmd_condition(const Options& o, std::istream& in, std::ostream& out) {
    Graph g = load(o.input, in);
    auto kind = condition_from_name(o.cond);
    if (!kind) throw Error(Errc::condition_invalid, "unknown condition '" + o.cond + "'");
    auto verts = parse_list(o.verts);
    Condition cond = make_condition(*kind, verts);
    validate_condition(g, cond);
    EngineConfig cfg;
    cfg.m = o.m;
    cfg.memo_enabled = !o.no_memo;
    cfg.oracle_budget = o.budget;
    DecompTree tree = decompose(g);
    ConditionEngine engine(tree, cfg);
    Colouring c = engine.satisfy(cond);
    bool ok = check_condition(g, cond, c);
    if (o.as_json) {
        json doc{{"condition", condition_name(cond.kind)}, {"vertices", verts}, {"m", o.m}, {"satisfied", ok},
                 {"queries", engine.stats().queries}, {"memo_hits", engine.stats().memo_hits}};
        doc["colouring"] = colouring_json(c);
        out << doc.dump(2) << '\n';
    } else {
        print_colouring(out, c, std::string(condition_name(cond.kind)) + " " + o.verts + " m=" + std::to_string(o.m) +
                                    (ok ? " satisfied" : " VIOLATED"));
    }
    return ok ? exit_ok : exit_error;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
    Graph g;
    bool randomized = false;
    const std::string& name = o.gen_name;
    if (name == "random") {
        g = random_fragile(o.gen_n, o.seed);
        randomized = true;
    } else if (name == "tight") {
        g = tight_chain(o.gen_k);
    } else if (name == "subdivide") {
        g = double_subdivide(named(o.gen_of)).graph;
    } else if (name == "gpp") {
        g = build_g_double_prime(named(o.gen_of)).graph;
    } else if (name == "replace") {
        g = replace_edges_with_gadget(named(o.gen_of)).graph;
    } else if (name == "cubic-pair") {
        if (o.gen_edge.size() != 2) throw Error(Errc::parse_error, "--edge takes two vertices");
        g = cubic_girth_pair(named(o.gen_of), {o.gen_edge[0], o.gen_edge[1]});
    } else if (name == "mindeg4") {
        if (!o.gen_search) {
            err << "mindeg4 has no stored witness; pass --search to look for one\n";
            return exit_error;
        }
        auto result = search_min_degree4(o.seed, o.attempts);
        if (!result.found) {
            err << "no fragile graph of minimum degree 4 found in " << result.attempts << " attempts (seed "
                << o.seed << ")\n";
            return exit_negative;
        }
        g = *result.found;
        randomized = true;
    } else {
        g = named(name);
    }
    Format f = pick_format(o.out_format, "");
    if (randomized) {
        if (f == Format::edgelist) out << "# seed " << o.seed << '\n';
        else if (f == Format::dimacs) out << "c seed " << o.seed << '\n';
        else err << "seed " << o.seed << '\n';
    }
    out << emit(g, f);
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const std::string& what = o.verify_what;
    if (what == "poljak") return emit_rows(out, what, verify_poljak(o.corpus ? o.corpus : 100, o.seed), o.as_json, o.seed);
    if (what == "gpp") return emit_rows(out, what, verify_gpp(o.corpus ? o.corpus : 100, o.seed), o.as_json, o.seed);
    if (what == "gadget") return emit_rows(out, what, verify_gadget(), o.as_json, o.seed);
    if (what == "bounds") return emit_rows(out, what, verify_bounds(o.corpus ? o.corpus : 100, o.seed), o.as_json, o.seed);
    throw Error(Errc::parse_error, "unknown verify target '" + what + "'");
}

int cmd_bench(const Options& o, std::ostream& out) {
    json rows = json::array();
    if (!o.as_json) {
        out << "# bench seed=" << o.seed << '\n';
        out << std::left << std::setw(8) << "kind" << std::setw(8) << "n" << std::setw(8) << "e" << std::setw(14)
            << "decompose_ms" << std::setw(12) << "colour_ms" << std::setw(10) << "queries" << std::setw(10)
            << "memo_hits" << "proper\n";
    }
    for (int size : parse_list(o.sizes)) {
        for (const char* kind : {"chain", "random"}) {
            Graph g = std::string(kind) == "chain" ? tight_chain(std::max(1, (size - 2) / 2))
                                                   : random_fragile(std::max(1, size), o.seed);
            auto start = std::chrono::steady_clock::now();
            DecompTree tree = decompose(g);
            double t_decomp = millis_since(start);
            start = std::chrono::steady_clock::now();
            EngineConfig cfg;
            cfg.memo_enabled = !o.no_memo;
            Colouring c;
            EngineStats stats;
            if (g.order() >= 2) {
                ConditionEngine engine(tree, cfg);
                c = engine.satisfy(Condition::c2(0, 1));
                stats = engine.stats();
            } else {
                c = colour(g, 4);
            }
            double t_colour = millis_since(start);
            bool proper = is_proper(g, c);
            if (o.as_json) {
                rows.push_back({{"kind", kind}, {"n", g.order()}, {"e", g.size()}, {"decompose_ms", t_decomp},
                                {"colour_ms", t_colour}, {"queries", stats.queries},
                                {"memo_hits", stats.memo_hits}, {"proper", proper}});
            } else {
                std::ostringstream td, tc;
                td << std::fixed << std::setprecision(2) << t_decomp;
                tc << std::fixed << std::setprecision(2) << t_colour;
                out << std::left << std::setw(8) << kind << std::setw(8) << g.order() << std::setw(8) << g.size()
                    << std::setw(14) << td.str() << std::setw(12) << tc.str() << std::setw(10) << stats.queries
                    << std::setw(10) << stats.memo_hits << (proper ? "yes" : "NO") << '\n';
            }
        }
    }
    if (o.as_json) out << json{{"seed", o.seed}, {"rows", rows}}.dump(2) << '\n';
    return exit_ok;
}

int cmd_stats(const Options& o, std::istream& in, std::ostream& out) {
    Graph g = load(o.input, in);
    auto r = check_edge_bound(g);
    bool frag = is_fragile(g).fragile;
    std::string girth = r.girth ? std::to_string(*r.girth) : "inf";
    if (o.as_json) {
        json doc{{"n", r.n},
                 {"e", r.e},
                 {"bound_general", format_half(r.twice_bound_general)},
                 {"general_tight", r.general_tight()},
                 {"general_violated", r.general_violated()},
                 {"bound_girth4", format_half(r.twice_bound_girth4)},
                 {"girth4_tight", r.girth4_tight()},
                 {"girth4_violated", r.girth4_violated()},
                 {"girth", r.girth ? json(*r.girth) : json("inf")},
                 {"degeneracy", r.degeneracy},
                 {"fragile", frag},
                 {"peel_order", r.peel_order}};
        out << doc.dump(2) << '\n';
        return exit_ok;
    }
    auto line = [&](const std::string& key, const std::string& value) {
        out << std::left << std::setw(18) << key << value << '\n';
    };
    auto flags = [](bool applies, bool tight, bool violated) {
        if (!applies) return std::string(" (n/a)");
        return std::string(violated ? " VIOLATED" : tight ? " tight" : " ok");
    };
    line("n", std::to_string(r.n));
    line("e", std::to_string(r.e));
    line("bound_general", format_half(r.twice_bound_general) +
                              flags(r.general_applies(), r.general_tight(), r.general_violated()));
    line("bound_girth4", format_half(r.twice_bound_girth4) +
                             flags(r.girth4_applies(), r.girth4_tight(), r.girth4_violated()));
    line("girth", girth);
    line("degeneracy", std::to_string(r.degeneracy));
    line("fragile", frag ? "yes" : "no");
    line("peel_order", join(r.peel_order));
    return exit_ok;
}

void add_input(CLI::App* sub, Options& o) {
    sub->add_option("graph", o.input.source, "graph file, - for stdin, or @name")->capture_default_str();
    sub->add_option("--format", o.input.format, "edgelist | graph6 | dimacs (default: by extension, else edgelist)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fragile graph toolkit: fragility checks, constructive colourings, constructions"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "decide fragility and print a 3-connected witness");
    add_input(check, o);
    check->add_flag("--json", o.as_json);

    auto* col = app.add_subcommand("colour", "m-colour a graph");
    add_input(col, o);
    col->add_option("--m", o.m, "palette size")->capture_default_str();
    col->add_option("--mode", o.mode, "constructive | greedy | exact")->capture_default_str();
    col->add_flag("--verify", o.verify, "check the colouring before printing it");
    col->add_flag("--no-memo", o.no_memo, "disable the engine memo table");
    col->add_option("--budget", o.budget, "oracle search nodes per 3-connected leaf")->capture_default_str();
    col->add_flag("--json", o.as_json);

    auto* dec = app.add_subcommand("decompose", "print the decomposition tree");
    add_input(dec, o);
    dec->add_flag("--json", o.as_json);

    auto* cond = app.add_subcommand("condition", "run one precolouring query");
    add_input(cond, o);
    cond->add_option("--cond", o.cond, "c1 | c2 | c3 | c4")->required();
    cond->add_option("--verts", o.verts, "comma separated vertices, e.g. 0,3 or 2,0,5")->required();
    cond->add_option("--m", o.m, "palette size")->capture_default_str();
    cond->add_flag("--no-memo", o.no_memo);
    cond->add_option("--budget", o.budget)->capture_default_str();
    cond->add_flag("--json", o.as_json);

    auto* gen = app.add_subcommand("gen", "emit a constructed graph");
    gen->add_option("name", o.gen_name,
                    "random | tight | subdivide | gpp | replace | cubic-pair | mindeg4 | any built-in name")
        ->required();
    gen->add_option("--n", o.gen_n, "vertex count for random")->capture_default_str();
    gen->add_option("--k", o.gen_k, "pieces for tight")->capture_default_str();
    gen->add_option("--of", o.gen_of, "base graph for subdivide, gpp, replace, cubic-pair")->capture_default_str();
    gen->add_option("--edge", o.gen_edge, "edge removed by cubic-pair")->expected(2);
    gen->add_flag("--search", o.gen_search, "search for a mindeg4 witness");
    gen->add_option("--attempts", o.attempts, "search attempts for mindeg4")->capture_default_str();
    gen->add_option("--seed", o.seed)->capture_default_str();
    gen->add_option("--format", o.out_format, "output format")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "oracle cross-checks");
    ver->add_option("what", o.verify_what, "poljak | gpp | gadget | bounds")->required();
    ver->add_option("--corpus", o.corpus, "number of random corpus graphs (default 100)");
    ver->add_option("--seed", o.seed)->capture_default_str();
    ver->add_flag("--json", o.as_json);

    auto* bench = app.add_subcommand("bench", "time decomposition and colouring");
    bench->add_option("--sizes", o.sizes, "comma separated vertex counts")->capture_default_str();
    bench->add_option("--seed", o.seed)->capture_default_str();
    bench->add_flag("--no-memo", o.no_memo);
    bench->add_flag("--json", o.as_json);

    auto* stats = app.add_subcommand("stats", "edge bounds, girth and degeneracy");
    add_input(stats, o);
    stats->add_flag("--json", o.as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_error;
    }

    try {
        if (check->parsed()) return cmd_check(o, in, out);
        if (col->parsed()) return cmd_colour(o, in, out, err);
        if (dec->parsed()) return cmd_decompose(o, in, out);
        if (cond->parsed()) return cmd_condition(o, in, out);
        if (gen->parsed()) return cmd_gen(o, out, err);
        if (ver->parsed()) return cmd_verify(o, out);
        if (bench->parsed()) return cmd_bench(o, out);
        if (stats->parsed()) return cmd_stats(o, in, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        bool negative = e.code() == Errc::not_m_fragile || e.code() == Errc::budget_exceeded;
        return negative ? exit_negative : exit_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

}  // namespace fragile::cli
