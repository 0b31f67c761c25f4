#include <doctest.h>

#include "cli.hpp"
#include "fragile/constructions.hpp"
#include "fragile/decomposition.hpp"
#include "fragile/engine.hpp"
#include "fragile/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fragile;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "fragile");
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

Colouring read_colouring(const std::string& text, int m) {
    std::istringstream in(text);
    std::string line;
    std::vector<int> colours;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        int v = 0, c = 0;
        row >> v >> c;
        if (static_cast<int>(colours.size()) <= v) colours.resize(static_cast<std::size_t>(v) + 1, 0);
        colours[static_cast<std::size_t>(v)] = c;
    }
    return Colouring(m, colours);
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("fragile_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("check on K4 reports the witness") {
    auto r = invoke({"check", "@k4"});
    CHECK(r.code == 1);
    CHECK(r.out.find("witness: 0 1 2 3") != std::string::npos);
    CHECK(r.out.find("fragile: no") != std::string::npos);
}

TEST_CASE("check on a fragile graph from stdin") {
    auto r = invoke({"check"}, "0 1\n1 2\n2 3\n3 0\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("fragile: yes") != std::string::npos);
    auto j = invoke({"check", "-", "--json"}, emit_graph6(petersen_graph()));
    CHECK(j.code == 2);
    auto g6 = invoke({"check", "-", "--format", "graph6", "--json"}, emit_graph6(petersen_graph()));
    CHECK(g6.code == 1);
    auto doc = nlohmann::json::parse(g6.out);
    CHECK(doc["fragile"] == false);
    CHECK(doc["witness"].size() == 10);
}

TEST_CASE("colour --verify on tight_chain(10)") {
    auto r = invoke({"colour", "@tight10", "--m", "4", "--verify"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# m=4", 0) == 0);
    Colouring c = read_colouring(r.out, 4);
    CHECK(is_proper(tight_chain(10), c));
}

TEST_CASE("colour modes") {
    Graph g = random_fragile(25, 4);
    std::string text = emit_edgelist(g);
    for (const char* mode : {"constructive", "greedy", "exact"}) {
        auto r = invoke({"colour", "-", "--mode", mode, "--verify", "--m", "5"}, text);
        CAPTURE(mode);
        CHECK(r.code == 0);
        CHECK(is_proper(g, read_colouring(r.out, 5)));
    }
    auto memo_off = invoke({"colour", "-", "--no-memo"}, text);
    CHECK(memo_off.code == 0);
    CHECK(memo_off.out == invoke({"colour", "-"}, text).out);
    auto j = invoke({"colour", "@c5", "--json"});
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["m"] == 4);
    CHECK(doc["colouring"].size() == 5);
    CHECK(invoke({"colour", "@c5", "--mode", "bogus"}).code == 2);
}

TEST_CASE("colour failures exit 1") {
    auto r = invoke({"colour", "@k4"});
    CHECK(r.code == 1);
    CHECK(r.err.find("NotMFragile") != std::string::npos);
    CHECK(invoke({"colour", "@k5", "--mode", "exact", "--m", "4"}).code == 1);
    CHECK(invoke({"colour", "@k5", "--mode", "greedy", "--m", "4"}).code == 1);
}

TEST_CASE("decompose prints the tree") {
    auto r = invoke({"decompose", "@c5"});
    CHECK(r.code == 0);
    CHECK(r.out == decompose(cycle_graph(5)).serialize());
    auto j = invoke({"decompose", "@diamond", "--json"});
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["nodes"].size() == 3);
    CHECK(doc["nodes"][2]["kind"] == "cut");
}

TEST_CASE("condition runs a single query") {
    auto r = invoke({"condition", "@c5", "--cond", "c1", "--verts", "0,2"});
    CHECK(r.code == 0);
    Colouring c = read_colouring(r.out, 4);
    CHECK(check_condition(cycle_graph(5), Condition::c1(0, 2), c));
    auto c4 = invoke({"condition", "@diamond", "--cond", "c4", "--verts", "0,1,2", "--json"});
    CHECK(c4.code == 0);
    CHECK(nlohmann::json::parse(c4.out)["satisfied"] == true);
    CHECK(invoke({"condition", "@c5", "--cond", "c1", "--verts", "0,1"}).code == 2);
    CHECK(invoke({"condition", "@c5", "--cond", "c7", "--verts", "0,1"}).code == 2);
    CHECK(invoke({"condition", "@c5", "--cond", "c3", "--verts", "0,x,1"}).code == 2);
}

TEST_CASE("gen writes parseable graphs and echoes the seed") {
    auto r = invoke({"gen", "random", "--n", "20", "--seed", "9"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# seed 9\n", 0) == 0);
    CHECK(parse_edgelist(r.out) == random_fragile(20, 9));

    auto g6 = invoke({"gen", "random", "--n", "20", "--seed", "9", "--format", "graph6"});
    CHECK(parse_graph6(g6.out) == random_fragile(20, 9));
    CHECK(g6.err.find("seed 9") != std::string::npos);

    auto dimacs = invoke({"gen", "tight", "--k", "4", "--format", "dimacs"});
    CHECK(parse_dimacs(dimacs.out) == tight_chain(4));

    CHECK(parse_edgelist(invoke({"gen", "subdivide", "--of", "k4"}).out) == double_subdivide(complete_graph(4)).graph);
    CHECK(parse_edgelist(invoke({"gen", "gpp", "--of", "k3"}).out) == build_g_double_prime(complete_graph(3)).graph);
    CHECK(parse_edgelist(invoke({"gen", "replace", "--of", "c5"}).out) ==
          replace_edges_with_gadget(cycle_graph(5)).graph);
    CHECK(parse_edgelist(invoke({"gen", "cubic-pair", "--of", "petersen", "--edge", "0", "5"}).out) ==
          cubic_girth_pair(petersen_graph(), {0, 5}));
    CHECK(parse_edgelist(invoke({"gen", "petersen"}).out) == petersen_graph());
    CHECK(invoke({"gen", "nonsense"}).code == 2);
    CHECK(invoke({"gen", "mindeg4"}).code == 2);
    int search = invoke({"gen", "mindeg4", "--search", "--attempts", "20"}).code;
    CHECK((search == 0 || search == 1));
}

TEST_CASE("verify subcommands") {
    auto poljak = invoke({"verify", "poljak"});
    CHECK(poljak.code == 0);
    CHECK(poljak.out.find("FAIL") == std::string::npos);
    CHECK(poljak.out.find("all PASS (105 rows)") != std::string::npos);
    CHECK(invoke({"verify", "gpp", "--corpus", "20"}).code == 0);
    CHECK(invoke({"verify", "gadget"}).code == 0);
    auto bounds = invoke({"verify", "bounds", "--corpus", "10", "--json"});
    CHECK(bounds.code == 0);
    CHECK(nlohmann::json::parse(bounds.out)["status"] == "PASS");
    CHECK(invoke({"verify", "everything"}).code == 2);
}

TEST_CASE("bench and stats") {
    auto b = invoke({"bench", "--sizes", "10,30"});
    CHECK(b.code == 0);
    CHECK(b.out.find("NO") == std::string::npos);
    auto bj = invoke({"bench", "--sizes", "12", "--json"});
    CHECK(nlohmann::json::parse(bj.out)["rows"].size() == 2);

    auto s = invoke({"stats", "@diamond"});
    CHECK(s.code == 0);
    CHECK(s.out.find("bound_general     5 tight") != std::string::npos);
    auto sj = nlohmann::json::parse(invoke({"stats", "@c4", "--json"}).out);
    CHECK(sj["girth4_tight"] == true);
    CHECK(sj["girth"] == 4);
    CHECK(sj["bound_girth4"] == "4");
}

TEST_CASE("files and formats") {
    std::string g6 = temp_file("p.g6", emit_graph6(petersen_graph()));
    std::string col = temp_file("p.col", emit_dimacs(cycle_graph(6)));
    CHECK(invoke({"check", g6}).code == 1);
    CHECK(invoke({"check", col}).code == 0);
    CHECK(invoke({"check", "/no/such/file"}).code == 2);
    std::filesystem::remove(g6);
    std::filesystem::remove(col);
}

TEST_CASE("usage errors and malformed input exit 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"colour", "@c5", "--m", "four"}).code == 2);
    CHECK(invoke({"colour", "@c5", "--m", "3"}).code == 2);
    auto bad = invoke({"check"}, "0 1\n1 banana\n");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(invoke({"check", "-", "--format", "graph6"}, "\x01\x02").code == 2);
    CHECK(invoke({"check", "-", "--format", "xml"}, "").code == 2);
    CHECK(invoke({"check", "@nosuchgraph"}).code == 2);
    auto help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("colour") != std::string::npos);
    CHECK(invoke({"colour", "--help"}).code == 0);
}
