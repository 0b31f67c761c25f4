#include <doctest.h>

#include "fragile/constructions.hpp"
#include "fragile/decomposition.hpp"
#include "fragile/engine.hpp"
#include "fragile/error.hpp"
#include "fragile/oracle.hpp"
#include "support.hpp"

#include <set>

using namespace fragile;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::internal_invariant;
}

// Some m-colouring meeting cond exists (exhaustive).
bool feasible(const Graph& g, int m, const Condition& cond) {
    auto opts = OracleOptions::uncapped(50'000'000);
    using CC = ColourConstraint;
    Vertex x = cond.tuple[0], y = cond.tuple[1], z = cond.tuple.size() == 3 ? cond.tuple[2] : -1;
    auto try_with = [&](std::vector<CC> cons) { return exact_colour(g, m, cons, opts).has_value(); };
    switch (cond.kind) {
        case ConditionKind::none: return try_with({});
        case ConditionKind::c1: return try_with({CC::equal(x, y)});
        case ConditionKind::c2: return try_with({CC::not_equal(x, y)});
        case ConditionKind::c3: return try_with({CC::not_equal(x, y), CC::not_equal(x, z)});
        case ConditionKind::c4:
            return try_with({CC::equal(x, y), CC::not_equal(x, z)}) ||
                   try_with({CC::equal(x, z), CC::not_equal(x, y)}) ||
                   try_with({CC::equal(y, z), CC::not_equal(x, y)});
    }
    return false;
}

std::vector<Condition> all_conditions(const Graph& g) {
    std::vector<Condition> out;
    const int n = g.order();
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            if (x == y) continue;
            if (x < y && !g.adjacent(x, y)) out.push_back(Condition::c1(x, y));
            if (x < y) out.push_back(Condition::c2(x, y));
            for (Vertex z = y + 1; z < n; ++z) {
                if (z == x) continue;
                out.push_back(Condition::c3(x, y, z));
                bool triangle = g.adjacent(x, y) && g.adjacent(y, z) && g.adjacent(x, z);
                if (x < y && !triangle) out.push_back(Condition::c4(x, y, z));
            }
        }
    return out;
}

// Glues 3-connected pieces and small fragile pieces along at most two
// vertices; every 3-connected subgraph sits inside one piece.
Graph glued(const std::vector<Graph>& pieces, std::uint64_t seed) {
    Rng rng(seed);
    GraphBuilder b(pieces.front().order());
    for (auto [u, v] : pieces.front().edges()) b.add_edge(u, v);
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        const Graph& p = pieces[i];
        int glue = static_cast<int>(rng.below(3));
        glue = std::min(glue, p.order() - 1);
        std::vector<Vertex> map(static_cast<std::size_t>(p.order()), -1);
        Vertex a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(b.order())));
        Vertex c = a;
        while (glue == 2 && c == a) c = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(b.order())));
        if (glue == 2 && b.has_edge(a, c) != p.adjacent(0, 1)) glue = 1;
        if (glue >= 1) map[0] = a;
        if (glue == 2) map[1] = c;
        for (auto& slot : map)
            if (slot < 0) slot = b.add_vertex();
        for (auto [u, v] : p.edges()) b.add_edge(map[u], map[v]);
    }
    return std::move(b).build();
}

void check_all(const Graph& g, int m, bool memo) {
    DecompTree tree = decompose(g);
    EngineConfig cfg;
    cfg.m = m;
    cfg.memo_enabled = memo;
    ConditionEngine engine(tree, cfg);
    for (const auto& cond : all_conditions(g)) {
        Colouring c = engine.satisfy(cond);
        CAPTURE(condition_name(cond.kind));
        CAPTURE(cond.tuple[0]);
        CAPTURE(cond.tuple[1]);
        REQUIRE(c.palette == m);
        REQUIRE(check_condition(g, cond, c));
    }
}

}  // namespace

TEST_CASE("condition names and arity") {
    CHECK(std::string(condition_name(ConditionKind::c3)) == "c3");
    CHECK(condition_from_name("c4") == ConditionKind::c4);
    CHECK(condition_from_name("C1") == ConditionKind::c1);
    CHECK_FALSE(condition_from_name("c9").has_value());
    CHECK(condition_arity(ConditionKind::c2) == 2);
    CHECK(condition_arity(ConditionKind::c4) == 3);
    std::vector<Vertex> two{0, 1}, three{0, 1, 2};
    CHECK(make_condition(ConditionKind::c2, two) == Condition::c2(0, 1));
    CHECK(code_of([&] { make_condition(ConditionKind::c3, two); }) == Errc::condition_invalid);
    CHECK(code_of([&] { make_condition(ConditionKind::c1, three); }) == Errc::condition_invalid);
}

TEST_CASE("validate_condition") {
    Graph k3 = complete_graph(3), p3 = path_graph(3);
    CHECK(code_of([&] { validate_condition(k3, Condition::c1(0, 1)); }) == Errc::condition_invalid);
    CHECK(code_of([&] { validate_condition(k3, Condition::c4(0, 1, 2)); }) == Errc::condition_invalid);
    CHECK(code_of([&] { validate_condition(k3, Condition::c2(0, 0)); }) == Errc::condition_invalid);
    CHECK(code_of([&] { validate_condition(k3, Condition::c2(0, 3)); }) == Errc::condition_invalid);
    CHECK(code_of([&] { validate_condition(k3, Condition::c3(0, 1, 1)); }) == Errc::condition_invalid);
    validate_condition(p3, Condition::c1(0, 2));
    validate_condition(p3, Condition::c4(0, 1, 2));
    validate_condition(k3, Condition::c3(2, 0, 1));
}

TEST_CASE("check_condition: examples") {
    Graph p3 = path_graph(3);
    CHECK(check_condition(p3, Condition::c1(0, 2), Colouring(4, {2, 1, 2})));
    CHECK_FALSE(check_condition(p3, Condition::c4(0, 1, 2), Colouring(4, {1, 2, 3})));
    CHECK(check_condition(build_graph(3, {{0, 1}}), Condition::c3(0, 1, 2), Colouring(4, {1, 2, 2})));
    CHECK(check_condition(p3, Condition::c4(0, 1, 2), Colouring(4, {1, 2, 1})));
    CHECK_FALSE(check_condition(p3, Condition::c3(0, 1, 2), Colouring(4, {2, 1, 2})));
    CHECK_FALSE(check_condition(p3, Condition::c2(0, 1), Colouring(4, {1, 1, 2})));
    CHECK(code_of([&] { check_condition(p3, Condition::c2(0, 1), Colouring(4, {1, 0, 2})); }) ==
          Errc::partial_colouring);
}

TEST_CASE("colour permutations") {
    ColourPermutation swap({3, 2, 1, 4});
    CHECK(swap(1) == 3);
    CHECK(swap(0) == 0);
    CHECK_FALSE(swap.is_identity());
    CHECK(ColourPermutation::identity(4).is_identity());
    CHECK(swap.apply(Colouring(4, {1, 0, 4})).colour == std::vector<int>{3, 0, 4});
    CHECK(code_of([] { ColourPermutation({1, 1}); }) == Errc::out_of_range);
    CHECK(colour_set({1, 3}) == (colour_bit(1) | colour_bit(3)));
    CHECK(colour_range(2, 4) == colour_set({2, 3, 4}));
}

TEST_CASE("match_pattern: examples") {
    Colouring one(4, std::vector<int>{3});
    std::vector<PatternConstraint> to1{{0, colour_set({1})}};
    auto pi = match_pattern(one, to1);
    REQUIRE(pi);
    CHECK((*pi)(3) == 1);
    CHECK((*pi)(1) == 3);
    CHECK(pi->image()[1] == 2);
    CHECK(pi->image()[3] == 4);

    Colouring tri(4, {1, 2, 3});
    std::vector<PatternConstraint> squeeze{{0, colour_set({1, 2})}, {1, colour_set({1, 2})}, {2, colour_set({1, 2})}};
    CHECK_FALSE(match_pattern(tri, squeeze));

    Colouring twin(4, {2, 2});
    std::vector<PatternConstraint> keep{{0, colour_set({2})}, {1, colour_set({2, 3})}};
    auto id = match_pattern(twin, keep);
    REQUIRE(id);
    CHECK(id->is_identity());
}

TEST_CASE("match_pattern finds a permutation whenever one exists") {
    Rng rng(5);
    std::vector<int> perm{1, 2, 3, 4};
    for (int trial = 0; trial < 300; ++trial) {
        Colouring c(4, 3);
        for (Vertex v = 0; v < 3; ++v) c[v] = rng.between(1, 4);
        std::vector<PatternConstraint> req;
        for (Vertex v = 0; v < 3; ++v)
            if (rng.below(2)) req.push_back({v, rng.below(15) + 1 << 1});
        bool exists = false;
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = true;
            for (auto& r : req)
                if (!(r.allowed >> perm[c[r.vertex] - 1] & 1)) ok = false;
            exists |= ok;
        } while (std::next_permutation(perm.begin(), perm.end()));
        auto pi = match_pattern(c, req);
        REQUIRE(pi.has_value() == exists);
        if (pi)
            for (auto& r : req) CHECK((r.allowed >> (*pi)(c[r.vertex]) & 1));
    }
}

TEST_CASE("match_predicate") {
    Colouring c(4, {4, 4, 2});
    std::vector<Vertex> rel{0, 2};
    auto pi = match_predicate(c, rel, [](std::span<const int> col) { return col[0] == 1 && col[1] == 3; });
    REQUIRE(pi);
    CHECK((*pi)(4) == 1);
    CHECK((*pi)(2) == 3);
    CHECK_FALSE(match_predicate(c, rel, [](std::span<const int> col) { return col[0] == col[1]; }));
}

TEST_CASE("satisfy: C5 with C1 on a nonadjacent pair") {
    Graph c5 = cycle_graph(5);
    DecompTree tree = decompose(c5);
    ConditionEngine engine(tree);
    Colouring c = engine.satisfy(Condition::c1(0, 2));
    CHECK(check_condition(c5, Condition::c1(0, 2), c));
    CHECK(c.palette == 4);
}

TEST_CASE("satisfy: K4 leaf with m = 5") {
    Graph k4 = complete_graph(4);
    DecompTree tree = decompose(k4);
    EngineConfig cfg;
    cfg.m = 5;
    ConditionEngine engine(tree, cfg);
    Colouring c = engine.satisfy(Condition::c2(0, 1));
    CHECK(check_condition(k4, Condition::c2(0, 1), c));
    CHECK(c.colours_used() == 4);
}

TEST_CASE("satisfy: K4 - e with C4 through the nonadjacent pair") {
    Graph d = named("diamond");
    DecompTree tree = decompose(d);
    ConditionEngine engine(tree);
    Condition cond = Condition::c4(0, 1, 2);
    REQUIRE(feasible(d, 4, cond));
    Colouring c = engine.satisfy(cond);
    CHECK(check_condition(d, cond, c));
    std::set<int> on{c[0], c[1], c[2]};
    CHECK(on.size() == 2);
}

TEST_CASE("satisfy: single edge") {
    Graph e = complete_graph(2);
    DecompTree tree = decompose(e);
    ConditionEngine engine(tree);
    Colouring c = engine.satisfy(Condition::c2(0, 1));
    CHECK(c[0] != c[1]);
}

TEST_CASE("satisfy: rejects invalid tuples") {
    Graph p3 = path_graph(3);
    DecompTree tree = decompose(p3);
    ConditionEngine engine(tree);
    CHECK(code_of([&] { engine.satisfy(Condition::c1(0, 1)); }) == Errc::condition_invalid);
    CHECK(code_of([&] { engine.satisfy(Condition::c2(0, 7)); }) == Errc::condition_invalid);
    CHECK(code_of([&] { engine.satisfy(99, Condition::c2(0, 1)); }) == Errc::out_of_range);
    CHECK(code_of([&] { ConditionEngine bad(tree, EngineConfig{3}); }) == Errc::precondition_violated);
}

TEST_CASE("colour: examples") {
    Graph ds = double_subdivide(complete_graph(5)).graph;
    Colouring c = colour(ds, 4);
    CHECK(is_proper(ds, c));
    CHECK(c.palette == 4);

    Colouring k4 = colour(complete_graph(4), 5);
    CHECK(is_proper(complete_graph(4), k4));
    CHECK(k4.colours_used() == 4);

    CHECK(colour(Graph{}, 4).size() == 0);
    CHECK(colour(Graph(1), 4).colour == std::vector<int>{1});
    CHECK(is_proper(Graph(3), colour(Graph(3), 4)));
}

TEST_CASE("colour: graphs that are not m-fragile") {
    CHECK(code_of([] { colour(complete_graph(4), 4); }) == Errc::not_m_fragile);
    CHECK(code_of([] { colour(complete_graph(5), 5); }) == Errc::not_m_fragile);
    CHECK(code_of([] { colour(named("wheel5"), 4); }) == Errc::not_m_fragile);
    CHECK(code_of([] { colour(cycle_graph(5), 3); }) == Errc::precondition_violated);
    try {
        colour(glued({cycle_graph(5), complete_graph(4)}, 3), 4);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_m_fragile);
        CHECK(std::string(e.what()).find("not 3-colourable") != std::string::npos);
    }
}

TEST_CASE("colour: 3-connected leaves that are (m-1)-colourable") {
    Graph p = petersen_graph();
    CHECK(is_proper(p, colour(p, 4)));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = glued({petersen_graph(), cycle_graph(5), named("cube"), named("diamond"), petersen_graph()}, seed);
        CAPTURE(seed);
        CHECK(is_proper(g, colour(g, 4)));
        Graph h = glued({complete_graph(4), named("wheel5"), complete_graph(4), cycle_graph(7), named("octahedron")}, seed);
        CHECK(is_proper(h, colour(h, 5)));
    }
}

TEST_CASE("satisfy: every valid tuple on small fragile graphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = random_fragile(5 + static_cast<int>(seed % 6), seed);
        CAPTURE(seed);
        check_all(g, 4, true);
        if (seed % 5 == 0) check_all(g, 4, false);
    }
    check_all(named("diamond"), 4, true);
    check_all(cycle_graph(6), 4, true);
    check_all(tight_chain(3), 4, true);
    check_all(neq_gadget().graph, 4, true);
}

TEST_CASE("satisfy: every valid tuple on small m-fragile graphs") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Graph g = glued({complete_graph(4), path_graph(3), complete_graph(4)}, seed);
        CAPTURE(seed);
        check_all(g, 5, true);
    }
    check_all(glued({petersen_graph(), named("diamond")}, 2), 4, true);
    check_all(complete_graph(4), 5, true);
    check_all(complete_graph(5), 6, true);
}

TEST_CASE("satisfy is total on feasible queries") {
    // whenever the oracle finds a satisfying colouring, so must the engine
    for (std::uint64_t seed = 30; seed <= 40; ++seed) {
        Graph g = random_fragile(9, seed);
        DecompTree tree = decompose(g);
        ConditionEngine engine(tree);
        for (const auto& cond : all_conditions(g)) {
            REQUIRE(feasible(g, 4, cond));
            CHECK(check_condition(g, cond, engine.satisfy(cond)));
        }
    }
}

TEST_CASE("satisfy works at inner nodes with local ids") {
    Graph g = random_fragile(20, 8);
    DecompTree tree = decompose(g);
    ConditionEngine engine(tree);
    for (NodeId id = 0; id < tree.size(); ++id) {
        const Graph& local = tree.node(id).graph;
        if (local.order() < 2) continue;
        Condition cond = Condition::c2(0, local.order() - 1);
        CHECK(check_condition(local, cond, engine.satisfy(id, cond)));
    }
}

TEST_CASE("engine is deterministic and memo does not change results") {
    Graph g = random_fragile(40, 17);
    Colouring a = colour(g, 4), b = colour(g, 4);
    CHECK(a == b);
    EngineConfig off;
    off.memo_enabled = false;
    Colouring c = colour(g, 4, off);
    CHECK(is_proper(g, c));
    CHECK(a == c);
    EngineConfig quiet;
    quiet.verify_each_step = false;
    CHECK(colour(g, 4, quiet) == a);
}

TEST_CASE("memo hits accumulate across queries") {
    Graph g = tight_chain(20);
    DecompTree tree = decompose(g);
    ConditionEngine engine(tree);
    engine.satisfy(Condition::c2(0, 1));
    auto first = engine.stats().queries;
    engine.satisfy(Condition::c2(1, 0));
    CHECK(engine.stats().memo_hits >= 1);
    CHECK(engine.stats().queries == first);
    CHECK(engine.stats().executions >= engine.stats().queries);
}

TEST_CASE("long chains do not exhaust the stack") {
    Graph g = tight_chain(400);
    CHECK(is_proper(g, colour(g, 4)));
    Graph p = path_graph(3000);
    CHECK(is_proper(p, colour(p, 4)));
}
