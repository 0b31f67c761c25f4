#include <doctest.h>

#include "fragile/constructions.hpp"
#include "fragile/decomposition.hpp"
#include "fragile/extremal.hpp"
#include "support.hpp"

#include <set>

using namespace fragile;

TEST_CASE("girth") {
    CHECK(girth(cycle_graph(5)) == 5);
    CHECK(girth(complete_graph(4)) == 3);
    CHECK_FALSE(girth(path_graph(6)).has_value());
    CHECK_FALSE(girth(Graph{}).has_value());
    CHECK(girth(petersen_graph()) == 5);
    CHECK(girth(named("cube")) == 4);
    CHECK(girth(double_subdivide(complete_graph(4)).graph) == 9);
    Graph pendant_cycle = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}});
    CHECK(girth(pendant_cycle) == 4);
}

TEST_CASE("degeneracy") {
    CHECK(degeneracy(complete_graph(4)).value == 3);
    CHECK(degeneracy(cycle_graph(5)).value == 2);
    CHECK(degeneracy(tight_chain(3)).value <= 4);
    CHECK(degeneracy(path_graph(5)).value == 1);
    CHECK(degeneracy(Graph(3)).value == 0);
    auto p = degeneracy(path_graph(4));
    CHECK(p.peel_order == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("peel order is a permutation respecting the degeneracy") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = random_graph(25, 0.2, seed);
        auto d = degeneracy(g);
        std::set<Vertex> seen(d.peel_order.begin(), d.peel_order.end());
        CHECK(static_cast<int>(seen.size()) == g.order());
        std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
        for (Vertex v : d.peel_order) {
            int left = 0;
            for (Vertex w : g.neighbours(v)) left += !gone[w];
            CHECK(left <= d.value);
            gone[v] = 1;
        }
    }
}

TEST_CASE("greedy_colour") {
    Colouring k4 = greedy_colour(complete_graph(4));
    CHECK(k4.colours_used() == 4);
    CHECK(is_proper(complete_graph(4), k4));
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = random_graph(30, 0.25, seed);
        Colouring c = greedy_colour(g);
        CHECK(is_proper(g, c));
        CHECK(c.colours_used() <= degeneracy(g).value + 1);
    }
    CHECK(greedy_colour(Graph{}).size() == 0);
}

TEST_CASE("check_edge_bound: examples") {
    auto diamond = check_edge_bound(named("diamond"));
    CHECK(diamond.n == 4);
    CHECK(diamond.e == 5);
    CHECK(diamond.twice_bound_general == 10);
    CHECK(diamond.general_tight());
    CHECK_FALSE(diamond.general_violated());
    CHECK_FALSE(diamond.girth4_applies());

    auto c4 = check_edge_bound(cycle_graph(4));
    CHECK(c4.girth4_applies());
    CHECK(c4.twice_bound_girth4 == 8);
    CHECK(c4.girth4_tight());

    auto k4 = check_edge_bound(complete_graph(4));
    CHECK(k4.general_violated());
    CHECK_FALSE(is_fragile(complete_graph(4)).fragile);

    auto small = check_edge_bound(complete_graph(3));
    CHECK_FALSE(small.general_applies());
    CHECK_FALSE(small.general_violated());
    CHECK(check_edge_bound(path_graph(3)).girth4_applies());
}

TEST_CASE("format_half") {
    CHECK(format_half(10) == "5");
    CHECK(format_half(25) == "12.5");
    CHECK(format_half(0) == "0");
    CHECK(format_half(-5) == "-2.5");
    CHECK(format_half(-4) == "-2");
}

TEST_CASE("bounds hold on generated fragile graphs") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = random_fragile(4 + static_cast<int>(seed % 40), seed);
        auto r = check_edge_bound(g);
        CHECK_FALSE(r.general_violated());
        CHECK_FALSE(r.girth4_violated());
        CHECK(greedy_colour(g).colours_used() <= (r.girth4_applies() ? 4 : 5));
    }
}
