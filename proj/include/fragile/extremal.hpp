#pragma once

#include "fragile/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fragile {

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

struct Degeneracy {
    int value = 0;
    std::vector<Vertex> peel_order;  // removal order, smallest id among minimum degree first
};

Degeneracy degeneracy(const Graph& g);

/// Greedy colouring in reverse peel order; at most degeneracy + 1 colours.
Colouring greedy_colour(const Graph& g);

/// Edge bounds kept as twice their value so all comparisons are exact:
/// 2.5n - 5 becomes 5n - 10 and 2n - 4 becomes 4n - 8.
struct BoundReport {
    long long n = 0;
    long long e = 0;
    long long twice_bound_general = 0;
    long long twice_bound_girth4 = 0;
    std::optional<int> girth;
    int degeneracy = 0;
    std::vector<Vertex> peel_order;

    bool general_applies() const { return n >= 4; }
    bool girth4_applies() const { return n >= 3 && (!girth || *girth >= 4); }
    bool general_violated() const { return general_applies() && 2 * e > twice_bound_general; }
    bool girth4_violated() const { return girth4_applies() && 2 * e > twice_bound_girth4; }
    bool general_tight() const { return general_applies() && 2 * e == twice_bound_general; }
    bool girth4_tight() const { return girth4_applies() && 2 * e == twice_bound_girth4; }
};

BoundReport check_edge_bound(const Graph& g);

/// "p/2" rendered exactly, e.g. 15 or 12.5.
std::string format_half(long long twice);

}  // namespace fragile
