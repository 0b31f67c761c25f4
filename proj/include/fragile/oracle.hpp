#pragma once

#include "fragile/graph.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace fragile {

struct OracleStats {
    std::uint64_t nodes = 0;  // search nodes explored, accumulated across calls
};

/// Size caps and search budget. Exceeding either throws budget_exceeded.
struct OracleOptions {
    int colour_cap = 20;
    int independence_cap = 40;
    int fragile_cap = 16;
    int enumeration_cap = 18;
    std::uint64_t node_budget = 200'000'000;
    OracleStats* stats = nullptr;

    static OracleOptions uncapped(std::uint64_t budget) {
        OracleOptions o;
        o.colour_cap = o.enumeration_cap = std::numeric_limits<int>::max();
        o.independence_cap = 64;
        o.node_budget = budget;
        return o;
    }
};

struct ColourConstraint {
    enum class Kind { equal, not_equal, fixed };
    Kind kind;
    Vertex u;
    int other;  // second vertex, or the colour for `fixed`

    static ColourConstraint equal(Vertex u, Vertex v) { return {Kind::equal, u, v}; }
    static ColourConstraint not_equal(Vertex u, Vertex v) { return {Kind::not_equal, u, v}; }
    static ColourConstraint fixed(Vertex v, int colour) { return {Kind::fixed, v, colour}; }
};

/// Proper k-colouring meeting every constraint, or nullopt if none exists.
/// Exhaustive DSATUR-ordered backtracking; k <= 64.
std::optional<Colouring> exact_colour(const Graph& g, int k,
                                      std::span<const ColourConstraint> constraints = {},
                                      const OracleOptions& opts = {});

int chromatic_number(const Graph& g, const OracleOptions& opts = {});

/// Calls `visit` on every proper k-colouring, in lexicographic order of the
/// colour vector, without symmetry breaking. Stops early when `visit`
/// returns false.
void for_each_k_colouring(const Graph& g, int k, const std::function<bool(const Colouring&)>& visit,
                          const OracleOptions& opts = {});
std::vector<Colouring> all_k_colourings(const Graph& g, int k, const OracleOptions& opts = {});

/// Exact independence number by bitmask branch and bound (at most 64 vertices).
int independence_number(const Graph& g, const OracleOptions& opts = {});

/// Vertex subsets (as bitmasks, ascending) of size >= 4 inducing a
/// 3-connected subgraph. Connectivity is tested by deleting every vertex
/// and pair directly; no cutset search from the decomposition module.
std::vector<std::uint32_t> three_connected_subsets(const Graph& g, const OracleOptions& opts = {});

/// True iff no induced subgraph on >= 4 vertices is 3-connected.
bool fragile_bruteforce(const Graph& g, const OracleOptions& opts = {});

}  // namespace fragile
