#pragma once

#include "fragile/graph.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace fragile::testing {

inline bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges())
        for (Vertex w : g.neighbours(u))
            if (w != v && g.adjacent(w, v)) return true;
    return false;
}

inline bool is_independent(const Graph& g, const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

// Graph on n vertices whose edges are the set bits of mask over the pairs
// (0,1), (0,2), ..., (n-2,n-1).
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    GraphBuilder b(n);
    int bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) b.add_edge(u, v);
    return std::move(b).build();
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

}  // namespace fragile::testing
