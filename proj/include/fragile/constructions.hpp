#pragma once

#include "fragile/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fragile {

/// Per original edge i (in g.edges() order): the path u - x[i] - y[i] - v,
/// and for the three-colouring reduction x_prime[i] adjacent to u, x[i], y[i].
struct SubdivisionMap {
    std::vector<Edge> original;
    std::vector<Vertex> x, y, x_prime;
};

struct Subdivision {
    Graph graph;
    SubdivisionMap map;
};

/// Every edge becomes a path of length 3. Original vertices keep their ids;
/// edge i gets x = n + 2i and y = n + 2i + 1.
Subdivision double_subdivide(const Graph& g);

/// double_subdivide plus, per edge i, x'_i = n + 2|E| + i adjacent to u, x_i, y_i.
Subdivision build_g_double_prime(const Graph& g);

struct GadgetInstance {
    Graph graph;
    Vertex terminal_a = 0;
    Vertex terminal_b = 1;
};

/// Triangle-free, 2-degenerate, 3-chromatic, and every proper 3-colouring
/// gives the two terminals different colours. 12 vertices, 19 edges.
GadgetInstance neq_gadget();

struct GadgetReplacement {
    Graph graph;
    std::vector<Edge> original;                 // replaced edges, in g.edges() order
    std::vector<std::vector<Vertex>> copies;     // gadget vertex -> result id, per edge
};

/// Removes every edge uv and glues a gadget copy with a = u, b = v. Inner
/// gadget vertices of copy i take a fresh consecutive id range after n.
GadgetReplacement replace_edges_with_gadget(const Graph& g, const GadgetInstance& gadget = neq_gadget());

/// G - uv plus a disjoint copy G' - u'v', joined by uu' and vv'. Copy ids are
/// shifted by n. Throws not_cubic, not_an_edge, or precondition_violated
/// (disconnected input).
Graph cubic_girth_pair(const Graph& g, Edge uv);

/// k copies of K4 - e glued successively on their nonadjacent pair:
/// 2k + 2 vertices, 5k edges.
Graph tight_chain(int k);

struct RandomProfile {
    int min_piece = 3;
    int max_piece = 7;
    double diamond_share = 0.3;      // chance a piece is K4 - e
    int glue_weight[3] = {1, 3, 6};  // relative weights of gluing on 0, 1, 2 vertices
    bool shuffle_ids = true;
};

/// Deterministic in (n, seed, profile). Small 2-degenerate pieces and K4 - e
/// glued on at most two vertices at a time; exactly n vertices.
Graph random_fragile(int n, std::uint64_t seed, const RandomProfile& profile = {});

/// Uniform G(n, p) graph, deterministic in seed.
Graph random_graph(int n, double p, std::uint64_t seed);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();

/// k<N>, c<N>, p<N>, petersen, diamond, k33, cube, octahedron, wheel<N>,
/// gadget, tight<K>. Throws unknown_name.
Graph named(std::string_view name);
std::vector<std::string> named_catalogue();

struct MinDegreeSearch {
    std::optional<Graph> found;
    std::uint64_t attempts = 0;
};

/// Random search over compositions of small pieces for a fragile graph of
/// minimum degree >= 4. Reports failure when the attempt budget runs out.
MinDegreeSearch search_min_degree4(std::uint64_t seed, std::uint64_t attempts, int max_vertices = 40);

/// Small deterministic RNG with bounded draws, shared by the generators.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
    int between(int lo, int hi);               // uniform in [lo, hi]
    double unit();                             // uniform in [0, 1)

private:
    std::uint64_t state_;
};

}  // namespace fragile
