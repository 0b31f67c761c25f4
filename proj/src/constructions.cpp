#include "fragile/constructions.hpp"

#include "fragile/decomposition.hpp"
#include "fragile/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace fragile {

Rng::Rng(std::uint64_t seed) : state_(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL) {}

// splitmix64
std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do r = next();
    while (r >= limit);
    return r % bound;
}

int Rng::between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Subdivision double_subdivide(const Graph& g) {
    const int n = g.order();
    Subdivision out;
    out.map.original = g.edges();
    const int e = static_cast<int>(out.map.original.size());
    GraphBuilder b(n + 2 * e);
    for (int i = 0; i < e; ++i) {
        auto [u, v] = out.map.original[i];
        Vertex x = n + 2 * i, y = n + 2 * i + 1;
        out.map.x.push_back(x);
        out.map.y.push_back(y);
        b.add_edge(u, x);
        b.add_edge(x, y);
        b.add_edge(y, v);
    }
    out.graph = std::move(b).build();
    return out;
}

Subdivision build_g_double_prime(const Graph& g) {
    Subdivision base = double_subdivide(g);
    const int n = g.order();
    const int e = static_cast<int>(base.map.original.size());
    GraphBuilder b(n + 3 * e);
    b.add_edges(base.graph.edges());
    for (int i = 0; i < e; ++i) {
        Vertex xp = n + 2 * e + i;
        base.map.x_prime.push_back(xp);
        b.add_edge(xp, base.map.original[i].first);
        b.add_edge(xp, base.map.x[i]);
        b.add_edge(xp, base.map.y[i]);
    }
    base.graph = std::move(b).build();
    return base;
}

GadgetInstance neq_gadget() {
    static const Graph g = build_graph(12, {{0, 5}, {0, 8}, {0, 10}, {1, 2}, {1, 4}, {2, 8}, {2, 10},
                                            {3, 6}, {3, 7}, {3, 8}, {4, 5}, {4, 10}, {5, 6}, {5, 11},
                                            {6, 9}, {7, 10}, {7, 11}, {9, 10}, {9, 11}});
    return {g, 0, 1};
}

GadgetReplacement replace_edges_with_gadget(const Graph& g, const GadgetInstance& gadget) {
    const int n = g.order();
    const int inner = gadget.graph.order() - 2;
    GadgetReplacement out;
    out.original = g.edges();
    const int e = static_cast<int>(out.original.size());
    GraphBuilder b(n + inner * e);
    for (int i = 0; i < e; ++i) {
        auto [u, v] = out.original[i];
        std::vector<Vertex> ids(static_cast<std::size_t>(gadget.graph.order()), -1);
        Vertex next = n + inner * i;
        for (Vertex w = 0; w < gadget.graph.order(); ++w) {
            if (w == gadget.terminal_a) ids[w] = u;
            else if (w == gadget.terminal_b) ids[w] = v;
            else ids[w] = next++;
        }
        for (auto [p, q] : gadget.graph.edges()) b.add_edge(ids[p], ids[q]);
        out.copies.push_back(std::move(ids));
    }
    out.graph = std::move(b).build();
    return out;
}

Graph cubic_girth_pair(const Graph& g, Edge uv) {
    const int n = g.order();
    for (Vertex w = 0; w < n; ++w)
        if (g.degree(w) != 3) throw Error(Errc::not_cubic, "vertex " + std::to_string(w) + " has degree " +
                                                                std::to_string(g.degree(w)));
    auto [u, v] = uv;
    if (!g.contains(u) || !g.contains(v) || u == v || !g.adjacent(u, v))
        throw Error(Errc::not_an_edge, std::to_string(u) + " " + std::to_string(v));
    if (!is_connected(g)) throw Error(Errc::precondition_violated, "input graph is disconnected");
    GraphBuilder b(2 * n);
    for (auto [p, q] : g.edges()) {
        if ((p == u && q == v) || (p == v && q == u)) continue;
        b.add_edge(p, q);
        b.add_edge(p + n, q + n);
    }
    b.add_edge(u, u + n);
    b.add_edge(v, v + n);
    return std::move(b).build();
}

Graph tight_chain(int k) {
    if (k < 1) throw Error(Errc::precondition_violated, "tight_chain needs k >= 1");
    const Vertex n = 2 * k + 2;
    GraphBuilder b(n);
    // built on ids t, then stored as n - 1 - t so the newest piece has the smallest ids
    auto piece = [&](Vertex p, Vertex q, Vertex r, Vertex s) {
        for (auto [x, y] : std::vector<Edge>{{p, r}, {p, s}, {q, r}, {q, s}, {r, s}})
            b.add_edge(n - 1 - x, n - 1 - y);
    };
    piece(0, 1, 2, 3);
    // piece i reuses a nonadjacent pair: {0, 1} once, then {2i, 2i - 1}
    for (int i = 1; i < k; ++i)
        piece(i == 1 ? 0 : 2 * i, i == 1 ? 1 : 2 * i - 1, 2 * i + 2, 2 * i + 3);
    return std::move(b).build();
}

namespace {

// Connected 2-degenerate piece: each new vertex attaches to one or two
// earlier ones. Or K4 - e with its nonadjacent pair at 0, 1.
Graph random_piece(int size, Rng& rng, const RandomProfile& profile) {
    if (size == 4 && rng.unit() < profile.diamond_share)
        return build_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    GraphBuilder b(size);
    for (Vertex w = 1; w < size; ++w) {
        Vertex first = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(w)));
        b.add_edge(w, first);
        if (w >= 2 && rng.below(3) != 0) {
            Vertex second = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(w - 1)));
            if (second >= first) ++second;
            b.add_edge(w, second);
        }
    }
    return std::move(b).build();
}

int weighted_glue(Rng& rng, const RandomProfile& profile, int max_glue) {
    int total = 0;
    for (int k = 0; k <= max_glue; ++k) total += profile.glue_weight[k];
    if (total <= 0) return 0;
    int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(total)));
    for (int k = 0; k <= max_glue; ++k) {
        if (r < profile.glue_weight[k]) return k;
        r -= profile.glue_weight[k];
    }
    return max_glue;
}

}  // namespace

Graph random_fragile(int n, std::uint64_t seed, const RandomProfile& profile) {
    if (n < 1) throw Error(Errc::precondition_violated, "random_fragile needs n >= 1");
    Rng rng(seed);
    std::set<Edge> edges;
    std::vector<Edge> edge_list;
    auto connect = [&](Vertex a, Vertex b) {
        Edge e = std::minmax(a, b);
        if (edges.insert(e).second) edge_list.push_back(e);
    };
    const int lo_piece = std::max(1, profile.min_piece);
    const int hi_piece = std::max(lo_piece, profile.max_piece);

    int have = std::min(n, rng.between(lo_piece, hi_piece));
    for (auto [a, b] : random_piece(have, rng, profile).edges()) connect(a, b);
    while (have < n) {
        const int missing = n - have;
        int glue = weighted_glue(rng, profile, std::min(2, have));
        int lo = std::min(std::max(lo_piece, glue + 1), glue + missing);
        int hi = std::min(std::max(lo, hi_piece), glue + missing);
        int size = rng.between(lo, hi);
        Graph piece = random_piece(size, rng, profile);

        // Piece vertices 0..glue-1 are identified with existing vertices. On
        // two vertices, adjacency must match on both sides.
        std::vector<Vertex> ids(static_cast<std::size_t>(size), -1);
        if (glue == 2) {
            bool placed = false;
            if (piece.adjacent(0, 1)) {
                if (!edge_list.empty()) {
                    auto [a, b] = edge_list[rng.below(edge_list.size())];
                    if (rng.below(2)) std::swap(a, b);
                    ids[0] = a, ids[1] = b;
                    placed = true;
                }
            } else {
                for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
                    Vertex a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(have)));
                    Vertex b = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(have)));
                    if (a == b || edges.count(std::minmax(a, b))) continue;
                    ids[0] = a, ids[1] = b;
                    placed = true;
                }
            }
            if (!placed) {
                glue = 1;
                size = std::min(size, missing + 1);
                piece = random_piece(size, rng, profile);
                ids.assign(static_cast<std::size_t>(size), -1);
            }
        }
        if (glue == 1) ids[0] = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(have)));
        Vertex next = have;
        for (auto& id : ids)
            if (id < 0) id = next++;
        have = next;
        for (auto [a, b] : piece.edges()) connect(ids[a], ids[b]);
    }

    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    if (profile.shuffle_ids)
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
    GraphBuilder b(n);
    for (auto [a, c] : edge_list) b.add_edge(perm[a], perm[c]);
    return std::move(b).build();
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.unit() < p) b.add_edge(u, v);
    return std::move(b).build();
}

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error(Errc::precondition_violated, "cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph petersen_graph() {
    GraphBuilder b(10);
    for (Vertex i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return std::move(b).build();
}

namespace {

std::optional<int> suffix_number(std::string_view name, std::string_view prefix) {
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
    int value = 0;
    auto tail = name.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || value < 0 || value > 100000) return std::nullopt;
    return value;
}

}  // namespace

Graph named(std::string_view name) {
    if (name == "petersen") return petersen_graph();
    if (name == "diamond" || name == "k4-e") return build_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    if (name == "k33") return build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    if (name == "cube")
        return build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                               {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    if (name == "octahedron") {
        GraphBuilder b(6);
        for (Vertex u = 0; u < 6; ++u)
            for (Vertex v = u + 1; v < 6; ++v)
                if (v != u + 3) b.add_edge(u, v);
        return std::move(b).build();
    }
    if (name == "gadget") return neq_gadget().graph;
    if (auto k = suffix_number(name, "wheel"); k && *k >= 3) {
        GraphBuilder b(*k + 1);
        for (Vertex v = 0; v < *k; ++v) {
            b.add_edge(v, (v + 1) % *k);
            b.add_edge(v, *k);
        }
        return std::move(b).build();
    }
    if (auto k = suffix_number(name, "tight"); k && *k >= 1) return tight_chain(*k);
    if (auto k = suffix_number(name, "k")) return complete_graph(*k);
    if (auto k = suffix_number(name, "c"); k && *k >= 3) return cycle_graph(*k);
    if (auto k = suffix_number(name, "p")) return path_graph(*k);
    throw Error(Errc::unknown_name, "unknown graph name '" + std::string(name) + "'");
}

std::vector<std::string> named_catalogue() {
    return {"k<N>", "c<N>", "p<N>", "wheel<N>", "tight<K>", "petersen", "diamond", "k33", "cube", "octahedron", "gadget"};
}

MinDegreeSearch search_min_degree4(std::uint64_t seed, std::uint64_t attempts, int max_vertices) {
    MinDegreeSearch out;
    Rng rng(seed);
    RandomProfile profile;
    profile.min_piece = 4;
    profile.max_piece = 8;
    profile.glue_weight[0] = 0;
    profile.glue_weight[1] = 1;
    profile.glue_weight[2] = 8;
    for (; out.attempts < attempts; ++out.attempts) {
        int n = rng.between(8, std::max(8, max_vertices));
        Graph g = random_fragile(n, rng.next(), profile);
        bool ok = true;
        for (Vertex v = 0; v < g.order() && ok; ++v) ok = g.degree(v) >= 4;
        if (ok && is_fragile(g).fragile) {
            out.found = std::move(g);
            ++out.attempts;
            break;
        }
    }
    return out;
}

}  // namespace fragile
