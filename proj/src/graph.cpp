#include "fragile/graph.hpp"

#include "fragile/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fragile {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::self_loop: return "SelfLoop";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::parse_error: return "ParseError";
    case Errc::partial_colouring: return "PartialColouring";
    case Errc::too_small: return "TooSmall";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::not_m_fragile: return "NotMFragile";
    case Errc::condition_invalid: return "ConditionInvalid";
    case Errc::internal_invariant: return "InternalInvariant";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_cubic: return "NotCubic";
    case Errc::not_an_edge: return "NotAnEdge";
    case Errc::unknown_name: return "UnknownName";
    }
    return "Unknown";
}

Graph::Graph(int n) : adjacency_(static_cast<std::size_t>(n)), labels_(static_cast<std::size_t>(n)) {
    std::iota(labels_.begin(), labels_.end(), 0);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adjacency_[u];
    const auto& b = adjacency_[v];
    const auto& shorter = a.size() <= b.size() ? a : b;
    return std::binary_search(shorter.begin(), shorter.end(), a.size() <= b.size() ? v : u);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::with_labels(std::vector<int> labels) const {
    if (labels.size() != adjacency_.size())
        throw Error(Errc::out_of_range, "label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

GraphBuilder::GraphBuilder(int n) {
    if (n < 0) throw Error(Errc::out_of_range, "negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(n));
}

Vertex GraphBuilder::add_vertex() {
    adjacency_.emplace_back();
    return order() - 1;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw Error(Errc::out_of_range, "edge " + std::to_string(u) + " " + std::to_string(v) +
                                            " on " + std::to_string(order()) + " vertices");
    if (u == v) throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
}

void GraphBuilder::add_edges(std::span<const Edge> edges) {
    for (auto [u, v] : edges) add_edge(u, v);
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
    const auto& a = adjacency_[u];
    return std::find(a.begin(), a.end(), v) != a.end();
}

Graph GraphBuilder::build() && {
    Graph g;
    g.adjacency_ = std::move(adjacency_);
    std::size_t twice = 0;
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        twice += list.size();
    }
    g.edge_count_ = twice / 2;
    g.labels_.resize(g.adjacency_.size());
    std::iota(g.labels_.begin(), g.labels_.end(), 0);
    return g;
}

Graph build_graph(int n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    b.add_edges(edges);
    return std::move(b).build();
}

Graph build_graph(int n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (Vertex v : keep)
        if (!g.contains(v)) throw Error(Errc::out_of_range, "vertex " + std::to_string(v));

    std::vector<Vertex> to_child(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) to_child[keep[i]] = static_cast<Vertex>(i);

    GraphBuilder b(static_cast<int>(keep.size()));
    std::vector<int> labels;
    labels.reserve(keep.size());
    for (Vertex old : keep) {
        labels.push_back(g.label(old));
        for (Vertex w : g.neighbours(old))
            if (old < w && to_child[w] >= 0) b.add_edge(to_child[old], to_child[w]);
    }
    InducedSubgraph out{std::move(b).build(), std::move(keep)};
    out.graph = out.graph.with_labels(std::move(labels));
    return out;
}

std::vector<std::vector<Vertex>> components_without(const Graph& g,
                                                    std::span<const Vertex> removed) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex r : removed) seen[r] = 1;
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        auto& comp = comps.back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbours(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || components_without(g, {}).size() == 1;
}

bool Colouring::total() const {
    return std::all_of(colour.begin(), colour.end(), [&](int c) { return c >= 1 && c <= palette; });
}

int Colouring::colours_used() const {
    std::vector<char> used(static_cast<std::size_t>(palette) + 1, 0);
    int count = 0;
    for (int c : colour)
        if (c >= 1 && c <= palette && !used[c]) {
            used[c] = 1;
            ++count;
        }
    return count;
}

bool is_proper(const Graph& g, const Colouring& c) {
    if (c.size() != g.order()) throw Error(Errc::partial_colouring, "colouring size mismatch");
    if (!c.total()) throw Error(Errc::partial_colouring, "unassigned vertex");
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbours(u))
            if (u < v && c[u] == c[v]) return false;
    return true;
}

bool VertexTuple::distinct() const {
    for (int i = 0; i < size_; ++i)
        for (int j = i + 1; j < size_; ++j)
            if (v_[i] == v_[j]) return false;
    return true;
}

}  // namespace fragile
