#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>
#include <utility>

namespace fragile {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on dense vertex ids 0..n-1. Immutable once built;
/// every neighbour list is sorted. Each vertex carries an integer label that
/// survives subgraph extraction (defaults to the vertex id).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t size() const noexcept { return edge_count_; }
    bool empty() const noexcept { return adjacency_.empty(); }

    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

    /// All edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    int label(Vertex v) const { return labels_[v]; }
    std::span<const int> labels() const { return labels_; }
    Graph with_labels(std::vector<int> labels) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_ == b.adjacency_;
    }

private:
    friend class GraphBuilder;

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<int> labels_;
    std::size_t edge_count_ = 0;
};

/// Accumulates edges, then freezes into a Graph. Duplicate edges collapse;
/// self-loops and out-of-range ids throw.
class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0);

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    Vertex add_vertex();
    void add_edge(Vertex u, Vertex v);
    void add_edges(std::span<const Edge> edges);
    bool has_edge(Vertex u, Vertex v) const;

    Graph build() &&;

private:
    std::vector<std::vector<Vertex>> adjacency_;
};

Graph build_graph(int n, std::span<const Edge> edges);
Graph build_graph(int n, std::initializer_list<Edge> edges);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;  // new id -> parent id, increasing
};

/// Subgraph induced by `vertices` (any order, duplicates ignored). New ids
/// follow increasing parent id, so relative order is preserved.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

bool is_connected(const Graph& g);

/// Connected components of g with the vertices in `removed` deleted. Each
/// component is sorted; components are ordered by their smallest vertex.
std::vector<std::vector<Vertex>> components_without(const Graph& g,
                                                    std::span<const Vertex> removed);

/// Palette-bounded vertex colouring. Colours are 1..palette; 0 marks an
/// unassigned vertex.
struct Colouring {
    int palette = 0;
    std::vector<int> colour;

    Colouring() = default;
    Colouring(int m, int n) : palette(m), colour(static_cast<std::size_t>(n), 0) {}
    Colouring(int m, std::vector<int> c) : palette(m), colour(std::move(c)) {}

    int operator[](Vertex v) const { return colour[static_cast<std::size_t>(v)]; }
    int& operator[](Vertex v) { return colour[static_cast<std::size_t>(v)]; }
    int size() const noexcept { return static_cast<int>(colour.size()); }
    bool total() const;
    int colours_used() const;

    friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// True iff no edge is monochromatic. Throws partial_colouring if some vertex
/// of g is unassigned or outside the palette.
bool is_proper(const Graph& g, const Colouring& c);

/// Ordered pair or triple of vertex ids.
class VertexTuple {
public:
    VertexTuple() = default;
    VertexTuple(Vertex x, Vertex y) : v_{x, y, -1}, size_(2) {}
    VertexTuple(Vertex x, Vertex y, Vertex z) : v_{x, y, z}, size_(3) {}

    int size() const noexcept { return size_; }
    Vertex operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    Vertex& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }
    std::span<const Vertex> view() const { return {v_.data(), static_cast<std::size_t>(size_)}; }
    bool distinct() const;

    friend bool operator==(const VertexTuple&, const VertexTuple&) = default;

private:
    std::array<Vertex, 3> v_{-1, -1, -1};
    int size_ = 0;
};

}  // namespace fragile
