#pragma once

#include "fragile/graph.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fragile {

/// A separation of order |cutset| <= 2: side1 ∪ side2 = V, side1 ∩ side2 =
/// cutset, both sides have vertices outside the cutset, and no edge joins
/// side1 \ cutset to side2 \ cutset. All three vectors are sorted.
struct Separation {
    std::vector<Vertex> cutset;
    std::vector<Vertex> side1;
    std::vector<Vertex> side2;
};

/// Articulation points of g after deleting `removed` (-1 for none), sorted.
std::vector<Vertex> articulation_points(const Graph& g, Vertex removed = -1);

/// True iff deleting `cutset` leaves at least two components.
bool is_cutset(const Graph& g, std::span<const Vertex> cutset);

/// Minimum-order separation (order 0, 1 or 2), or nullopt when none exists
/// (3-connected graphs, and K2/K3). Among minimum cutsets the
/// lexicographically smallest sorted tuple wins; side1 is the cutset plus the
/// component of G - S holding the smallest non-cutset vertex.
std::optional<Separation> find_small_cutset(const Graph& g);

bool is_three_connected(const Graph& g);

using NodeId = int;

struct DecompNode {
    Graph graph;                      // local ids 0..k-1
    std::vector<Vertex> root_ids;     // local id -> root graph id
    std::vector<Vertex> cutset;       // local ids; empty for leaves and S = ∅
    std::array<NodeId, 2> children{-1, -1};
    std::array<std::vector<Vertex>, 2> child_to_local;  // child id -> local id
    std::array<std::vector<Vertex>, 2> local_to_child;  // local id -> child id or -1

    bool is_leaf() const noexcept { return children[0] < 0; }
    bool separable() const noexcept { return !is_leaf(); }
};

/// Recursive decomposition along small separations. Node 0 is the root;
/// every child has a larger id than its parent. Leaves have at most three
/// vertices or are 3-connected.
class DecompTree {
public:
    NodeId root() const noexcept { return 0; }
    const DecompNode& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
    int size() const noexcept { return static_cast<int>(nodes_.size()); }
    std::span<const DecompNode> nodes() const { return nodes_; }
    std::vector<NodeId> leaves() const;
    int depth() const;

    /// One line per node, children before parents, root last:
    ///   node <id> leaf <root vertex ids>
    ///   node <id> cut <root cutset ids> children <id> <id>
    std::string serialize() const;

private:
    friend DecompTree decompose(const Graph& g);
    std::vector<DecompNode> nodes_;
};

DecompTree decompose(const Graph& g);

struct FragilityReport {
    bool fragile = true;
    std::optional<std::vector<Vertex>> witness;  // root ids of a 3-connected leaf
    DecompTree tree;
};

FragilityReport is_fragile(const Graph& g);

struct IndependentCutset {
    std::vector<Vertex> cutset;                // ids of the input graph
    std::vector<std::vector<Vertex>> trail;    // vertex sets of the graphs visited, input ids
};

/// Independent cutset of order <= 2 in a fragile triangle-free graph on at
/// least three vertices. Throws precondition_violated otherwise.
IndependentCutset find_independent_cutset(const Graph& g);

}  // namespace fragile
