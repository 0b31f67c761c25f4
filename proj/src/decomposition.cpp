#include "fragile/decomposition.hpp"

#include "fragile/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fragile {

std::vector<Vertex> articulation_points(const Graph& g, Vertex removed) {
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> is_ap(static_cast<std::size_t>(n), 0);
    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
        int children;
    };
    std::vector<Frame> stack;
    int timer = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (root == removed || disc[root] >= 0) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, 0, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nbrs = g.neighbours(f.v);
            if (f.next < nbrs.size()) {
                Vertex w = nbrs[f.next++];
                if (w == removed || w == f.parent) continue;
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    ++f.children;
                    stack.push_back({w, f.v, 0, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children >= 2) is_ap[done.v] = 1;
            } else {
                Frame& parent = stack.back();
                low[parent.v] = std::min(low[parent.v], low[done.v]);
                if (parent.parent >= 0 && low[done.v] >= disc[parent.v]) is_ap[parent.v] = 1;
            }
        }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (is_ap[v]) out.push_back(v);
    return out;
}

bool is_cutset(const Graph& g, std::span<const Vertex> cutset) {
    return components_without(g, cutset).size() >= 2;
}

namespace {

Separation make_separation(const Graph& g, std::vector<Vertex> cutset) {
    auto comps = components_without(g, cutset);
    Separation sep;
    sep.cutset = cutset;
    sep.side1 = cutset;
    sep.side1.insert(sep.side1.end(), comps[0].begin(), comps[0].end());
    sep.side2 = cutset;
    for (std::size_t i = 1; i < comps.size(); ++i)
        sep.side2.insert(sep.side2.end(), comps[i].begin(), comps[i].end());
    std::sort(sep.side1.begin(), sep.side1.end());
    std::sort(sep.side2.begin(), sep.side2.end());
    return sep;
}

}  // namespace

std::optional<Separation> find_small_cutset(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw Error(Errc::too_small, "cutset search needs at least 2 vertices");
    if (!is_connected(g)) return make_separation(g, {});
    if (n <= 2) return std::nullopt;
    if (auto aps = articulation_points(g); !aps.empty()) return make_separation(g, {aps.front()});
    if (n <= 3) return std::nullopt;
    for (Vertex u = 0; u < n; ++u) {
        auto aps = articulation_points(g, u);
        auto it = std::upper_bound(aps.begin(), aps.end(), u);
        if (it != aps.end()) return make_separation(g, {u, *it});
    }
    return std::nullopt;
}

bool is_three_connected(const Graph& g) {
    return g.order() >= 4 && !find_small_cutset(g).has_value();
}

std::vector<NodeId> DecompTree::leaves() const {
    std::vector<NodeId> out;
    for (NodeId id = 0; id < size(); ++id)
        if (node(id).is_leaf()) out.push_back(id);
    return out;
}

int DecompTree::depth() const {
    if (nodes_.empty()) return 0;
    std::vector<int> d(nodes_.size(), 0);
    int best = 0;
    for (NodeId id = 0; id < size(); ++id)
        for (NodeId c : node(id).children)
            if (c >= 0) {
                d[c] = d[id] + 1;
                best = std::max(best, d[c]);
            }
    return best;
}

std::string DecompTree::serialize() const {
    std::ostringstream out;
    for (NodeId id = size() - 1; id >= 0; --id) {
        const auto& nd = node(id);
        out << "node " << id;
        if (nd.is_leaf()) {
            out << " leaf";
            for (Vertex v : nd.root_ids) out << ' ' << v;
        } else {
            out << " cut";
            for (Vertex v : nd.cutset) out << ' ' << nd.root_ids[v];
            out << " children " << nd.children[0] << ' ' << nd.children[1];
        }
        out << '\n';
    }
    return out.str();
}

DecompTree decompose(const Graph& g) {
    DecompTree tree;
    DecompNode root;
    root.graph = g;
    root.root_ids.resize(static_cast<std::size_t>(g.order()));
    std::iota(root.root_ids.begin(), root.root_ids.end(), 0);
    tree.nodes_.push_back(std::move(root));

    std::vector<NodeId> agenda{0};
    while (!agenda.empty()) {
        NodeId id = agenda.back();
        agenda.pop_back();
        if (tree.nodes_[id].graph.order() <= 3) continue;
        auto sep = find_small_cutset(tree.nodes_[id].graph);
        if (!sep) continue;

        std::array<DecompNode, 2> kids;
        for (int side = 0; side < 2; ++side) {
            const auto& parent = tree.nodes_[id];
            const auto& vertices = side == 0 ? sep->side1 : sep->side2;
            auto sub = induced_subgraph(parent.graph, vertices);
            auto& kid = kids[side];
            kid.graph = std::move(sub.graph);
            kid.root_ids.reserve(sub.to_parent.size());
            for (Vertex local : sub.to_parent) kid.root_ids.push_back(parent.root_ids[local]);
            auto& to_child = tree.nodes_[id].local_to_child[side];
            to_child.assign(static_cast<std::size_t>(parent.graph.order()), -1);
            for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
                to_child[sub.to_parent[i]] = static_cast<Vertex>(i);
            tree.nodes_[id].child_to_local[side] = std::move(sub.to_parent);
        }
        tree.nodes_[id].cutset = sep->cutset;
        for (int side = 0; side < 2; ++side) {
            NodeId child = tree.size();
            tree.nodes_[id].children[side] = child;
            tree.nodes_.push_back(std::move(kids[side]));
            agenda.push_back(child);
        }
    }
    return tree;
}

FragilityReport is_fragile(const Graph& g) {
    FragilityReport report;
    report.tree = decompose(g);
    for (NodeId id : report.tree.leaves()) {
        const auto& leaf = report.tree.node(id);
        if (leaf.graph.order() >= 4) {
            report.fragile = false;
            report.witness = leaf.root_ids;
            break;
        }
    }
    return report;
}

namespace {

bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        auto a = g.neighbours(u), b = g.neighbours(v);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return true;
            a[i] < b[j] ? ++i : ++j;
        }
    }
    return false;
}

}  // namespace

IndependentCutset find_independent_cutset(const Graph& g) {
    if (g.order() < 3) throw Error(Errc::precondition_violated, "need at least 3 vertices");
    if (has_triangle(g)) throw Error(Errc::precondition_violated, "graph has a triangle");
    if (!is_fragile(g).fragile) throw Error(Errc::precondition_violated, "graph is not fragile");

    IndependentCutset result;
    Graph current = g;
    std::vector<Vertex> ids(static_cast<std::size_t>(g.order()));
    std::iota(ids.begin(), ids.end(), 0);

    auto lift = [&](std::vector<Vertex> local) {
        for (auto& v : local) v = ids[v];
        std::sort(local.begin(), local.end());
        return local;
    };

    for (;;) {
        result.trail.push_back(ids);
        auto sep = find_small_cutset(current);
        if (!sep) throw Error(Errc::internal_invariant, "fragile graph without a small cutset");
        const auto& s = sep->cutset;
        if (s.size() < 2 || !current.adjacent(s[0], s[1])) {
            result.cutset = lift(s);
            return result;
        }
        // Adjacent cutset {u, v}: no vertex sees both. Descend into S plus one
        // component, or use a single cut vertex when that component is a singleton.
        auto comps = components_without(current, s);
        const auto& comp = comps.front();
        if (comp.size() == 1) {
            auto nbrs = current.neighbours(comp.front());
            if (nbrs.size() != 1)
                throw Error(Errc::internal_invariant, "singleton component attached to both of u, v");
            result.cutset = lift({nbrs.front()});
            return result;
        }
        std::vector<Vertex> keep = s;
        keep.insert(keep.end(), comp.begin(), comp.end());
        auto sub = induced_subgraph(current, keep);
        std::vector<Vertex> next_ids;
        next_ids.reserve(sub.to_parent.size());
        for (Vertex local : sub.to_parent) next_ids.push_back(ids[local]);
        ids = std::move(next_ids);
        current = std::move(sub.graph);
    }
}

}  // namespace fragile
