#include "fragile/extremal.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace fragile {

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            if (best > 0 && 2 * dist[v] + 1 >= best) break;
            for (Vertex w : g.neighbours(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

Degeneracy degeneracy(const Graph& g) {
    const int n = g.order();
    Degeneracy out;
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.insert({deg[v], v});
    }
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        gone[v] = 1;
        out.value = std::max(out.value, d);
        out.peel_order.push_back(v);
        for (Vertex w : g.neighbours(v)) {
            if (gone[w]) continue;
            queue.erase({deg[w], w});
            queue.insert({--deg[w], w});
        }
    }
    return out;
}

Colouring greedy_colour(const Graph& g) {
    const int n = g.order();
    auto order = degeneracy(g).peel_order;
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    int used = 0;
    std::vector<char> taken;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        taken.assign(static_cast<std::size_t>(g.degree(v)) + 2, 0);
        for (Vertex w : g.neighbours(v))
            if (colour[w] > 0 && colour[w] < static_cast<int>(taken.size())) taken[colour[w]] = 1;
        int c = 1;
        while (taken[c]) ++c;
        colour[v] = c;
        used = std::max(used, c);
    }
    return Colouring(used, std::move(colour));
}

BoundReport check_edge_bound(const Graph& g) {
    BoundReport r;
    r.n = g.order();
    r.e = static_cast<long long>(g.size());
    r.twice_bound_general = 5 * r.n - 10;
    r.twice_bound_girth4 = 4 * r.n - 8;
    r.girth = girth(g);
    auto d = degeneracy(g);
    r.degeneracy = d.value;
    r.peel_order = std::move(d.peel_order);
    return r;
}

std::string format_half(long long twice) {
    std::string s = std::to_string(twice / 2);
    if (twice % 2 != 0) {
        if (twice < 0 && twice / 2 == 0) s = "-0";
        s += ".5";
    }
    return s;
}

}  // namespace fragile
