#include "fragile/oracle.hpp"

#include "fragile/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace fragile {

namespace {

void charge(const OracleOptions& opts, std::uint64_t& nodes) {
    if (++nodes > opts.node_budget)
        throw Error(Errc::budget_exceeded, "oracle node budget of " + std::to_string(opts.node_budget) +
                                               " exhausted");
}

void check_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw Error(Errc::budget_exceeded, std::string(what) + ": " + std::to_string(n) +
                                               " vertices exceeds cap " + std::to_string(cap));
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

class DsaturSearch {
public:
    DsaturSearch(std::vector<std::vector<int>> adj, int k, std::vector<int> fixed, const OracleOptions& opts)
        : adj_(std::move(adj)), k_(k), n_(static_cast<int>(adj_.size())), fixed_(std::move(fixed)),
          colour_(static_cast<std::size_t>(n_), 0), count_(static_cast<std::size_t>(n_) * (k + 1), 0),
          mask_(static_cast<std::size_t>(n_), 0), opts_(opts) {
        symmetric_ = std::all_of(fixed_.begin(), fixed_.end(), [](int c) { return c == 0; });
    }

    bool run() {
        int max_used = 0;
        std::vector<int> open;
        for (int v = 0; v < n_; ++v) {
            if (!fixed_[v]) {
                open.push_back(v);
                continue;
            }
            if (mask_[v] >> fixed_[v] & 1) return false;
            assign(v, fixed_[v]);
            max_used = std::max(max_used, fixed_[v]);
        }
        bool ok = true;
        for (auto& part : split(open))
            if (!solve(part, max_used)) {
                ok = false;
                break;
            }
        if (opts_.stats) opts_.stats->nodes += nodes_;
        return ok;
    }

    const std::vector<int>& colours() const { return colour_; }

private:
    std::vector<std::vector<int>> adj_;
    int k_, n_;
    std::vector<int> fixed_;
    std::vector<int> colour_;
    std::vector<int> count_;
    std::vector<std::uint64_t> mask_;
    const OracleOptions& opts_;
    bool symmetric_ = true;
    std::uint64_t nodes_ = 0;
    std::vector<int> trail_;
    std::vector<int> stamp_ = std::vector<int>(static_cast<std::size_t>(n_), 0);
    int epoch_ = 0;

    void assign(int v, int c) {
        colour_[v] = c;
        for (int w : adj_[v])
            if (count_[static_cast<std::size_t>(w) * (k_ + 1) + c]++ == 0) mask_[w] |= std::uint64_t{1} << c;
    }
    void unassign(int v) {
        int c = colour_[v];
        colour_[v] = 0;
        for (int w : adj_[v])
            if (--count_[static_cast<std::size_t>(w) * (k_ + 1) + c] == 0) mask_[w] &= ~(std::uint64_t{1} << c);
    }
    void rollback(std::size_t mark) {
        while (trail_.size() > mark) {
            unassign(trail_.back());
            trail_.pop_back();
        }
    }

    // Components of the uncoloured vertices in `verts`.
    std::vector<std::vector<int>> split(const std::vector<int>& verts) {
        ++epoch_;
        for (int v : verts) stamp_[v] = epoch_;
        std::vector<std::vector<int>> parts;
        for (int root : verts) {
            if (stamp_[root] != epoch_) continue;
            stamp_[root] = -epoch_;
            std::vector<int> part{root};
            for (std::size_t i = 0; i < part.size(); ++i)
                for (int w : adj_[part[i]])
                    if (stamp_[w] == epoch_) {
                        stamp_[w] = -epoch_;
                        part.push_back(w);
                    }
            parts.push_back(std::move(part));
        }
        return parts;
    }

    // Colours every vertex of `verts` (uncoloured, connected) or leaves them all uncoloured.
    bool solve(const std::vector<int>& verts, int max_used) {
        charge(opts_, nodes_);
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v : verts) {
            int sat = std::popcount(mask_[v]);
            int deg = static_cast<int>(adj_[v].size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) best = v, best_sat = sat, best_deg = deg;
        }
        std::vector<int> rest;
        rest.reserve(verts.size() - 1);
        for (int v : verts)
            if (v != best) rest.push_back(v);
        int limit = symmetric_ ? std::min(k_, max_used + 1) : k_;
        for (int c = 1; c <= limit; ++c) {
            if (mask_[best] >> c & 1) continue;
            const std::size_t mark = trail_.size();
            assign(best, c);
            trail_.push_back(best);
            bool ok = true;
            if (!rest.empty()) {
                // a neighbour left without colours fails before any branching below
                for (int v : rest)
                    if (std::popcount(mask_[v] >> 1) >= k_) ok = false;
                if (ok)
                    for (auto& part : split(rest))
                        if (!solve(part, std::max(max_used, c))) {
                            ok = false;
                            break;
                        }
            }
            if (ok) return true;
            rollback(mark);
        }
        return false;
    }
};

}  // namespace

std::optional<Colouring> exact_colour(const Graph& g, int k, std::span<const ColourConstraint> constraints,
                                      const OracleOptions& opts) {
    const int n = g.order();
    check_cap(n, opts.colour_cap, "exact_colour");
    if (k > 63) throw Error(Errc::precondition_violated, "palette larger than 63");
    if (n == 0) return Colouring(std::max(k, 0), 0);
    if (k < 1) return std::nullopt;

    Dsu dsu(n);
    for (const auto& c : constraints) {
        if (!g.contains(c.u)) throw Error(Errc::out_of_range, "constraint vertex " + std::to_string(c.u));
        if (c.kind != ColourConstraint::Kind::fixed && !g.contains(c.other))
            throw Error(Errc::out_of_range, "constraint vertex " + std::to_string(c.other));
        if (c.kind == ColourConstraint::Kind::equal) dsu.unite(c.u, c.other);
    }
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    int classes = 0;
    for (Vertex v = 0; v < n; ++v) {
        int r = dsu.find(v);
        if (cls[r] < 0) cls[r] = classes++;
        cls[v] = cls[r];
    }

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(classes));
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (auto [u, v] : g.edges()) {
        if (cls[u] == cls[v]) return std::nullopt;
        link(cls[u], cls[v]);
    }
    std::vector<int> fixed(static_cast<std::size_t>(classes), 0);
    for (const auto& c : constraints) {
        if (c.kind == ColourConstraint::Kind::not_equal) {
            if (cls[c.u] == cls[c.other]) return std::nullopt;
            link(cls[c.u], cls[c.other]);
        } else if (c.kind == ColourConstraint::Kind::fixed) {
            if (c.other < 1 || c.other > k) return std::nullopt;
            int& slot = fixed[cls[c.u]];
            if (slot && slot != c.other) return std::nullopt;
            slot = c.other;
        }
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    DsaturSearch search(std::move(adj), k, std::move(fixed), opts);
    if (!search.run()) return std::nullopt;
    Colouring out(k, n);
    for (Vertex v = 0; v < n; ++v) out[v] = search.colours()[cls[v]];
    return out;
}

int chromatic_number(const Graph& g, const OracleOptions& opts) {
    check_cap(g.order(), opts.colour_cap, "chromatic_number");
    if (g.order() == 0) return 0;
    for (int k = 1;; ++k)
        if (exact_colour(g, k, {}, opts)) return k;
}

void for_each_k_colouring(const Graph& g, int k, const std::function<bool(const Colouring&)>& visit,
                          const OracleOptions& opts) {
    const int n = g.order();
    check_cap(n, opts.enumeration_cap, "all_k_colourings");
    Colouring c(k, n);
    std::uint64_t nodes = 0;
    if (n == 0) {
        visit(c);
        return;
    }
    // Iterative odometer over vertices 0..n-1; only earlier neighbours are checked.
    int v = 0;
    bool keep_going = true;
    while (v >= 0 && keep_going) {
        int next = c[v] + 1;
        bool placed = false;
        for (; next <= k; ++next) {
            bool ok = true;
            for (Vertex w : g.neighbours(v)) {
                if (w >= v) break;
                if (c[w] == next) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                placed = true;
                break;
            }
        }
        if (!placed) {
            c[v] = 0;
            --v;
            continue;
        }
        charge(opts, nodes);
        c[v] = next;
        if (v == n - 1) {
            keep_going = visit(c);
        } else {
            ++v;
        }
    }
    if (opts.stats) opts.stats->nodes += nodes;
}

std::vector<Colouring> all_k_colourings(const Graph& g, int k, const OracleOptions& opts) {
    std::vector<Colouring> out;
    for_each_k_colouring(g, k, [&](const Colouring& c) {
        out.push_back(c);
        return true;
    }, opts);
    return out;
}

namespace {

std::vector<std::uint64_t> bit_adjacency(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    return adj;
}

struct MisSearch {
    const std::vector<std::uint64_t>& adj;
    const OracleOptions& opts;
    std::uint64_t nodes = 0;
    int best = 0;

    void run(std::uint64_t cand, int size) {
        charge(opts, nodes);
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        if (size + std::popcount(cand) <= best) return;
        int low = -1, low_deg = 65, high = -1, high_deg = -1;
        for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            int d = std::popcount(adj[v] & cand);
            if (d < low_deg) low = v, low_deg = d;
            if (d > high_deg) high = v, high_deg = d;
        }
        if (low_deg <= 1) {
            // A vertex of degree <= 1 lies in some maximum independent set.
            run(cand & ~adj[low] & ~(std::uint64_t{1} << low), size + 1);
            return;
        }
        std::uint64_t bit = std::uint64_t{1} << high;
        run(cand & ~adj[high] & ~bit, size + 1);
        run(cand & ~bit, size);
    }
};

bool connected_mask(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
    if (mask == 0) return true;
    std::uint64_t seen = mask & (~mask + 1), frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= mask & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

bool three_connected_mask(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
    if (std::popcount(mask) < 4) return false;
    for (std::uint64_t r = mask; r; r &= r - 1)
        if (std::popcount(adj[std::countr_zero(r)] & mask) < 3) return false;
    if (!connected_mask(adj, mask)) return false;
    for (std::uint64_t a = mask; a; a &= a - 1) {
        std::uint64_t abit = a & (~a + 1);
        if (!connected_mask(adj, mask & ~abit)) return false;
        for (std::uint64_t b = a & (a - 1); b; b &= b - 1) {
            std::uint64_t bbit = b & (~b + 1);
            if (!connected_mask(adj, mask & ~abit & ~bbit)) return false;
        }
    }
    return true;
}

}  // namespace

int independence_number(const Graph& g, const OracleOptions& opts) {
    const int n = g.order();
    check_cap(n, std::min(opts.independence_cap, 64), "independence_number");
    if (n == 0) return 0;
    auto adj = bit_adjacency(g);
    MisSearch search{adj, opts};
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    search.run(all, 0);
    if (opts.stats) opts.stats->nodes += search.nodes;
    return search.best;
}

std::vector<std::uint32_t> three_connected_subsets(const Graph& g, const OracleOptions& opts) {
    const int n = g.order();
    check_cap(n, std::min(opts.fragile_cap, 31), "fragile_bruteforce");
    auto adj = bit_adjacency(g);
    std::vector<std::uint32_t> out;
    std::uint64_t nodes = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        charge(opts, nodes);
        if (three_connected_mask(adj, mask)) out.push_back(mask);
    }
    if (opts.stats) opts.stats->nodes += nodes;
    return out;
}

bool fragile_bruteforce(const Graph& g, const OracleOptions& opts) {
    const int n = g.order();
    check_cap(n, std::min(opts.fragile_cap, 31), "fragile_bruteforce");
    auto adj = bit_adjacency(g);
    std::uint64_t nodes = 0;
    bool fragile = true;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        charge(opts, nodes);
        if (three_connected_mask(adj, mask)) {
            fragile = false;
            break;
        }
    }
    if (opts.stats) opts.stats->nodes += nodes;
    return fragile;
}

}  // namespace fragile
