#include "fragile/engine.hpp"

#include "fragile/error.hpp"
#include "fragile/oracle.hpp"

#include <algorithm>
#include <string>

namespace fragile {

const char* condition_name(ConditionKind kind) noexcept {
    switch (kind) {
    case ConditionKind::none: return "none";
    case ConditionKind::c1: return "c1";
    case ConditionKind::c2: return "c2";
    case ConditionKind::c3: return "c3";
    case ConditionKind::c4: return "c4";
    }
    return "?";
}

std::optional<ConditionKind> condition_from_name(std::string_view name) {
    if (name == "c1" || name == "C1") return ConditionKind::c1;
    if (name == "c2" || name == "C2") return ConditionKind::c2;
    if (name == "c3" || name == "C3") return ConditionKind::c3;
    if (name == "c4" || name == "C4") return ConditionKind::c4;
    if (name == "none") return ConditionKind::none;
    return std::nullopt;
}

int condition_arity(ConditionKind kind) noexcept {
    switch (kind) {
    case ConditionKind::none: return 0;
    case ConditionKind::c1:
    case ConditionKind::c2: return 2;
    case ConditionKind::c3:
    case ConditionKind::c4: return 3;
    }
    return 0;
}

Condition make_condition(ConditionKind kind, std::span<const Vertex> vs) {
    if (static_cast<int>(vs.size()) != condition_arity(kind))
        throw Error(Errc::condition_invalid, std::string(condition_name(kind)) + " takes " +
                                                 std::to_string(condition_arity(kind)) + " vertices, got " +
                                                 std::to_string(vs.size()));
    Condition c;
    c.kind = kind;
    if (vs.size() == 2) c.tuple = VertexTuple(vs[0], vs[1]);
    if (vs.size() == 3) c.tuple = VertexTuple(vs[0], vs[1], vs[2]);
    return c;
}

void validate_condition(const Graph& g, const Condition& cond) {
    auto fail = [&](const std::string& why) {
        throw Error(Errc::condition_invalid, std::string(condition_name(cond.kind)) + ": " + why);
    };
    if (cond.tuple.size() != condition_arity(cond.kind)) fail("wrong number of vertices");
    for (Vertex v : cond.tuple.view())
        if (!g.contains(v)) fail("vertex " + std::to_string(v) + " not in graph");
    if (!cond.tuple.distinct()) fail("vertices must be distinct");
    const auto& t = cond.tuple;
    if (cond.kind == ConditionKind::c1 && g.adjacent(t[0], t[1])) fail("x and y are adjacent");
    if (cond.kind == ConditionKind::c4 && g.adjacent(t[0], t[1]) && g.adjacent(t[0], t[2]) &&
        g.adjacent(t[1], t[2]))
        fail("triple is a triangle");
}

namespace {

bool equation(ConditionKind kind, std::span<const int> col) {
    switch (kind) {
    case ConditionKind::none: return true;
    case ConditionKind::c1: return col[0] == col[1];
    case ConditionKind::c2: return col[0] != col[1];
    case ConditionKind::c3: return col[0] != col[1] && col[0] != col[2];
    case ConditionKind::c4: {
        int distinct = 1 + (col[1] != col[0]) + (col[2] != col[0] && col[2] != col[1]);
        return distinct == 2;
    }
    }
    return false;
}

}  // namespace

bool condition_holds(const Condition& cond, const Colouring& c) {
    std::array<int, 3> col{};
    for (int i = 0; i < cond.tuple.size(); ++i) {
        Vertex v = cond.tuple[i];
        if (v < 0 || v >= c.size() || c[v] == 0) throw Error(Errc::partial_colouring, "tuple vertex uncoloured");
        col[i] = c[v];
    }
    return equation(cond.kind, {col.data(), static_cast<std::size_t>(cond.tuple.size())});
}

bool check_condition(const Graph& g, const Condition& cond, const Colouring& c) {
    return is_proper(g, c) && condition_holds(cond, c);
}

ColourPermutation::ColourPermutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size() + 1, 0);
    for (int c : image_) {
        if (c < 1 || c > size() || seen[c]) throw Error(Errc::out_of_range, "not a permutation");
        seen[c] = 1;
    }
}

ColourPermutation ColourPermutation::identity(int m) {
    std::vector<int> image(static_cast<std::size_t>(m));
    for (int c = 1; c <= m; ++c) image[c - 1] = c;
    return ColourPermutation(std::move(image));
}

bool ColourPermutation::is_identity() const {
    for (int c = 1; c <= size(); ++c)
        if (image_[c - 1] != c) return false;
    return true;
}

Colouring ColourPermutation::apply(const Colouring& c) const {
    Colouring out(c.palette, c.size());
    for (Vertex v = 0; v < c.size(); ++v) out[v] = (*this)(c[v]);
    return out;
}

std::uint64_t colour_set(std::initializer_list<int> colours) {
    std::uint64_t mask = 0;
    for (int c : colours) mask |= colour_bit(c);
    return mask;
}

std::uint64_t colour_range(int lo, int hi) {
    std::uint64_t mask = 0;
    for (int c = lo; c <= hi; ++c) mask |= colour_bit(c);
    return mask;
}

std::optional<ColourPermutation> match_predicate(const Colouring& c, std::span<const Vertex> relevant,
                                                 const RelabelTest& test) {
    const int m = c.palette;
    std::vector<int> present;
    for (Vertex v : relevant) present.push_back(c[v]);
    std::sort(present.begin(), present.end());
    present.erase(std::unique(present.begin(), present.end()), present.end());

    std::vector<int> image(static_cast<std::size_t>(m) + 1, 0);
    std::vector<char> used(static_cast<std::size_t>(m) + 1, 0);
    std::vector<int> mapped(relevant.size());

    // Lexicographic over the images of the colours the test sees; the other
    // colours keep their value when it is free, then take what is left.
    auto complete = [&] {
        for (int r = 1; r <= m; ++r)
            if (!image[r] && !used[r]) image[r] = r, used[r] = 1;
        int next = 1;
        for (int r = 1; r <= m; ++r) {
            if (image[r]) continue;
            while (used[next]) ++next;
            image[r] = next;
            used[next] = 1;
        }
    };
    auto dfs = [&](auto&& self, std::size_t k) -> bool {
        if (k == present.size()) {
            for (std::size_t i = 0; i < relevant.size(); ++i) mapped[i] = image[c[relevant[i]]];
            if (!test(mapped)) return false;
            complete();
            return true;
        }
        const int colour = present[k];
        for (int val = 1; val <= m; ++val) {
            if (used[val]) continue;
            image[colour] = val;
            used[val] = 1;
            if (self(self, k + 1)) return true;
            used[val] = 0;
        }
        image[colour] = 0;
        return false;
    };
    if (!present.empty() && present.front() < 1) return std::nullopt;
    if (!dfs(dfs, 0)) return std::nullopt;
    return ColourPermutation(std::vector<int>(image.begin() + 1, image.end()));
}

std::optional<ColourPermutation> match_pattern(const Colouring& c, std::span<const PatternConstraint> required) {
    std::vector<Vertex> relevant;
    std::vector<std::uint64_t> masks;
    for (const auto& r : required) {
        relevant.push_back(r.vertex);
        masks.push_back(r.allowed);
    }
    return match_predicate(c, relevant, [&](std::span<const int> mapped) {
        for (std::size_t i = 0; i < mapped.size(); ++i)
            if (!(masks[i] >> mapped[i] & 1)) return false;
        return true;
    });
}

namespace {

struct Suspend {
    ConditionEngine::Query query;
};

[[noreturn]] void invariant(const std::string& what) { throw Error(Errc::internal_invariant, what); }

}  // namespace

// One execution of a query handler. Sub-answers come from the frame's
// recorded answers, then from the memo table; otherwise the handler is
// suspended and re-run once the subquery has been answered.
class QueryContext {
public:
    using Answers = std::vector<std::shared_ptr<const Colouring>>;

    QueryContext(ConditionEngine& engine, NodeId id, Answers& answers)
        : engine_(engine), id_(id), nd_(engine.tree_->node(id)), g_(nd_.graph), m_(engine.cfg_.m),
          answers_(answers) {}

    Colouring run(const Condition& cond);

private:
    ConditionEngine& engine_;
    NodeId id_;
    const DecompNode& nd_;
    const Graph& g_;
    int m_;
    Answers& answers_;
    std::size_t next_ = 0;

    bool in(int side, Vertex w) const { return nd_.local_to_child[side][w] >= 0; }
    bool only(int side, Vertex w) const { return in(side, w) && !in(1 - side, w); }
    bool in_cutset(Vertex w) const { return in(0, w) && in(1, w); }
    std::uint64_t not1() const { return colour_range(2, m_); }

    const Colouring& fetch(const ConditionEngine::Query& q);
    Colouring ask(int side, const Condition& cond);
    Colouring ask_here(const Condition& cond) { return fetch({id_, cond}); }

    Colouring merge(const Colouring& a, const Colouring& b) const;
    Colouring relabel(const Colouring& c, std::initializer_list<PatternConstraint> req, const char* step) const;
    Colouring relabel_if(const Colouring& c, std::span<const Vertex> relevant, const RelabelTest& test,
                         const char* step) const;
    Colouring combine(const Colouring& a, const Colouring& b, const Condition& cond) const;

    Colouring small_case(const Condition& cond) const;
    Colouring leaf_case(const Condition& cond);
    Colouring same_side(int side, const Condition& cond);
    Colouring split_small(const Condition& cond);
    Colouring solve_c1(const Condition& cond);
    Colouring solve_c3(const Condition& cond);
    Colouring solve_c4(const Condition& cond);
};

const Colouring& QueryContext::fetch(const ConditionEngine::Query& q) {
    if (next_ < answers_.size()) return *answers_[next_++];
    if (engine_.cfg_.memo_enabled) {
        auto it = engine_.memo_.find(ConditionEngine::key_of(q));
        if (it != engine_.memo_.end()) {
            ++engine_.stats_.memo_hits;
            answers_.push_back(it->second);
            return *answers_[next_++];
        }
    }
    throw Suspend{q};
}

Colouring QueryContext::ask(int side, const Condition& cond) {
    Condition child_cond = cond;
    const auto& map = nd_.local_to_child[side];
    for (int i = 0; i < cond.tuple.size(); ++i) {
        Vertex local = map[cond.tuple[i]];
        if (local < 0) invariant("subquery vertex outside its side");
        child_cond.tuple[i] = local;
    }
    const Colouring& child = fetch({nd_.children[side], child_cond});
    Colouring lifted(m_, g_.order());
    const auto& back = nd_.child_to_local[side];
    for (Vertex i = 0; i < child.size(); ++i) lifted[back[i]] = child[i];
    return lifted;
}

Colouring QueryContext::merge(const Colouring& a, const Colouring& b) const {
    Colouring out = a;
    for (Vertex w = 0; w < out.size(); ++w) {
        if (b[w] == 0) continue;
        if (out[w] != 0 && out[w] != b[w]) invariant("side colourings disagree on the cutset");
        out[w] = b[w];
    }
    return out;
}

Colouring QueryContext::relabel(const Colouring& c, std::initializer_list<PatternConstraint> req,
                                const char* step) const {
    auto pi = match_pattern(c, std::span<const PatternConstraint>(req.begin(), req.size()));
    if (!pi) invariant(std::string("no relabelling for pattern: ") + step);
    return pi->apply(c);
}

Colouring QueryContext::relabel_if(const Colouring& c, std::span<const Vertex> relevant, const RelabelTest& test,
                                   const char* step) const {
    auto pi = match_predicate(c, relevant, test);
    if (!pi) invariant(std::string("no relabelling for pattern: ") + step);
    return pi->apply(c);
}

// Permute b so that it agrees with a on the cutset and the union meets cond.
Colouring QueryContext::combine(const Colouring& a, const Colouring& b, const Condition& cond) const {
    std::vector<Vertex> relevant(nd_.cutset.begin(), nd_.cutset.end());
    const std::size_t anchors = relevant.size();
    std::vector<int> tuple_slot;
    for (Vertex w : cond.tuple.view()) {
        if (a[w] != 0) {
            tuple_slot.push_back(-1);
        } else {
            tuple_slot.push_back(static_cast<int>(relevant.size()));
            relevant.push_back(w);
        }
    }
    auto test = [&](std::span<const int> mapped) {
        for (std::size_t i = 0; i < anchors; ++i)
            if (mapped[i] != a[relevant[i]]) return false;
        std::array<int, 3> col{};
        for (int i = 0; i < cond.tuple.size(); ++i)
            col[i] = tuple_slot[i] < 0 ? a[cond.tuple[i]] : mapped[tuple_slot[i]];
        return equation(cond.kind, {col.data(), static_cast<std::size_t>(cond.tuple.size())});
    };
    return merge(a, relabel_if(b, relevant, test, "amalgamation"));
}

Colouring QueryContext::small_case(const Condition& cond) const {
    const int n = g_.order();
    Colouring c(m_, n);
    if (n == 0) return c;
    for (Vertex v = 0; v < n; ++v) c[v] = 1;
    for (;;) {
        if (is_proper(g_, c) && condition_holds(cond, c)) return c;
        Vertex v = n - 1;
        while (v >= 0 && c[v] == m_) c[v--] = 1;
        if (v < 0) break;
        ++c[v];
    }
    invariant("no colouring of a graph on at most three vertices");
}

Colouring QueryContext::leaf_case(const Condition& cond) {
    Colouring c = engine_.leaf_colouring(id_);
    const auto& t = cond.tuple;
    switch (cond.kind) {
    case ConditionKind::none: break;
    case ConditionKind::c1: c[t[0]] = c[t[1]] = m_; break;
    case ConditionKind::c2:
        if (c[t[0]] == c[t[1]]) c[t[0]] = m_;
        break;
    case ConditionKind::c3: c[t[0]] = m_; break;
    case ConditionKind::c4: {
        const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
        for (auto [i, j] : pairs)
            if (!g_.adjacent(t[i], t[j])) {
                c[t[i]] = c[t[j]] = m_;
                break;
            }
        break;
    }
    }
    return c;
}

Colouring QueryContext::same_side(int side, const Condition& cond) {
    Colouring first = ask(side, cond);
    const auto& s = nd_.cutset;
    if (s.size() < 2) {
        Colouring second = ask(1 - side, Condition::any());
        if (s.empty()) return merge(first, second);
        return merge(first, relabel(second, {{s[0], colour_bit(first[s[0]])}}, "cut vertex agreement"));
    }
    Vertex u = s[0], v = s[1];
    Condition force = first[u] == first[v] ? Condition::c1(u, v) : Condition::c2(u, v);
    Colouring second = ask(1 - side, force);
    second = relabel(second, {{u, colour_bit(first[u])}, {v, colour_bit(first[v])}}, "cutset agreement");
    return merge(first, second);
}

// Crossing tuple on a separation of order 0 or 1. Each side gets a
// subcondition anchored at the cut vertex u (when present), then side 1 is
// permuted onto side 0:
//   c1(x,y):   c2(x,u) and c2(y,u)
//   c2(x,y):   c2(x,u) on x's side
//   c3(u;y,z): c2(u,y) and c2(u,z)
//   c3(x;y,z): c3(x;w,u) if a partner w shares x's side, else c2(x,u)
//   c4(u,a,b): c2(a,u) and c2(b,u)
//   c4(p,q;r): c2(p,q) on the pair's side, c2(r,u) on r's side
// Without a cut vertex the u-terms drop out.
Colouring QueryContext::split_small(const Condition& cond) {
    const bool has_u = !nd_.cutset.empty();
    const Vertex u = has_u ? nd_.cutset[0] : -1;
    const auto& t = cond.tuple;
    std::array<Condition, 2> demand{Condition::any(), Condition::any()};
    auto side_of = [&](Vertex w) { return only(0, w) ? 0 : 1; };
    auto anchored = [&](Vertex w) { return has_u ? Condition::c2(w, u) : Condition::any(); };

    switch (cond.kind) {
    case ConditionKind::c1:
        demand[side_of(t[0])] = anchored(t[0]);
        demand[side_of(t[1])] = anchored(t[1]);
        break;
    case ConditionKind::c2: demand[side_of(t[0])] = anchored(t[0]); break;
    case ConditionKind::c3: {
        Vertex x = t[0];
        if (x == u) {
            demand[side_of(t[1])] = Condition::c2(u, t[1]);
            demand[side_of(t[2])] = Condition::c2(u, t[2]);
            break;
        }
        int p = side_of(x);
        Vertex partner = -1;
        for (int i = 1; i <= 2; ++i)
            if (t[i] != u && side_of(t[i]) == p) partner = t[i];
        if (partner >= 0)
            demand[p] = has_u ? Condition::c3(x, partner, u) : Condition::c2(x, partner);
        else
            demand[p] = anchored(x);
        break;
    }
    case ConditionKind::c4: {
        std::array<std::vector<Vertex>, 2> parts;
        bool touches_u = false;
        for (Vertex w : t.view()) {
            if (w == u) touches_u = true;
            else parts[side_of(w)].push_back(w);
        }
        if (touches_u) {
            demand[0] = Condition::c2(parts[0][0], u);
            demand[1] = Condition::c2(parts[1][0], u);
        } else {
            int pair_side = parts[0].size() == 2 ? 0 : 1;
            demand[pair_side] = Condition::c2(parts[pair_side][0], parts[pair_side][1]);
            demand[1 - pair_side] = anchored(parts[1 - pair_side][0]);
        }
        break;
    }
    case ConditionKind::none: break;
    }
    Colouring a = ask(0, demand[0]);
    Colouring b = ask(1, demand[1]);
    return combine(a, b, cond);
}

Colouring QueryContext::solve_c1(const Condition& cond) {
    Vertex x = cond.tuple[0], y = cond.tuple[1];
    int p = 0, q = 1;
    if (!only(0, x)) std::swap(x, y);
    Vertex u = nd_.cutset[0], v = nd_.cutset[1];

    Colouring a1 = relabel(ask(p, Condition::c3(x, u, v)), {{x, colour_set({1})}, {u, colour_set({2})}, {v, colour_set({2, 3})}}, "c1 a1");
    Colouring a2 = relabel(ask(q, Condition::c3(y, u, v)), {{y, colour_set({1})}, {u, colour_set({2})}, {v, colour_set({2, 3})}}, "c1 a2");
    if (a1[v] == a2[v]) return merge(a1, a2);
    if (a1[v] == 2) {
        std::swap(p, q);
        std::swap(x, y);
        std::swap(a1, a2);
    }

    Colouring b1 = relabel(ask(p, Condition::c3(u, x, v)), {{x, colour_set({1})}, {u, colour_set({2})}, {v, colour_set({1, 3})}}, "c1 b1");
    Colouring b2 = relabel(ask(q, Condition::c3(u, y, v)), {{y, colour_set({1})}, {u, colour_set({2})}, {v, colour_set({1, 3})}}, "c1 b2");
    if (b1[v] == b2[v]) return merge(b1, b2);
    if (b2[v] == 3) return merge(a1, b2);

    const std::array<Vertex, 3> xuv{x, u, v}, yuv{y, u, v};
    auto c_shape = [](std::span<const int> k) {
        return k[0] == 1 && ((k[1] == 1 && k[2] == 2) || (k[1] == 2 && k[2] == 3));
    };
    Colouring c1 = relabel_if(ask(p, Condition::c3(v, x, u)), xuv, c_shape, "c1 c1");
    Colouring c2 = relabel_if(ask(q, Condition::c3(v, y, u)), yuv, c_shape, "c1 c2");
    if (c1[u] == c2[u]) return merge(c1, c2);
    if (c2[u] == 2) return merge(a1, c2);

    // a2 gives u and v one colour, so uv is not an edge and c4 applies.
    if (g_.adjacent(u, v)) invariant("c1 reached d1 with uv an edge");
    auto d_shape = [](std::span<const int> k) {
        return k[0] == 1 && k[1] <= 2 && k[2] <= 2 && (k[1] == 2 || k[2] == 2);
    };
    Colouring d1 = relabel_if(ask(p, Condition::c4(x, u, v)), xuv, d_shape, "c1 d1");
    if (d1[u] == 1) return merge(d1, c2);
    if (d1[v] == 1) return merge(d1, b2);
    return merge(d1, a2);
}

Colouring QueryContext::solve_c3(const Condition& cond) {
    Vertex x = cond.tuple[0], y = cond.tuple[1], z = cond.tuple[2];
    Vertex u = nd_.cutset[0], v = nd_.cutset[1];
    const auto one = colour_set({1});

    if (in_cutset(x)) {
        if (x == v) std::swap(u, v);
        if (!only(0, y)) std::swap(y, z);
        Colouring a1 = relabel(ask(0, Condition::c3(x, v, y)), {{x, one}, {v, colour_set({2})}, {y, not1()}}, "c3 cutset a1");
        Colouring a2 = relabel(ask(1, Condition::c3(x, v, z)), {{x, one}, {v, colour_set({2})}, {z, not1()}}, "c3 cutset a2");
        return merge(a1, a2);
    }

    const int p = only(0, x) ? 0 : 1, q = 1 - p;
    if (only(p, z)) std::swap(y, z);

    if (only(p, y)) {
        // Case 2: x, y on p's side, z on q's side.
        Colouring a1 = relabel(ask(p, Condition::c3(x, y, u)), {{x, one}, {y, colour_set({2})}, {u, colour_set({2, 3})}}, "c3 case 2 a1");
        if (a1[v] != 1) {
            Condition force = a1[u] == a1[v] ? Condition::c1(u, v) : Condition::c2(u, v);
            Colouring a2 = relabel(ask(q, force), {{u, colour_bit(a1[u])}, {v, colour_bit(a1[v])}, {z, not1()}}, "c3 case 2 a2");
            return merge(a1, a2);
        }
        Colouring b2 = relabel(ask(q, Condition::c3(v, u, z)), {{v, one}, {u, colour_bit(a1[u])}, {z, not1()}}, "c3 case 2 b2");
        return merge(a1, b2);
    }

    // Case 1: y and z both in q's side.
    if (g_.adjacent(u, v)) {
        Colouring a1 = relabel(ask(p, Condition::c3(x, u, v)), {{x, one}, {u, colour_set({2})}, {v, colour_set({3})}}, "c3 case 1 a1");
        std::vector<Vertex> w{u, v, y, z};
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());
        Condition spare = Condition::any();
        if (m_ == 4 && w.size() == 4) {
            bool found = false;
            for (std::size_t i = 0; i < 4 && !found; ++i)
                for (std::size_t j = i + 1; j < 4 && !found; ++j)
                    if (!g_.adjacent(w[i], w[j])) {
                        spare = Condition::c1(w[i], w[j]);
                        found = true;
                    }
            if (!found) throw Error(Errc::not_m_fragile, "K4 on a cutset and two tuple vertices with m = 4");
        }
        Colouring a2 = relabel(ask(q, spare), {{u, colour_set({2})}, {v, colour_set({3})}, {y, not1()}, {z, not1()}}, "c3 case 1 a2");
        return merge(a1, a2);
    }

    Colouring b1 = ask(p, Condition::c3(x, u, v));
    std::optional<Colouring> a1;
    std::optional<Colouring> c1;
    if (b1[u] == b1[v]) {
        a1 = b1;
    } else {
        c1 = ask(p, Condition::c4(x, u, v));
        if ((*c1)[u] == (*c1)[v]) a1 = c1;
    }
    if (a1) {
        Colouring n1 = relabel(*a1, {{x, one}, {u, colour_set({2})}, {v, colour_set({2})}}, "c3 a1");
        Colouring a2 = relabel(ask(q, Condition::c1(u, v)), {{u, colour_set({2})}, {v, colour_set({2})}, {y, not1()}, {z, not1()}}, "c3 a2");
        return merge(n1, a2);
    }
    b1 = relabel(b1, {{x, one}, {u, colour_set({2})}, {v, colour_set({3})}}, "c3 b1");
    Vertex pu = (*c1)[x] == (*c1)[u] ? u : v;
    Vertex pv = pu == u ? v : u;
    Colouring n1 = relabel(*c1, {{x, one}, {pu, one}, {pv, colour_set({2})}}, "c3 c1");

    Colouring d2 = ask(q, Condition::c2(u, v));
    std::vector<int> seen{d2[u], d2[v], d2[y], d2[z]};
    std::sort(seen.begin(), seen.end());
    int count = static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
    if (count <= m_ - 1) {
        d2 = relabel(d2, {{u, colour_set({2})}, {v, colour_set({3})}, {y, not1()}, {z, not1()}}, "c3 d2 (three colours)");
        return merge(b1, d2);
    }
    d2 = relabel(d2, {{pu, one}, {pv, colour_set({2})}, {y, colour_set({3, 4})}, {z, colour_set({3, 4})}}, "c3 d2 (four colours)");
    return merge(n1, d2);
}

Colouring QueryContext::solve_c4(const Condition& cond) {
    Vertex u = nd_.cutset[0], v = nd_.cutset[1];
    Vertex x = -1, y = -1, z = -1;
    int p = 0;
    std::array<std::vector<Vertex>, 2> parts;
    Vertex on_cut = -1;
    for (Vertex w : cond.tuple.view()) {
        if (in_cutset(w)) on_cut = w;
        else parts[only(0, w) ? 0 : 1].push_back(w);
    }
    if (on_cut >= 0) {
        if (on_cut == u) std::swap(u, v);
        x = parts[0][0], y = on_cut, z = parts[1][0];
    } else {
        p = parts[0].size() == 1 ? 0 : 1;
        x = parts[p][0], y = parts[1 - p][0], z = parts[1 - p][1];
    }
    const int q = 1 - p;
    const auto one = colour_set({1});
    const std::array<Vertex, 4> uvyz{u, v, y, z};
    auto two_with_x = [](int a, int b) { return 1 + (a != 1) + (b != 1 && b != a) == 2; };

    if (g_.adjacent(u, v)) {
        Colouring a1 = relabel(ask(p, Condition::c3(x, u, v)), {{x, one}, {u, colour_set({2})}, {v, colour_set({3})}}, "c4 a1");
        // Besides {3,1}, {3} and {4}, the pair {1,4} also occurs here; the
        // search accepts any relabelling that leaves exactly two colours.
        Colouring a2 = relabel_if(ask(q, Condition::c3(u, y, z)), uvyz, [&](std::span<const int> k) {
            return k[0] == 2 && k[1] == 3 && two_with_x(k[2], k[3]);
        }, "c4 a2");
        return merge(a1, a2);
    }

    Colouring b1 = ask(p, Condition::c3(x, u, v));
    std::optional<Colouring> a1;
    std::optional<Colouring> c1;
    if (b1[u] == b1[v]) {
        a1 = b1;
    } else {
        c1 = ask(p, Condition::c4(x, u, v));
        if ((*c1)[u] == (*c1)[v]) a1 = c1;
    }
    if (a1) {
        Colouring n1 = relabel(*a1, {{x, one}, {u, colour_set({2})}, {v, colour_set({2})}}, "c4 a1 (u, v equal)");
        Colouring a2 = relabel_if(ask(q, Condition::c1(u, v)), uvyz, [&](std::span<const int> k) {
            return k[0] == 2 && k[1] == 2 && two_with_x(k[2], k[3]);
        }, "c4 a2 (u, v equal)");
        return merge(n1, a2);
    }
    b1 = relabel(b1, {{x, one}, {u, colour_set({2})}, {v, colour_set({3})}}, "c4 b1");
    Vertex pu = (*c1)[x] == (*c1)[u] ? u : v;
    Vertex pv = pu == u ? v : u;
    Colouring n1 = relabel(*c1, {{x, one}, {pu, one}, {pv, colour_set({2})}}, "c4 c1");

    Colouring d2 = ask(q, Condition::c2(u, v));
    if (d2[y] == d2[z]) {
        d2 = relabel(d2, {{u, colour_set({2})}, {v, colour_set({3})}, {y, not1()}}, "c4 d2 (y, z equal)");
        return merge(b1, d2);
    }
    std::vector<int> seen{d2[u], d2[v], d2[y], d2[z]};
    std::sort(seen.begin(), seen.end());
    int count = static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
    if (count >= 3) {
        d2 = relabel_if(d2, uvyz, [](std::span<const int> k) {
            return k[0] == 2 && k[1] == 3 && (k[2] == 1 || k[3] == 1);
        }, "c4 d2 (three colours)");
        return merge(b1, d2);
    }
    d2 = relabel(d2, {{pu, one}, {pv, colour_set({2})}}, "c4 d2 (two colours)");
    return merge(n1, d2);
}

Colouring QueryContext::run(const Condition& cond) {
    ++engine_.stats_.executions;
    if (g_.order() <= 3) return small_case(cond);
    if (nd_.is_leaf()) return leaf_case(cond);
    for (int side = 0; side < 2; ++side) {
        auto t = cond.tuple.view();
        if (std::all_of(t.begin(), t.end(), [&](Vertex w) { return in(side, w); })) return same_side(side, cond);
    }
    if (nd_.cutset.size() < 2) return split_small(cond);
    switch (cond.kind) {
    case ConditionKind::c1: return solve_c1(cond);
    case ConditionKind::c2: {
        // Apply c3 to x, y and any third vertex.
        Vertex x = cond.tuple[0], y = cond.tuple[1], w = 0;
        while (w == x || w == y) ++w;
        return ask_here(Condition::c3(x, y, w));
    }
    case ConditionKind::c3: return solve_c3(cond);
    case ConditionKind::c4: return solve_c4(cond);
    case ConditionKind::none: break;
    }
    invariant("unreachable condition dispatch");
}

ConditionEngine::ConditionEngine(const DecompTree& tree, EngineConfig cfg) : tree_(&tree), cfg_(cfg) {
    if (cfg_.m < 4) throw Error(Errc::precondition_violated, "palette must have at least 4 colours");
    if (cfg_.m > 63) throw Error(Errc::precondition_violated, "palette larger than 63");
}

std::size_t ConditionEngine::KeyHash::operator()(const Key& k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.node) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::size_t>(k.kind) + 0x7F4A7C15 + (h << 6) + (h >> 2);
    for (Vertex v : k.tuple) h ^= static_cast<std::size_t>(v + 1) + 0x9E3779B9 + (h << 6) + (h >> 2);
    return h;
}

ConditionEngine::Key ConditionEngine::key_of(const Query& q) {
    Key k{q.node, q.cond.kind, {-1, -1, -1}};
    for (int i = 0; i < q.cond.tuple.size(); ++i) k.tuple[i] = q.cond.tuple[i];
    switch (q.cond.kind) {
    case ConditionKind::c1:
    case ConditionKind::c2: std::sort(k.tuple.begin(), k.tuple.begin() + 2); break;
    case ConditionKind::c3: std::sort(k.tuple.begin() + 1, k.tuple.begin() + 3); break;
    case ConditionKind::c4: std::sort(k.tuple.begin(), k.tuple.end()); break;
    case ConditionKind::none: break;
    }
    return k;
}

const Colouring& ConditionEngine::leaf_colouring(NodeId id) {
    auto it = leaf_cache_.find(id);
    if (it != leaf_cache_.end()) return *it->second;
    const auto& nd = tree_->node(id);
    OracleStats ostats;
    auto opts = OracleOptions::uncapped(cfg_.oracle_budget);
    opts.stats = &ostats;
    auto c = exact_colour(nd.graph, cfg_.m - 1, {}, opts);
    stats_.oracle_nodes += ostats.nodes;
    ++stats_.leaf_colourings;
    if (!c) {
        std::string ids;
        for (Vertex v : nd.root_ids) ids += (ids.empty() ? "" : " ") + std::to_string(v);
        throw Error(Errc::not_m_fragile,
                    "3-connected subgraph {" + ids + "} is not " + std::to_string(cfg_.m - 1) + "-colourable");
    }
    c->palette = cfg_.m;
    auto stored = std::make_shared<const Colouring>(std::move(*c));
    leaf_cache_.emplace(id, stored);
    return *stored;
}

Colouring ConditionEngine::satisfy(NodeId node, const Condition& cond) {
    if (node < 0 || node >= tree_->size()) throw Error(Errc::out_of_range, "no such tree node");
    validate_condition(tree_->node(node).graph, cond);

    struct Frame {
        Query query;
        Key key;
        QueryContext::Answers answers;
    };
    std::vector<Frame> agenda;
    std::unordered_set<Key, KeyHash> active;
    auto push = [&](const Query& q) {
        Key k = key_of(q);
        if (!active.insert(k).second) invariant("query depends on itself");
        agenda.push_back({q, k, {}});
        stats_.max_agenda = std::max<std::uint64_t>(stats_.max_agenda, agenda.size());
    };
    if (cfg_.memo_enabled) {
        auto it = memo_.find(key_of({node, cond}));
        if (it != memo_.end()) {
            ++stats_.memo_hits;
            return *it->second;
        }
    }
    push({node, cond});

    std::shared_ptr<const Colouring> result;
    while (!agenda.empty()) {
        std::optional<Query> pending;
        std::shared_ptr<const Colouring> done;
        {
            Frame& f = agenda.back();
            QueryContext ctx(*this, f.query.node, f.answers);
            try {
                done = std::make_shared<const Colouring>(ctx.run(f.query.cond));
            } catch (const Suspend& s) {
                pending = s.query;
            }
        }
        if (pending) {
            try {
                validate_condition(tree_->node(pending->node).graph, pending->cond);
            } catch (const Error& e) {
                invariant(std::string("engine issued an invalid subquery: ") + e.what());
            }
            push(*pending);
            continue;
        }
        Frame& f = agenda.back();
        if (cfg_.verify_each_step) {
            const auto& g = tree_->node(f.query.node).graph;
            if (done->palette != cfg_.m || done->size() != g.order() || !done->total() ||
                !check_condition(g, f.query.cond, *done))
                invariant(std::string("step result fails ") + condition_name(f.query.cond.kind) + " at node " +
                          std::to_string(f.query.node));
        }
        ++stats_.queries;
        if (cfg_.memo_enabled) memo_.emplace(f.key, done);
        active.erase(f.key);
        agenda.pop_back();
        if (agenda.empty()) result = std::move(done);
        else agenda.back().answers.push_back(std::move(done));
    }
    return *result;
}

Colouring colour(const Graph& g, int m, EngineConfig cfg) {
    if (m < 4) throw Error(Errc::precondition_violated, "palette must have at least 4 colours");
    cfg.m = m;
    const int n = g.order();
    if (n == 0) return Colouring(m, 0);
    if (n == 1) return Colouring(m, std::vector<int>{1});
    DecompTree tree = decompose(g);
    ConditionEngine engine(tree, cfg);
    return engine.satisfy(Condition::c2(0, 1));
}

}  // namespace fragile
