#pragma once

#include "fragile/decomposition.hpp"
#include "fragile/graph.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace fragile {

/// c1: x, y nonadjacent, c(x) = c(y).
/// c2: c(x) != c(y).
/// c3: c(x) not in {c(y), c(z)}; the first vertex is x.
/// c4: |{c(x), c(y), c(z)}| = 2, triple not a triangle.
/// none: any proper colouring (internal; used for sides that carry no demand).
enum class ConditionKind { none, c1, c2, c3, c4 };

const char* condition_name(ConditionKind kind) noexcept;
std::optional<ConditionKind> condition_from_name(std::string_view name);
int condition_arity(ConditionKind kind) noexcept;

struct Condition {
    ConditionKind kind = ConditionKind::none;
    VertexTuple tuple;

    static Condition any() { return {}; }
    static Condition c1(Vertex x, Vertex y) { return {ConditionKind::c1, {x, y}}; }
    static Condition c2(Vertex x, Vertex y) { return {ConditionKind::c2, {x, y}}; }
    static Condition c3(Vertex x, Vertex y, Vertex z) { return {ConditionKind::c3, {x, y, z}}; }
    static Condition c4(Vertex x, Vertex y, Vertex z) { return {ConditionKind::c4, {x, y, z}}; }

    friend bool operator==(const Condition&, const Condition&) = default;
};

/// Builds a condition from a kind and a vertex list; throws condition_invalid
/// if the arity is wrong.
Condition make_condition(ConditionKind kind, std::span<const Vertex> vertices);

/// Throws condition_invalid unless the tuple lies in g, is distinct, and
/// meets the kind's precondition (c1 nonadjacent, c4 not a triangle).
void validate_condition(const Graph& g, const Condition& cond);

/// The defining equation only; vertices of the tuple must be coloured.
bool condition_holds(const Condition& cond, const Colouring& c);

/// Proper on g and satisfying cond. Throws partial_colouring.
bool check_condition(const Graph& g, const Condition& cond, const Colouring& c);

/// Bijection on colours 1..m.
class ColourPermutation {
public:
    ColourPermutation() = default;
    explicit ColourPermutation(std::vector<int> image);  // image[c - 1] = pi(c)
    static ColourPermutation identity(int m);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int colour) const { return colour == 0 ? 0 : image_[static_cast<std::size_t>(colour - 1)]; }
    std::span<const int> image() const { return image_; }
    bool is_identity() const;

    /// pi o c; unassigned entries stay 0.
    Colouring apply(const Colouring& c) const;

    friend bool operator==(const ColourPermutation&, const ColourPermutation&) = default;

private:
    std::vector<int> image_;
};

constexpr std::uint64_t colour_bit(int c) { return std::uint64_t{1} << c; }
std::uint64_t colour_set(std::initializer_list<int> colours);
std::uint64_t colour_range(int lo, int hi);  // inclusive

struct PatternConstraint {
    Vertex vertex;
    std::uint64_t allowed;  // bit c set: colour c allowed after relabelling
};

/// First pi such that pi o c meets every constraint. The images of the colours
/// occurring on constrained vertices are tried in lexicographic order (by
/// increasing colour); every other colour stays fixed when that value is free.
std::optional<ColourPermutation> match_pattern(const Colouring& c, std::span<const PatternConstraint> required);

/// Same search with an arbitrary test. `relevant` lists the vertices the test
/// looks at; it receives their relabelled colours in that order.
using RelabelTest = std::function<bool(std::span<const int>)>;
std::optional<ColourPermutation> match_predicate(const Colouring& c, std::span<const Vertex> relevant,
                                                 const RelabelTest& test);

struct EngineConfig {
    int m = 4;
    bool verify_each_step = true;
    bool memo_enabled = true;
    std::uint64_t oracle_budget = 50'000'000;  // search nodes per 3-connected leaf
};

struct EngineStats {
    std::uint64_t queries = 0;     // handler completions
    std::uint64_t executions = 0;  // handler runs including replays
    std::uint64_t memo_hits = 0;
    std::uint64_t leaf_colourings = 0;
    std::uint64_t oracle_nodes = 0;
    std::uint64_t max_agenda = 0;
};

/// Answers c1..c4 queries on the nodes of a decomposition tree, recursively
/// over the tree. The tree must outlive the engine. Vertex ids in queries and
/// results are local to the queried node.
class ConditionEngine {
public:
    explicit ConditionEngine(const DecompTree& tree, EngineConfig cfg = {});

    Colouring satisfy(NodeId node, const Condition& cond);
    Colouring satisfy(const Condition& cond) { return satisfy(tree_->root(), cond); }

    const EngineStats& stats() const noexcept { return stats_; }
    const EngineConfig& config() const noexcept { return cfg_; }

    struct Query {
        NodeId node;
        Condition cond;
    };

private:
    struct Key {
        NodeId node;
        ConditionKind kind;
        std::array<Vertex, 3> tuple;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };
    static Key key_of(const Query& q);

    friend class QueryContext;

    const DecompTree* tree_;
    EngineConfig cfg_;
    EngineStats stats_;
    std::unordered_map<Key, std::shared_ptr<const Colouring>, KeyHash> memo_;
    std::unordered_map<NodeId, std::shared_ptr<const Colouring>> leaf_cache_;

    const Colouring& leaf_colouring(NodeId node);
};

/// Proper m-colouring of an m-fragile graph (m >= 4). Throws not_m_fragile
/// when some 3-connected leaf is not (m-1)-colourable, budget_exceeded when
/// the leaf search runs out.
Colouring colour(const Graph& g, int m = 4, EngineConfig cfg = {});

}  // namespace fragile
