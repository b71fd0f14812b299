#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace minhom {

/// Dense vertex index. Indices follow declaration order.
using Vertex = std::size_t;

struct Arc {
    Vertex tail;
    Vertex head;

    auto operator<=>(const Arc &) const = default;
    auto is_loop() const noexcept -> bool { return tail == head; }
};

/// True when `name` is a legal vertex token: nonempty, no whitespace, no commas.
auto is_valid_vertex_name(std::string_view name) -> bool;

/// Directed graph with possible loops and no parallel arcs.
class Digraph {
public:
    Digraph() = default;

    /// Declares a new vertex. Throws InvalidArgument on a duplicate or malformed name.
    auto add_vertex(std::string_view name) -> Vertex;
    /// Returns the existing vertex called `name`, declaring it first if needed.
    auto ensure_vertex(std::string_view name) -> Vertex;
    /// Adds the arc; returns false when it was already present.
    auto add_arc(Vertex tail, Vertex head) -> bool;
    auto add_arc(std::string_view tail, std::string_view head) -> bool;

    auto size() const noexcept -> std::size_t { return names_.size(); }
    auto empty() const noexcept -> bool { return names_.empty(); }
    auto arc_count() const noexcept -> std::size_t { return arc_count_; }

    auto name(Vertex v) const -> const std::string & { return names_.at(v); }
    auto names() const noexcept -> const std::vector<std::string> & { return names_; }
    auto find(std::string_view name) const -> std::optional<Vertex>;
    /// Like find() but throws InvalidArgument for an unknown name.
    auto index_of(std::string_view name) const -> Vertex;

    auto has_arc(Vertex tail, Vertex head) const -> bool;
    auto has_loop(Vertex v) const -> bool { return has_arc(v, v); }
    auto adjacent(Vertex u, Vertex v) const -> bool { return has_arc(u, v) || has_arc(v, u); }

    /// Out- and in-neighbours, sorted by index. Loops appear in both lists.
    auto out(Vertex v) const -> std::span<const Vertex> { return out_.at(v); }
    auto in(Vertex v) const -> std::span<const Vertex> { return in_.at(v); }

    /// All arcs sorted by (tail, head) index.
    auto arcs() const -> std::vector<Arc>;

    auto is_reflexive() const -> bool;
    auto is_loopless() const -> bool;

    /// Same vertex names in the same order and the same arc set.
    friend auto operator==(const Digraph &, const Digraph &) -> bool;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::size_t arc_count_ = 0;
};

class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(std::vector<std::string> names);

    auto add_edge(Vertex u, Vertex v) -> bool;

    auto size() const noexcept -> std::size_t { return names_.size(); }
    auto edge_count() const noexcept -> std::size_t { return edge_count_; }
    auto name(Vertex v) const -> const std::string & { return names_.at(v); }
    auto has_edge(Vertex u, Vertex v) const -> bool;
    /// Sorted neighbour list; a self-loop lists the vertex itself.
    auto neighbours(Vertex v) const -> std::span<const Vertex> { return adj_.at(v); }
    /// Edges as (min, max) index pairs, sorted.
    auto edges() const -> std::vector<std::pair<Vertex, Vertex>>;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Partite sets of a multipartite tournament, sorted by (size, smallest member).
struct PartiteStructure {
    std::vector<std::vector<Vertex>> parts;

    auto part_count() const noexcept -> std::size_t { return parts.size(); }
    /// Index into `parts` for every vertex.
    auto part_of() const -> std::vector<std::size_t>;
};

auto converse(const Digraph & h) -> Digraph;
auto reflexive_closure(const Digraph & h) -> Digraph;

/// Subdigraph induced by `subset`. Vertices keep the relative declaration
/// order of `h` regardless of the order given. Throws on an out-of-range
/// or repeated vertex.
auto induced(const Digraph & h, std::span<const Vertex> subset) -> Digraph;
auto induced(const Digraph & h, const std::vector<std::string> & names) -> Digraph;

auto underlying_graph(const Digraph & h) -> UndirectedGraph;

/// Connected components of the underlying graph; each sorted, list ordered by smallest member.
auto components(const Digraph & h) -> std::vector<std::vector<Vertex>>;

/// Acyclic ordering of the loopless part of `h` (loops are not cycles), or
/// nullopt when a directed cycle of length >= 2 exists. Ties go to the
/// earliest-declared vertex.
auto acyclic_ordering(const Digraph & h) -> std::optional<std::vector<Vertex>>;
auto is_acyclic(const Digraph & h) -> bool;

/// Throws NotMultipartiteTournament when the loopless part of `h` is not an
/// orientation of a complete multipartite graph.
auto partite_structure(const Digraph & h) -> PartiteStructure;
auto is_multipartite_tournament(const Digraph & h) -> bool;
auto is_tournament_wpl(const Digraph & h) -> bool;

// Standard families. Vertices are named "1".."p" (or "1".."n+m").
auto make_tt(std::size_t p) -> Digraph;
auto make_tt_minus(std::size_t p) -> Digraph;
auto make_cycle(std::size_t k) -> Digraph;
/// All arcs from the n-set {1..n} to the m-set {n+1..n+m}.
auto make_oriented_kb(std::size_t n, std::size_t m) -> Digraph;

struct Extension {
    Digraph graph;
    /// origin[w] is the vertex of the base digraph that `w` substitutes.
    std::vector<Vertex> origin;
};

/// Replaces each vertex v by sizes[v] independent copies named "<v>.<j>".
/// The base digraph must be loopless.
auto extend(const Digraph & h, std::span<const std::size_t> sizes) -> Extension;
auto extend(const Digraph & h, const std::map<std::string, std::size_t> & sizes) -> Extension;

inline constexpr std::size_t isomorphism_guard = 10;

/// Lexicographically first arc- and loop-preserving bijection from `a` to
/// `b` (result[v] is the image of v), or nullopt. Throws GuardExceeded past
/// isomorphism_guard vertices.
auto find_isomorphism(const Digraph & a, const Digraph & b) -> std::optional<std::vector<Vertex>>;
auto is_isomorphic(const Digraph & a, const Digraph & b) -> bool;

inline constexpr std::size_t canonical_code_guard = 8;

/// Isomorphism-invariant code: the lexicographically smallest adjacency
/// matrix string over all vertex permutations. Feasible up to canonical_code_guard vertices.
auto canonical_code(const Digraph & h) -> std::string;

/// When `h` is a directed k-cycle (k >= 2, no loops), returns its vertices
/// in cycle order starting from vertex 0.
auto as_directed_cycle(const Digraph & h) -> std::optional<std::vector<Vertex>>;

} // namespace minhom
