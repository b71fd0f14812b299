#pragma once

#include <minhom/cost.hpp>
#include <minhom/digraph.hpp>

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace minhom {

enum class Side : unsigned char { first = 0, second = 1 };

/// Bipartite graph with two ordered parts. Vertices are indexed globally in
/// declaration order; `side()` tells which part a vertex belongs to.
class BipartiteGraph {
public:
    auto add_vertex(std::string_view name, Side side) -> Vertex;
    /// Throws InvalidArgument when both endpoints lie in the same part.
    auto add_edge(Vertex u, Vertex v) -> bool;
    auto add_edge(std::string_view u, std::string_view v) -> bool;

    auto size() const noexcept -> std::size_t { return names_.size(); }
    auto edge_count() const noexcept -> std::size_t { return edge_count_; }
    auto name(Vertex v) const -> const std::string & { return names_.at(v); }
    auto side(Vertex v) const -> Side { return sides_.at(v); }
    auto find(std::string_view name) const -> std::optional<Vertex>;
    auto index_of(std::string_view name) const -> Vertex;

    /// Vertices of one part in declaration order.
    auto part(Side s) const -> std::vector<Vertex>;
    auto has_edge(Vertex u, Vertex v) const -> bool;
    auto neighbours(Vertex v) const -> std::span<const Vertex> { return adj_.at(v); }
    /// Edges as (first-part vertex, second-part vertex), sorted.
    auto edges() const -> std::vector<std::pair<Vertex, Vertex>>;

    /// Subgraph induced by `subset`, keeping declaration order and sides.
    auto induced(std::span<const Vertex> subset) const -> BipartiteGraph;
    /// Connected components, each sorted, ordered by smallest member.
    auto components() const -> std::vector<std::vector<Vertex>>;

private:
    std::vector<std::string> names_;
    std::vector<Side> sides_;
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Bipartite representation: vertex v of h becomes "v_1" in the first part
/// and "v_2" in the second; arc u->w becomes edge u_1 w_2. Vertex v_1 has
/// index v and v_2 has index |V(h)| + v.
auto bg(const Digraph & h) -> BipartiteGraph;

enum class ForbiddenKind { long_induced_cycle, bipartite_claw, bipartite_net, bipartite_tent };

auto to_string(ForbiddenKind kind) -> std::string;

/// Pattern vertex order for the fixed patterns is x1,x2,x3,x4,y1,y2,y3.
/// x-vertices form one side, y-vertices the other.
struct PatternGraph {
    std::size_t vertex_count;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Edge list of a fixed pattern (claw, net or tent) over indices x1..x4 = 0..3, y1..y3 = 4..6.
auto pattern(ForbiddenKind kind) -> const PatternGraph &;
/// The pattern as a standalone bipartite graph with x-vertices in the first part.
auto pattern_graph(ForbiddenKind kind) -> BipartiteGraph;
/// An even cycle c0-c1-...-c(len-1)-c0 as a standalone bipartite graph.
auto cycle_graph(std::size_t length) -> BipartiteGraph;

struct ForbiddenStructure {
    ForbiddenKind kind;
    /// embedding[i] is the host vertex for pattern vertex i. For cycles the
    /// pattern vertices are listed in cycle order.
    std::vector<Vertex> embedding;
};

/// True when the embedding is injective and induces exactly its pattern in `g`.
auto validate_structure(const BipartiteGraph & g, const ForbiddenStructure & s) -> bool;

inline constexpr std::size_t default_forbidden_guard = 16;

/// Exhaustive search for an induced obstruction to being a proper interval
/// bigraph. Order: induced cycles of length 6, 8, ... (lexicographically
/// first), then claw, tent, net. Throws GuardExceeded above `guard` vertices.
auto find_forbidden(const BipartiteGraph & g, std::size_t guard = default_forbidden_guard) -> std::optional<ForbiddenStructure>;

/// Searches only for one pattern kind (cycles of every even length >= 6 for long_induced_cycle).
auto find_forbidden_kind(const BipartiteGraph & g, ForbiddenKind kind, std::size_t guard = default_forbidden_guard)
    -> std::optional<ForbiddenStructure>;

struct PibResult {
    bool proper_interval;
    std::optional<ForbiddenStructure> obstruction;
};

auto is_proper_interval_bigraph(const BipartiteGraph & g, std::size_t guard = default_forbidden_guard) -> PibResult;

/// A part-respecting map G -> L (first part into first part, second into
/// second) that sends every edge to an edge. Throws on a non-total map or
/// out-of-range image.
auto is_partite_homomorphism(const BipartiteGraph & g, const BipartiteGraph & target, std::span<const Vertex> map) -> bool;

/// Digraph instance built from a bipartite instance G -> BG(H): arcs
/// oriented first part -> second part, costs folded onto V(H).
struct DigraphInstance {
    Digraph input;
    CostMatrix costs;
};

/// `bg_costs` is indexed (vertex of g, vertex of bg(h)). The digraph keeps
/// the vertex names and order of g.
auto digraph_instance_from_bipartite(const BipartiteGraph & g, const Digraph & h, const CostMatrix & bg_costs) -> DigraphInstance;

/// Homomorphism D -> H to the part-respecting homomorphism G -> BG(H).
/// Throws InvalidArgument when `map` is not a homomorphism of the instance.
auto lift_solution(const BipartiteGraph & g, const Digraph & h, std::span<const Vertex> map) -> std::vector<Vertex>;
/// Inverse of lift_solution. Throws unless `map` is a part-respecting homomorphism G -> BG(H).
auto project_solution(const BipartiteGraph & g, const Digraph & h, std::span<const Vertex> map) -> std::vector<Vertex>;

} // namespace minhom
