#include <minhom/birep.hpp>
#include <minhom/error.hpp>

#include <algorithm>

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace minhom {

auto BipartiteGraph::add_vertex(string_view name, Side side) -> Vertex
{
    if (! is_valid_vertex_name(name))
        throw InvalidArgument("invalid vertex name '" + string(name) + "'");
    if (find(name))
        throw InvalidArgument("duplicate vertex '" + string(name) + "'");
    names_.emplace_back(name);
    sides_.push_back(side);
    adj_.emplace_back();
    return names_.size() - 1;
}

auto BipartiteGraph::add_edge(Vertex u, Vertex v) -> bool
{
    if (u >= size() || v >= size())
        throw InvalidArgument("edge endpoint out of range");
    if (sides_[u] == sides_[v])
        throw InvalidArgument("edge '" + names_[u] + "'-'" + names_[v] + "' does not cross the parts");
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v)
        return false;
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
    return true;
}

auto BipartiteGraph::add_edge(string_view u, string_view v) -> bool
{
    return add_edge(index_of(u), index_of(v));
}

auto BipartiteGraph::find(string_view name) const -> optional<Vertex>
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<Vertex>(it - names_.begin());
}

auto BipartiteGraph::index_of(string_view name) const -> Vertex
{
    if (auto v = find(name))
        return *v;
    throw InvalidArgument("unknown vertex '" + string(name) + "'");
}

auto BipartiteGraph::part(Side s) const -> vector<Vertex>
{
    vector<Vertex> result;
    for (Vertex v = 0; v < size(); ++v)
        if (sides_[v] == s)
            result.push_back(v);
    return result;
}

auto BipartiteGraph::has_edge(Vertex u, Vertex v) const -> bool
{
    return u < size() && v < size() && std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

auto BipartiteGraph::edges() const -> vector<std::pair<Vertex, Vertex>>
{
    vector<std::pair<Vertex, Vertex>> result;
    for (Vertex u = 0; u < size(); ++u)
        if (sides_[u] == Side::first)
            for (Vertex v : adj_[u])
                result.emplace_back(u, v);
    std::sort(result.begin(), result.end());
    return result;
}

auto BipartiteGraph::induced(span<const Vertex> subset) const -> BipartiteGraph
{
    vector<char> keep(size(), 0);
    for (Vertex v : subset) {
        if (v >= size() || keep[v])
            throw InvalidArgument("induced: bad or repeated vertex");
        keep[v] = 1;
    }
    BipartiteGraph result;
    vector<Vertex> image(size());
    for (Vertex v = 0; v < size(); ++v)
        if (keep[v])
            image[v] = result.add_vertex(names_[v], sides_[v]);
    for (auto [u, v] : edges())
        if (keep[u] && keep[v])
            result.add_edge(image[u], image[v]);
    return result;
}

auto BipartiteGraph::components() const -> vector<vector<Vertex>>
{
    vector<vector<Vertex>> result;
    vector<char> seen(size(), 0);
    for (Vertex start = 0; start < size(); ++start) {
        if (seen[start])
            continue;
        vector<Vertex> comp, stack{start};
        seen[start] = 1;
        while (! stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : adj_[u])
                if (! seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

auto bg(const Digraph & h) -> BipartiteGraph
{
    BipartiteGraph result;
    for (auto & name : h.names())
        result.add_vertex(name + "_1", Side::first);
    for (auto & name : h.names())
        result.add_vertex(name + "_2", Side::second);
    for (auto [u, w] : h.arcs())
        result.add_edge(u, h.size() + w);
    return result;
}

auto to_string(ForbiddenKind kind) -> string
{
    switch (kind) {
    case ForbiddenKind::long_induced_cycle: return "long-induced-cycle";
    case ForbiddenKind::bipartite_claw: return "bipartite-claw";
    case ForbiddenKind::bipartite_net: return "bipartite-net";
    case ForbiddenKind::bipartite_tent: return "bipartite-tent";
    }
    return "unknown";
}

namespace {
    // x1..x4 = 0..3, y1..y3 = 4..6
    const PatternGraph claw_pattern{7, {{3, 4}, {0, 4}, {3, 5}, {1, 5}, {3, 6}, {2, 6}}};
    // 4-cycle y1-x3-y2-x4 with pendants x1-y1, x2-y2, y3-x4
    const PatternGraph net_pattern{7, {{0, 4}, {2, 4}, {3, 4}, {2, 5}, {3, 5}, {1, 5}, {3, 6}}};
    // 6-cycle x1-y2-x4-y1-x2-y3 with chord x1-y1 and pendant x3-y1
    const PatternGraph tent_pattern{7, {{0, 4}, {2, 4}, {1, 4}, {1, 6}, {3, 4}, {3, 5}, {0, 6}, {0, 5}}};

    auto cycle_pattern(size_t length) -> PatternGraph
    {
        PatternGraph p{length, {}};
        for (size_t i = 0; i < length; ++i)
            p.edges.emplace_back(std::min(i, (i + 1) % length), std::max(i, (i + 1) % length));
        return p;
    }

    auto pattern_adjacency(const PatternGraph & p) -> vector<vector<char>>
    {
        vector<vector<char>> adj(p.vertex_count, vector<char>(p.vertex_count, 0));
        for (auto [a, b] : p.edges)
            adj[a][b] = adj[b][a] = 1;
        return adj;
    }

    // Backtracking embedding of a connected pattern as an induced subgraph.
    class EmbeddingSearch {
    public:
        EmbeddingSearch(const BipartiteGraph & host, const PatternGraph & p) :
            host_(host),
            adj_(pattern_adjacency(p)),
            image_(p.vertex_count),
            used_(host.size(), 0)
        {
            // Visit order: BFS from the highest-degree pattern vertex, so
            // every later vertex has an already placed neighbour.
            size_t start = 0;
            auto degree = [&](size_t v) { return std::count(adj_[v].begin(), adj_[v].end(), 1); };
            for (size_t v = 1; v < p.vertex_count; ++v)
                if (degree(v) > degree(start))
                    start = v;
            vector<char> queued(p.vertex_count, 0);
            order_.push_back(start);
            queued[start] = 1;
            for (size_t i = 0; i < order_.size(); ++i)
                for (size_t w = 0; w < p.vertex_count; ++w)
                    if (adj_[order_[i]][w] && ! queued[w]) {
                        queued[w] = 1;
                        order_.push_back(w);
                    }
            if (order_.size() != p.vertex_count)
                throw InternalError("pattern graph is not connected");
        }

        auto run() -> optional<vector<Vertex>>
        {
            if (order_.size() > host_.size())
                return std::nullopt;
            if (place(0))
                return image_;
            return std::nullopt;
        }

    private:
        auto place(size_t depth) -> bool
        {
            if (depth == order_.size())
                return true;
            size_t pv = order_[depth];
            optional<size_t> anchor;
            for (size_t d = 0; d < depth && ! anchor; ++d)
                if (adj_[pv][order_[d]])
                    anchor = order_[d];

            auto try_candidate = [&](Vertex c) {
                if (used_[c])
                    return false;
                for (size_t d = 0; d < depth; ++d) {
                    size_t q = order_[d];
                    if (static_cast<bool>(adj_[pv][q]) != host_.has_edge(c, image_[q]))
                        return false;
                }
                image_[pv] = c;
                used_[c] = 1;
                if (place(depth + 1))
                    return true;
                used_[c] = 0;
                return false;
            };

            if (anchor) {
                for (Vertex c : host_.neighbours(image_[*anchor]))
                    if (try_candidate(c))
                        return true;
            }
            else {
                for (Vertex c = 0; c < host_.size(); ++c)
                    if (try_candidate(c))
                        return true;
            }
            return false;
        }

        const BipartiteGraph & host_;
        vector<vector<char>> adj_;
        vector<size_t> order_;
        vector<Vertex> image_;
        vector<char> used_;
    };

    // Lexicographically first induced cycle of exactly `length` vertices,
    // listed from its smallest vertex towards the smaller of its two neighbours.
    class CycleSearch {
    public:
        CycleSearch(const BipartiteGraph & host, size_t length) : host_(host), length_(length), on_path_(host.size(), 0) {}

        auto run() -> optional<vector<Vertex>>
        {
            for (Vertex start = 0; start < host_.size(); ++start) {
                path_.assign(1, start);
                on_path_[start] = 1;
                bool found = extend();
                on_path_[start] = 0;
                if (found)
                    return path_;
            }
            return std::nullopt;
        }

    private:
        auto extend() -> bool
        {
            size_t i = path_.size();
            Vertex last = path_.back();
            for (Vertex c : host_.neighbours(last)) {
                if (c <= path_.front() || on_path_[c])
                    continue;
                bool closing = i + 1 == length_;
                if (closing && ! (host_.has_edge(c, path_.front()) && path_[1] < c))
                    continue;
                bool chordless = true;
                for (size_t j = 0; j + 1 < i && chordless; ++j) {
                    if (closing && j == 0)
                        continue;
                    chordless = ! host_.has_edge(c, path_[j]);
                }
                if (! chordless)
                    continue;
                path_.push_back(c);
                on_path_[c] = 1;
                if (closing || extend())
                    return true;
                on_path_[c] = 0;
                path_.pop_back();
            }
            return false;
        }

        const BipartiteGraph & host_;
        size_t length_;
        vector<Vertex> path_;
        vector<char> on_path_;
    };

    auto check_guard(const BipartiteGraph & g, size_t guard) -> void
    {
        if (g.size() > guard)
            throw GuardExceeded("forbidden-structure search on " + std::to_string(g.size()) + " vertices exceeds the guard of "
                + std::to_string(guard) + "; raise the guard explicitly to proceed");
    }

    auto find_cycle(const BipartiteGraph & g) -> optional<ForbiddenStructure>
    {
        for (size_t length = 6; length <= g.size(); length += 2)
            if (auto cycle = CycleSearch(g, length).run())
                return ForbiddenStructure{ForbiddenKind::long_induced_cycle, std::move(*cycle)};
        return std::nullopt;
    }

    auto find_pattern(const BipartiteGraph & g, ForbiddenKind kind) -> optional<ForbiddenStructure>
    {
        if (auto emb = EmbeddingSearch(g, pattern(kind)).run())
            return ForbiddenStructure{kind, std::move(*emb)};
        return std::nullopt;
    }
}

auto pattern(ForbiddenKind kind) -> const PatternGraph &
{
    switch (kind) {
    case ForbiddenKind::bipartite_claw: return claw_pattern;
    case ForbiddenKind::bipartite_net: return net_pattern;
    case ForbiddenKind::bipartite_tent: return tent_pattern;
    case ForbiddenKind::long_induced_cycle: break;
    }
    throw InvalidArgument("cycles have no fixed pattern; use cycle_graph()");
}

auto pattern_graph(ForbiddenKind kind) -> BipartiteGraph
{
    const auto & p = pattern(kind);
    BipartiteGraph g;
    for (int i = 1; i <= 4; ++i)
        g.add_vertex("x" + std::to_string(i), Side::first);
    for (int i = 1; i <= 3; ++i)
        g.add_vertex("y" + std::to_string(i), Side::second);
    for (auto [a, b] : p.edges)
        g.add_edge(a, b);
    return g;
}

auto cycle_graph(size_t length) -> BipartiteGraph
{
    if (length < 4 || length % 2 != 0)
        throw InvalidArgument("bipartite cycle length must be even and at least 4");
    BipartiteGraph g;
    for (size_t i = 0; i < length; ++i)
        g.add_vertex("c" + std::to_string(i), i % 2 == 0 ? Side::first : Side::second);
    for (size_t i = 0; i < length; ++i)
        g.add_edge(i, (i + 1) % length);
    return g;
}

auto validate_structure(const BipartiteGraph & g, const ForbiddenStructure & s) -> bool
{
    PatternGraph p = s.kind == ForbiddenKind::long_induced_cycle ? cycle_pattern(s.embedding.size()) : pattern(s.kind);
    if (s.kind == ForbiddenKind::long_induced_cycle && (s.embedding.size() < 6 || s.embedding.size() % 2 != 0))
        return false;
    if (s.embedding.size() != p.vertex_count)
        return false;
    vector<Vertex> sorted = s.embedding;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || (! sorted.empty() && sorted.back() >= g.size()))
        return false;
    auto adj = pattern_adjacency(p);
    for (size_t a = 0; a < p.vertex_count; ++a)
        for (size_t b = a + 1; b < p.vertex_count; ++b)
            if (static_cast<bool>(adj[a][b]) != g.has_edge(s.embedding[a], s.embedding[b]))
                return false;
    return true;
}

auto find_forbidden(const BipartiteGraph & g, size_t guard) -> optional<ForbiddenStructure>
{
    check_guard(g, guard);
    if (auto cycle = find_cycle(g))
        return cycle;
    for (auto kind : {ForbiddenKind::bipartite_claw, ForbiddenKind::bipartite_tent, ForbiddenKind::bipartite_net})
        if (auto hit = find_pattern(g, kind))
            return hit;
    return std::nullopt;
}

auto find_forbidden_kind(const BipartiteGraph & g, ForbiddenKind kind, size_t guard) -> optional<ForbiddenStructure>
{
    check_guard(g, guard);
    if (kind == ForbiddenKind::long_induced_cycle)
        return find_cycle(g);
    return find_pattern(g, kind);
}

auto is_proper_interval_bigraph(const BipartiteGraph & g, size_t guard) -> PibResult
{
    auto hit = find_forbidden(g, guard);
    return PibResult{! hit.has_value(), std::move(hit)};
}

auto is_partite_homomorphism(const BipartiteGraph & g, const BipartiteGraph & target, span<const Vertex> map) -> bool
{
    if (map.size() != g.size())
        throw InvalidArgument("map is not total on the input bipartite graph");
    for (Vertex v = 0; v < g.size(); ++v) {
        if (map[v] >= target.size())
            throw InvalidArgument("map image outside the target bipartite graph");
        if (target.side(map[v]) != g.side(v))
            return false;
    }
    for (auto [u, v] : g.edges())
        if (! target.has_edge(map[u], map[v]))
            return false;
    return true;
}

namespace {
    auto oriented(const BipartiteGraph & g) -> Digraph
    {
        Digraph d;
        for (Vertex v = 0; v < g.size(); ++v)
            d.add_vertex(g.name(v));
        for (auto [s, t] : g.edges())
            d.add_arc(s, t);
        return d;
    }
}

auto digraph_instance_from_bipartite(const BipartiteGraph & g, const Digraph & h, const CostMatrix & bg_costs) -> DigraphInstance
{
    const size_t n = h.size();
    bg_costs.check_shape(g.size(), 2 * n);
    DigraphInstance result{oriented(g), CostMatrix(g.size(), n)};
    for (Vertex u = 0; u < g.size(); ++u) {
        size_t offset = g.side(u) == Side::first ? 0 : n;
        for (Vertex x = 0; x < n; ++x)
            result.costs.set(u, x, bg_costs.at(u, offset + x));
    }
    return result;
}

auto lift_solution(const BipartiteGraph & g, const Digraph & h, span<const Vertex> map) -> vector<Vertex>
{
    if (! is_homomorphism(oriented(g), h, map))
        throw InvalidArgument("lift_solution: map is not a homomorphism of the oriented instance");
    vector<Vertex> lifted(g.size());
    for (Vertex u = 0; u < g.size(); ++u)
        lifted[u] = g.side(u) == Side::first ? map[u] : h.size() + map[u];
    return lifted;
}

auto project_solution(const BipartiteGraph & g, const Digraph & h, span<const Vertex> map) -> vector<Vertex>
{
    if (! is_partite_homomorphism(g, bg(h), map))
        throw InvalidArgument("project_solution: map is not a part-respecting homomorphism into BG(H)");
    vector<Vertex> projected(g.size());
    for (Vertex u = 0; u < g.size(); ++u)
        projected[u] = map[u] % h.size();
    return projected;
}

} // namespace minhom
