#include <minhom/digraph.hpp>
#include <minhom/error.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace minhom {

namespace {
    auto insert_sorted(vector<Vertex> & list, Vertex v) -> bool
    {
        auto it = std::lower_bound(list.begin(), list.end(), v);
        if (it != list.end() && *it == v)
            return false;
        list.insert(it, v);
        return true;
    }

    auto contains_sorted(const vector<Vertex> & list, Vertex v) -> bool
    {
        return std::binary_search(list.begin(), list.end(), v);
    }

    auto numbered(size_t count) -> Digraph
    {
        Digraph g;
        for (size_t i = 1; i <= count; ++i)
            g.add_vertex(std::to_string(i));
        return g;
    }
}

auto is_valid_vertex_name(string_view name) -> bool
{
    if (name.empty())
        return false;
    return std::none_of(name.begin(), name.end(), [](char c) {
        return c == ',' || std::isspace(static_cast<unsigned char>(c));
    });
}

auto Digraph::add_vertex(string_view name) -> Vertex
{
    if (! is_valid_vertex_name(name))
        throw InvalidArgument("invalid vertex name '" + string(name) + "'");
    string key(name);
    if (index_.contains(key))
        throw InvalidArgument("duplicate vertex '" + key + "'");
    Vertex v = names_.size();
    index_.emplace(key, v);
    names_.push_back(std::move(key));
    out_.emplace_back();
    in_.emplace_back();
    return v;
}

auto Digraph::ensure_vertex(string_view name) -> Vertex
{
    if (auto v = find(name))
        return *v;
    return add_vertex(name);
}

auto Digraph::add_arc(Vertex tail, Vertex head) -> bool
{
    if (tail >= size() || head >= size())
        throw InvalidArgument("arc endpoint out of range");
    if (! insert_sorted(out_[tail], head))
        return false;
    insert_sorted(in_[head], tail);
    ++arc_count_;
    return true;
}

auto Digraph::add_arc(string_view tail, string_view head) -> bool
{
    return add_arc(index_of(tail), index_of(head));
}

auto Digraph::find(string_view name) const -> optional<Vertex>
{
    auto it = index_.find(string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

auto Digraph::index_of(string_view name) const -> Vertex
{
    if (auto v = find(name))
        return *v;
    throw InvalidArgument("unknown vertex '" + string(name) + "'");
}

auto Digraph::has_arc(Vertex tail, Vertex head) const -> bool
{
    if (tail >= size() || head >= size())
        return false;
    return contains_sorted(out_[tail], head);
}

auto Digraph::arcs() const -> vector<Arc>
{
    vector<Arc> result;
    result.reserve(arc_count_);
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : out_[u])
            result.push_back({u, v});
    return result;
}

auto Digraph::is_reflexive() const -> bool
{
    for (Vertex v = 0; v < size(); ++v)
        if (! has_loop(v))
            return false;
    return true;
}

auto Digraph::is_loopless() const -> bool
{
    for (Vertex v = 0; v < size(); ++v)
        if (has_loop(v))
            return false;
    return true;
}

auto operator==(const Digraph & a, const Digraph & b) -> bool
{
    return a.names_ == b.names_ && a.out_ == b.out_;
}

UndirectedGraph::UndirectedGraph(vector<string> names) :
    names_(std::move(names)),
    adj_(names_.size())
{
}

auto UndirectedGraph::add_edge(Vertex u, Vertex v) -> bool
{
    if (u >= size() || v >= size())
        throw InvalidArgument("edge endpoint out of range");
    if (! insert_sorted(adj_[u], v))
        return false;
    if (u != v)
        insert_sorted(adj_[v], u);
    ++edge_count_;
    return true;
}

auto UndirectedGraph::has_edge(Vertex u, Vertex v) const -> bool
{
    return u < size() && v < size() && contains_sorted(adj_[u], v);
}

auto UndirectedGraph::edges() const -> vector<std::pair<Vertex, Vertex>>
{
    vector<std::pair<Vertex, Vertex>> result;
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : adj_[u])
            if (u <= v)
                result.emplace_back(u, v);
    return result;
}

auto PartiteStructure::part_of() const -> vector<size_t>
{
    size_t n = 0;
    for (auto & p : parts)
        n += p.size();
    vector<size_t> result(n);
    for (size_t i = 0; i < parts.size(); ++i)
        for (Vertex v : parts[i])
            result.at(v) = i;
    return result;
}

auto converse(const Digraph & h) -> Digraph
{
    Digraph result;
    for (auto & name : h.names())
        result.add_vertex(name);
    for (auto [u, v] : h.arcs())
        result.add_arc(v, u);
    return result;
}

auto reflexive_closure(const Digraph & h) -> Digraph
{
    Digraph result = h;
    for (Vertex v = 0; v < h.size(); ++v)
        result.add_arc(v, v);
    return result;
}

auto induced(const Digraph & h, span<const Vertex> subset) -> Digraph
{
    vector<char> keep(h.size(), 0);
    for (Vertex v : subset) {
        if (v >= h.size())
            throw InvalidArgument("induced: vertex index out of range");
        if (keep[v])
            throw InvalidArgument("induced: repeated vertex '" + h.name(v) + "'");
        keep[v] = 1;
    }
    Digraph result;
    vector<Vertex> image(h.size());
    for (Vertex v = 0; v < h.size(); ++v)
        if (keep[v])
            image[v] = result.add_vertex(h.name(v));
    for (auto [u, v] : h.arcs())
        if (keep[u] && keep[v])
            result.add_arc(image[u], image[v]);
    return result;
}

auto induced(const Digraph & h, const vector<string> & names) -> Digraph
{
    vector<Vertex> subset;
    subset.reserve(names.size());
    for (auto & n : names)
        subset.push_back(h.index_of(n));
    return induced(h, subset);
}

auto underlying_graph(const Digraph & h) -> UndirectedGraph
{
    UndirectedGraph result(h.names());
    for (auto [u, v] : h.arcs())
        result.add_edge(u, v);
    return result;
}

auto components(const Digraph & h) -> vector<vector<Vertex>>
{
    vector<vector<Vertex>> result;
    vector<char> seen(h.size(), 0);
    for (Vertex start = 0; start < h.size(); ++start) {
        if (seen[start])
            continue;
        vector<Vertex> comp;
        vector<Vertex> stack{start};
        seen[start] = 1;
        while (! stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (auto list : {h.out(u), h.in(u)})
                for (Vertex w : list)
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

auto acyclic_ordering(const Digraph & h) -> optional<vector<Vertex>>
{
    vector<size_t> indegree(h.size(), 0);
    for (auto [u, v] : h.arcs())
        if (u != v)
            ++indegree[v];

    std::priority_queue<Vertex, vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < h.size(); ++v)
        if (indegree[v] == 0)
            ready.push(v);

    vector<Vertex> order;
    order.reserve(h.size());
    while (! ready.empty()) {
        Vertex u = ready.top();
        ready.pop();
        order.push_back(u);
        for (Vertex w : h.out(u))
            if (w != u && --indegree[w] == 0)
                ready.push(w);
    }
    if (order.size() != h.size())
        return std::nullopt;
    return order;
}

auto is_acyclic(const Digraph & h) -> bool
{
    return acyclic_ordering(h).has_value();
}

auto partite_structure(const Digraph & h) -> PartiteStructure
{
    const size_t n = h.size();
    vector<size_t> part(n, n);
    vector<vector<Vertex>> parts;
    for (Vertex v = 0; v < n; ++v) {
        if (part[v] != n)
            continue;
        vector<Vertex> members{v};
        part[v] = parts.size();
        for (Vertex w = v + 1; w < n; ++w)
            if (! h.adjacent(v, w)) {
                if (part[w] != n)
                    throw NotMultipartiteTournament("nonadjacency is not transitive at '" + h.name(w) + "'");
                part[w] = parts.size();
                members.push_back(w);
            }
        parts.push_back(std::move(members));
    }

    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u + 1; w < n; ++w) {
            bool forward = h.has_arc(u, w), backward = h.has_arc(w, u);
            if (part[u] == part[w]) {
                if (forward || backward)
                    throw NotMultipartiteTournament(
                        "nonadjacency is not transitive: '" + h.name(u) + "' and '" + h.name(w) + "' share a part but are adjacent");
            }
            else if (forward && backward)
                throw NotMultipartiteTournament("both arcs present between '" + h.name(u) + "' and '" + h.name(w) + "'");
            else if (! forward && ! backward)
                throw NotMultipartiteTournament("nonadjacency is not transitive at '" + h.name(u) + "' and '" + h.name(w) + "'");
        }

    std::stable_sort(parts.begin(), parts.end(), [](const auto & a, const auto & b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.front() < b.front();
    });
    return PartiteStructure{std::move(parts)};
}

auto is_multipartite_tournament(const Digraph & h) -> bool
{
    try {
        partite_structure(h);
        return true;
    }
    catch (const NotMultipartiteTournament &) {
        return false;
    }
}

auto is_tournament_wpl(const Digraph & h) -> bool
{
    for (Vertex u = 0; u < h.size(); ++u)
        for (Vertex w = u + 1; w < h.size(); ++w)
            if (h.has_arc(u, w) == h.has_arc(w, u))
                return false;
    return true;
}

auto make_tt(size_t p) -> Digraph
{
    if (p < 1)
        throw InvalidArgument("TT_p requires p >= 1");
    Digraph g = numbered(p);
    for (Vertex i = 0; i < p; ++i)
        for (Vertex j = i + 1; j < p; ++j)
            g.add_arc(i, j);
    return g;
}

auto make_tt_minus(size_t p) -> Digraph
{
    if (p < 2)
        throw InvalidArgument("TT_p^- requires p >= 2");
    Digraph g = numbered(p);
    for (Vertex i = 0; i < p; ++i)
        for (Vertex j = i + 1; j < p; ++j)
            if (! (i == 0 && j == p - 1))
                g.add_arc(i, j);
    return g;
}

auto make_cycle(size_t k) -> Digraph
{
    if (k < 2)
        throw InvalidArgument("directed cycle requires k >= 2");
    Digraph g = numbered(k);
    for (Vertex i = 0; i < k; ++i)
        g.add_arc(i, (i + 1) % k);
    return g;
}

auto make_oriented_kb(size_t n, size_t m) -> Digraph
{
    if (n < 1 || m < 1)
        throw InvalidArgument("oriented complete bipartite digraph requires n, m >= 1");
    Digraph g = numbered(n + m);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = n; j < n + m; ++j)
            g.add_arc(i, j);
    return g;
}

auto extend(const Digraph & h, span<const size_t> sizes) -> Extension
{
    if (sizes.size() != h.size())
        throw InvalidArgument("extend: one size per vertex required");
    if (! h.is_loopless())
        throw InvalidArgument("extend: base digraph must be loopless");

    Extension ext;
    vector<vector<Vertex>> copies(h.size());
    for (Vertex v = 0; v < h.size(); ++v) {
        if (sizes[v] == 0)
            throw InvalidArgument("extend: size of '" + h.name(v) + "' must be positive");
        for (size_t j = 1; j <= sizes[v]; ++j) {
            copies[v].push_back(ext.graph.add_vertex(h.name(v) + "." + std::to_string(j)));
            ext.origin.push_back(v);
        }
    }
    for (auto [u, v] : h.arcs())
        for (Vertex a : copies[u])
            for (Vertex b : copies[v])
                ext.graph.add_arc(a, b);
    return ext;
}

auto extend(const Digraph & h, const std::map<string, size_t> & sizes) -> Extension
{
    vector<size_t> flat(h.size(), 0);
    vector<char> given(h.size(), 0);
    for (auto & [name, count] : sizes) {
        Vertex v = h.index_of(name);
        flat[v] = count;
        given[v] = 1;
    }
    for (Vertex v = 0; v < h.size(); ++v)
        if (! given[v])
            throw InvalidArgument("extend: no size given for '" + h.name(v) + "'");
    return extend(h, flat);
}

namespace {
    struct Signature {
        size_t out_degree, in_degree;
        bool loop;
        auto operator<=>(const Signature &) const = default;
    };

    auto signature(const Digraph & g, Vertex v) -> Signature
    {
        return {g.out(v).size(), g.in(v).size(), g.has_loop(v)};
    }

    auto extend_isomorphism(const Digraph & a, const Digraph & b, const vector<Signature> & sa, const vector<Signature> & sb,
        vector<Vertex> & image, vector<char> & used, Vertex next) -> bool
    {
        if (next == a.size())
            return true;
        for (Vertex c = 0; c < b.size(); ++c) {
            if (used[c] || sa[next] != sb[c])
                continue;
            bool ok = true;
            for (Vertex prev = 0; prev < next && ok; ++prev)
                ok = a.has_arc(prev, next) == b.has_arc(image[prev], c) && a.has_arc(next, prev) == b.has_arc(c, image[prev]);
            if (! ok)
                continue;
            image[next] = c;
            used[c] = 1;
            if (extend_isomorphism(a, b, sa, sb, image, used, next + 1))
                return true;
            used[c] = 0;
        }
        return false;
    }
}

auto find_isomorphism(const Digraph & a, const Digraph & b) -> optional<vector<Vertex>>
{
    if (a.size() > isomorphism_guard || b.size() > isomorphism_guard)
        throw GuardExceeded("isomorphism test limited to " + std::to_string(isomorphism_guard) + " vertices");
    if (a.size() != b.size() || a.arc_count() != b.arc_count())
        return std::nullopt;

    vector<Signature> sa, sb;
    for (Vertex v = 0; v < a.size(); ++v)
        sa.push_back(signature(a, v));
    for (Vertex v = 0; v < b.size(); ++v)
        sb.push_back(signature(b, v));
    auto sorted_a = sa, sorted_b = sb;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b)
        return std::nullopt;

    vector<Vertex> image(a.size());
    vector<char> used(b.size(), 0);
    if (! extend_isomorphism(a, b, sa, sb, image, used, 0))
        return std::nullopt;
    return image;
}

auto is_isomorphic(const Digraph & a, const Digraph & b) -> bool
{
    return find_isomorphism(a, b).has_value();
}

auto canonical_code(const Digraph & h) -> string
{
    const size_t n = h.size();
    if (n > canonical_code_guard)
        throw GuardExceeded("canonical code limited to " + std::to_string(canonical_code_guard) + " vertices");
    vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    string best;
    string code(n * n, '0');
    do {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                code[i * n + j] = h.has_arc(perm[i], perm[j]) ? '1' : '0';
        if (best.empty() || code < best)
            best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

auto as_directed_cycle(const Digraph & h) -> optional<vector<Vertex>>
{
    const size_t k = h.size();
    if (k < 2 || h.arc_count() != k)
        return std::nullopt;
    for (Vertex v = 0; v < k; ++v)
        if (h.out(v).size() != 1 || h.in(v).size() != 1 || h.has_loop(v))
            return std::nullopt;
    vector<Vertex> order{0};
    for (Vertex v = h.out(0)[0]; v != 0; v = h.out(v)[0])
        order.push_back(v);
    if (order.size() != k)
        return std::nullopt;
    return order;
}

} // namespace minhom
