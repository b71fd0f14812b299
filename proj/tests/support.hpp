#pragma once

// Test-side oracles. Everything here is deliberately naive and shares no
// code with the library beyond the data types.

#include <minhom/birep.hpp>
#include <minhom/cost.hpp>
#include <minhom/digraph.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using minhom::BipartiteGraph;
using minhom::Cost;
using minhom::CostMatrix;
using minhom::Digraph;
using minhom::Side;
using minhom::Vertex;

/// dg("1 2 3", "1>2 2>3 3>3")
inline auto dg(const std::string & vertices, const std::string & arcs) -> Digraph
{
    Digraph g;
    std::istringstream vs(vertices), as(arcs);
    for (std::string v; vs >> v;)
        g.add_vertex(v);
    for (std::string a; as >> a;) {
        auto gt = a.find('>');
        g.add_arc(g.index_of(a.substr(0, gt)), g.index_of(a.substr(gt + 1)));
    }
    return g;
}

/// Arc set as a boolean matrix.
inline auto matrix(const Digraph & h) -> std::vector<std::vector<bool>>
{
    std::vector<std::vector<bool>> m(h.size(), std::vector<bool>(h.size(), false));
    for (Vertex u = 0; u < h.size(); ++u)
        for (Vertex v = 0; v < h.size(); ++v)
            m[u][v] = h.has_arc(u, v);
    return m;
}

/// Every digraph on vertices 1..n, loops included: 2^(n*n) of them.
inline auto all_digraphs(std::size_t n) -> std::vector<Digraph>
{
    std::vector<Digraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
        Digraph g;
        for (std::size_t i = 1; i <= n; ++i)
            g.add_vertex(std::to_string(i));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (mask >> (u * n + v) & 1)
                    g.add_arc(u, v);
        out.push_back(std::move(g));
    }
    return out;
}

inline auto random_digraph(std::mt19937_64 & rng, std::size_t n, double arc_p, double loop_p) -> Digraph
{
    Digraph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_vertex("d" + std::to_string(i));
    std::bernoulli_distribution arc(arc_p), loop(loop_p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u == v ? loop(rng) : arc(rng))
                g.add_arc(u, v);
    return g;
}

inline auto random_costs(std::mt19937_64 & rng, std::size_t rows, std::size_t cols, Cost lo = -9, Cost hi = 9) -> CostMatrix
{
    CostMatrix c(rows, cols);
    std::uniform_int_distribution<Cost> d(lo, hi);
    for (Vertex u = 0; u < rows; ++u)
        for (Vertex i = 0; i < cols; ++i)
            c.set(u, i, d(rng));
    return c;
}

struct Optimum {
    std::optional<Cost> cost;
    std::vector<Vertex> map;
};

/// Every map D -> H, in lexicographic order.
inline auto naive_optimum(const Digraph & d, const Digraph & h, const CostMatrix & costs) -> Optimum
{
    Optimum best;
    const std::size_t n = d.size(), p = h.size();
    if (n == 0)
        return Optimum{0, {}};
    if (p == 0)
        return best;
    auto dm = matrix(d), hm = matrix(h);
    std::vector<Vertex> f(n, 0);
    while (true) {
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u)
            for (Vertex v = 0; v < n && ok; ++v)
                if (dm[u][v] && ! hm[f[u]][f[v]])
                    ok = false;
        if (ok) {
            Cost c = 0;
            for (Vertex u = 0; u < n; ++u)
                c += costs.at(u, f[u]);
            if (! best.cost || c < *best.cost)
                best = Optimum{c, f};
        }
        std::size_t i = n;
        while (i > 0 && f[i - 1] == p - 1)
            f[--i] = 0;
        if (i == 0)
            break;
        ++f[i - 1];
    }
    return best;
}

/// Min-Max condition straight from the definition, over all ordered pairs
/// of arcs. `seq[k]` is the vertex at position k.
inline auto naive_is_minmax(const Digraph & h, const std::vector<Vertex> & seq) -> bool
{
    const std::size_t p = h.size();
    std::vector<std::vector<bool>> r(p, std::vector<bool>(p, false));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            r[i][j] = h.has_arc(seq[i], seq[j]);
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b)
            if (r[a][b])
                for (std::size_t c = 0; c < p; ++c)
                    for (std::size_t d = 0; d < p; ++d)
                        if (r[c][d] && ! (r[std::min(a, c)][std::min(b, d)] && r[std::max(a, c)][std::max(b, d)]))
                            return false;
    return true;
}

inline auto naive_first_minmax(const Digraph & h) -> std::optional<std::vector<Vertex>>
{
    std::vector<Vertex> seq(h.size());
    std::iota(seq.begin(), seq.end(), 0);
    do
        if (naive_is_minmax(h, seq))
            return seq;
    while (std::next_permutation(seq.begin(), seq.end()));
    return std::nullopt;
}

/// Lexicographically least adjacency string over all relabellings.
inline auto naive_canonical(const Digraph & h) -> std::string
{
    auto m = matrix(h);
    std::vector<Vertex> perm(h.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        for (Vertex i = 0; i < h.size(); ++i)
            for (Vertex j = 0; j < h.size(); ++j)
                s += m[perm[i]][perm[j]] ? '1' : '0';
        if (best.empty() || s < best)
            best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Strong ordering of both sides: x < x', y < y', xy' and x'y edges imply xy
/// and x'y' edges. Exists exactly for proper interval bigraphs.
inline auto has_strong_ordering(const BipartiteGraph & g) -> bool
{
    auto xs = g.part(Side::first), ys = g.part(Side::second);
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    do {
        auto ys_perm = ys;
        do {
            bool ok = true;
            for (std::size_t a = 0; a < xs.size() && ok; ++a)
                for (std::size_t b = a + 1; b < xs.size() && ok; ++b)
                    for (std::size_t c = 0; c < ys_perm.size() && ok; ++c)
                        for (std::size_t d = c + 1; d < ys_perm.size() && ok; ++d)
                            if (g.has_edge(xs[a], ys_perm[d]) && g.has_edge(xs[b], ys_perm[c])
                                && ! (g.has_edge(xs[a], ys_perm[c]) && g.has_edge(xs[b], ys_perm[d])))
                                ok = false;
            if (ok)
                return true;
        } while (std::next_permutation(ys_perm.begin(), ys_perm.end()));
    } while (std::next_permutation(xs.begin(), xs.end()));
    return false;
}

inline auto names_1_to(std::size_t n) -> std::string
{
    std::string s;
    for (std::size_t i = 1; i <= n; ++i)
        s += std::to_string(i) + " ";
    return s;
}

inline auto reflexive_arcs(std::size_t n) -> std::string
{
    std::string s;
    for (std::size_t i = 1; i <= n; ++i)
        s += std::to_string(i) + ">" + std::to_string(i) + " ";
    return s;
}

/// The four polynomial families, built from their arc lists.
inline auto family_rc_tt(std::size_t k) -> Digraph
{
    std::string arcs = reflexive_arcs(k);
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = i + 1; j <= k; ++j)
            arcs += std::to_string(i) + ">" + std::to_string(j) + " ";
    return dg(names_1_to(k), arcs);
}

inline auto family_rc_tt_minus(std::size_t p) -> Digraph
{
    std::string arcs = reflexive_arcs(p);
    for (std::size_t i = 1; i <= p; ++i)
        for (std::size_t j = i + 1; j <= p; ++j)
            if (! (i == 1 && j == p))
                arcs += std::to_string(i) + ">" + std::to_string(j) + " ";
    return dg(names_1_to(p), arcs);
}

inline auto family_rc_k12() -> Digraph { return dg("1 2 3", "1>1 2>2 3>3 1>2 1>3"); }
inline auto family_rc_k21() -> Digraph { return dg("1 2 3", "1>1 2>2 3>3 1>3 2>3"); }

/// Ground truth for the reflexive multipartite tournament dichotomy.
inline auto in_poly_family(const Digraph & h) -> bool
{
    const std::size_t n = h.size();
    std::string code = naive_canonical(h);
    if (code == naive_canonical(family_rc_tt(n)))
        return true;
    if (n >= 3 && code == naive_canonical(family_rc_tt_minus(n)))
        return true;
    return n == 3 && (code == naive_canonical(family_rc_k12()) || code == naive_canonical(family_rc_k21()));
}

/// All reflexive multipartite tournaments on n vertices with at least two
/// parts, one per isomorphism class: every assignment of the four states
/// (none, forward, backward) to vertex pairs, filtered.
inline auto all_reflexive_mpts(std::size_t n) -> std::map<std::string, Digraph>
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    std::map<std::string, Digraph> out;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::vector<int>> state(n, std::vector<int>(n, 0));
        auto c = code;
        for (auto [i, j] : pairs) {
            state[i][j] = int(c % 3); // 0 none, 1 i->j, 2 j->i
            state[j][i] = state[i][j] == 0 ? 0 : 3 - state[i][j];
            c /= 3;
        }
        // non-adjacency must be an equivalence relation
        bool ok = true;
        for (Vertex a = 0; a < n && ok; ++a)
            for (Vertex b = 0; b < n && ok; ++b)
                for (Vertex d = 0; d < n && ok; ++d)
                    if (a != b && b != d && a != d && state[a][b] == 0 && state[b][d] == 0 && state[a][d] != 0)
                        ok = false;
        if (! ok)
            continue;
        bool some_arc = false;
        for (auto [i, j] : pairs)
            some_arc = some_arc || state[i][j] != 0;
        if (! some_arc)
            continue;
        Digraph g = dg(names_1_to(n), reflexive_arcs(n));
        for (auto [i, j] : pairs) {
            if (state[i][j] == 1)
                g.add_arc(i, j);
            else if (state[i][j] == 2)
                g.add_arc(j, i);
        }
        out.emplace(naive_canonical(g), g);
    }
    return out;
}

} // namespace oracle
