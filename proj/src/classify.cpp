#include <minhom/classify.hpp>
#include <minhom/error.hpp>

#include <algorithm>
#include <map>
#include <numeric>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace minhom {

auto to_string(Verdict v) -> string
{
    switch (v) {
    case Verdict::poly: return "poly";
    case Verdict::np_hard: return "np-hard";
    case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

namespace {
    // Exactly the cycle arcs among the listed vertices, ignoring loops.
    auto is_induced_cycle(const Digraph & h, const vector<Vertex> & cycle) -> bool
    {
        const size_t len = cycle.size();
        for (size_t a = 0; a < len; ++a)
            for (size_t b = 0; b < len; ++b) {
                if (a == b)
                    continue;
                bool expected = b == (a + 1) % len;
                if (h.has_arc(cycle[a], cycle[b]) != expected)
                    return false;
            }
        return true;
    }

    auto find_reflexive_cycle(const Digraph & h, size_t len) -> optional<ReflexiveCycle>
    {
        const size_t n = h.size();
        vector<Vertex> cycle(len);
        // cycle[0] is the smallest vertex; the rest follow arcs.
        auto rec = [&](auto & self, size_t depth) -> bool {
            if (depth == len) {
                if (! h.has_arc(cycle[len - 1], cycle[0]) || ! is_induced_cycle(h, cycle))
                    return false;
                return std::any_of(cycle.begin(), cycle.end(), [&](Vertex v) { return h.has_loop(v); });
            }
            for (Vertex w : h.out(cycle[depth - 1])) {
                if (w <= cycle[0] || std::find(cycle.begin(), cycle.begin() + depth, w) != cycle.begin() + depth)
                    continue;
                cycle[depth] = w;
                if (self(self, depth + 1))
                    return true;
            }
            return false;
        };
        for (Vertex start = 0; start < n; ++start) {
            cycle[0] = start;
            if (rec(rec, 1)) {
                Vertex looped = *std::find_if(cycle.begin(), cycle.end(), [&](Vertex v) { return h.has_loop(v); });
                return ReflexiveCycle{cycle, looped};
            }
        }
        return std::nullopt;
    }

    auto in_one_component(const BipartiteGraph & g, const vector<Vertex> & vertices) -> bool
    {
        for (const auto & comp : g.components())
            if (std::includes(comp.begin(), comp.end(), vertices.begin(), vertices.end()))
                return true;
        return vertices.empty();
    }

    // Calls `visit` on every k-subset of 0..n-1 in lexicographic order until it returns true.
    template <typename Visit>
    auto for_each_subset(size_t n, size_t k, Visit && visit) -> bool
    {
        if (k > n)
            return false;
        vector<Vertex> subset(k);
        std::iota(subset.begin(), subset.end(), 0);
        while (true) {
            if (visit(subset))
                return true;
            size_t i = k;
            while (i > 0 && subset[i - 1] == n - k + i - 1)
                --i;
            if (i == 0)
                return false;
            ++subset[i - 1];
            for (size_t j = i; j < k; ++j)
                subset[j] = subset[j - 1] + 1;
        }
    }

    constexpr size_t witness_subset_cap = 4;
}

auto validate_witness(const Digraph & h, const Witness & w) -> bool
{
    if (auto rc = std::get_if<ReflexiveCycle>(&w)) {
        const auto & c = rc->cycle;
        if (c.size() < 3)
            return false;
        vector<Vertex> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.back() >= h.size())
            return false;
        if (std::find(c.begin(), c.end(), rc->looped) == c.end() || ! h.has_loop(rc->looped))
            return false;
        return is_induced_cycle(h, c);
    }

    const auto & bf = std::get<BGForbidden>(w);
    vector<Vertex> sorted = bf.subset;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.back() >= h.size())
        return false;
    BipartiteGraph rep = bg(induced(h, sorted));
    if (! validate_structure(rep, bf.structure))
        return false;
    vector<Vertex> used = bf.structure.embedding;
    std::sort(used.begin(), used.end());
    return in_one_component(rep, used);
}

auto find_witness(const Digraph & h) -> optional<Witness>
{
    for (size_t len = 3; len <= std::min<size_t>(h.size(), 4); ++len)
        if (auto rc = find_reflexive_cycle(h, len))
            return Witness{*rc};

    optional<Witness> found;
    for (size_t k = 1; k <= std::min(h.size(), witness_subset_cap) && ! found; ++k)
        for_each_subset(h.size(), k, [&](const vector<Vertex> & subset) {
            BipartiteGraph rep = bg(induced(h, subset));
            auto hit = find_forbidden(rep);
            if (! hit)
                return false;
            vector<Vertex> used = hit->embedding;
            std::sort(used.begin(), used.end());
            if (! in_one_component(rep, used))
                return false;
            found = Witness{BGForbidden{subset, std::move(*hit)}};
            return true;
        });
    return found;
}

namespace {
    auto hardness_rule(const Witness & w) -> string
    {
        return std::holds_alternative<ReflexiveCycle>(w) ? "lemma4.2" : "bg-forbidden";
    }

    // Ordering of h pulled back through an isomorphism h -> family member.
    auto pull_back(const FamilyMember & member, const vector<Vertex> & iso) -> Ordering
    {
        vector<Vertex> inverse(iso.size());
        for (Vertex v = 0; v < iso.size(); ++v)
            inverse[iso[v]] = v;
        vector<Vertex> seq;
        for (Vertex m : member.ordering.sequence())
            seq.push_back(inverse[m]);
        return Ordering(std::move(seq));
    }

    // h is RC(TT_n^-) (n >= 3) iff its unique acyclic ordering o has every
    // forward arc except o_first -> o_last.
    auto match_tt_minus(const Digraph & h) -> optional<Ordering>
    {
        const size_t n = h.size();
        if (n < 3 || ! h.is_reflexive())
            return std::nullopt;
        auto order = acyclic_ordering(h);
        if (! order)
            return std::nullopt;
        const auto & o = *order;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                bool expected = i < j && ! (i == 0 && j == n - 1);
                if (h.has_arc(o[i], o[j]) != expected)
                    return std::nullopt;
            }
        return Ordering(o);
    }

    auto match_family(const Digraph & h, CanonicalFamily family, size_t p) -> optional<Ordering>
    {
        if (h.size() > isomorphism_guard) {
            if (family == CanonicalFamily::rc_tt_minus)
                return match_tt_minus(h);
            return std::nullopt;
        }
        FamilyMember member = canonical_ordering(family, p);
        auto iso = find_isomorphism(h, member.graph);
        if (! iso)
            return std::nullopt;
        return pull_back(member, *iso);
    }

    auto attach_hardness(Classification & c, const Digraph & h) -> void
    {
        c.witness = find_witness(h);
        if (! c.witness)
            c.notes.push_back("no witness found by the bounded search");
    }
}

auto classify_tournament_wpl(const Digraph & h) -> Classification
{
    if (! is_tournament_wpl(h))
        throw InvalidArgument("target is not a tournament with possible loops");

    Classification c;
    c.rule = "thm4.3";
    if (auto order = acyclic_ordering(h)) {
        c.verdict = Verdict::poly;
        Ordering candidate(*order);
        if (verify_minmax(h, candidate).valid)
            c.ordering = candidate;
        else if (h.size() <= default_minmax_guard)
            c.ordering = find_minmax(h);
        if (! c.ordering)
            c.notes.push_back("no Min-Max ordering certificate");
        return c;
    }
    if (h.size() == 3 && h.is_loopless()) {
        c.verdict = Verdict::poly;
        c.notes.push_back("directed 3-cycle: solved by the cycle solver");
        return c;
    }
    c.verdict = Verdict::np_hard;
    attach_hardness(c, h);
    return c;
}

auto classify_reflexive_mpt(const Digraph & h) -> Classification
{
    if (! h.is_reflexive())
        throw InvalidArgument("target is not reflexive");
    PartiteStructure ps = partite_structure(h);
    if (ps.part_count() < 2)
        throw InvalidArgument("target has fewer than two partite sets");
    if (ps.part_count() == h.size())
        return classify_tournament_wpl(h);

    const size_t n = h.size(), k = ps.part_count();
    vector<std::pair<CanonicalFamily, size_t>> candidates;
    if (n == k + 1)
        candidates.emplace_back(CanonicalFamily::rc_tt_minus, n);
    if (n == 3) {
        candidates.emplace_back(CanonicalFamily::rc_k12, 0);
        candidates.emplace_back(CanonicalFamily::rc_k21, 0);
    }

    Classification c;
    c.rule = "thm4.1";
    for (auto [family, p] : candidates)
        if (auto order = match_family(h, family, p)) {
            if (! verify_minmax(h, *order).valid)
                throw InternalError("canonical ordering failed verification after transport");
            c.verdict = Verdict::poly;
            c.ordering = std::move(order);
            return c;
        }
    c.verdict = Verdict::np_hard;
    attach_hardness(c, h);
    return c;
}

auto Theorem5Config::parse(std::string_view text) -> Theorem5Config
{
    Theorem5Config cfg;
    if (text.empty() || text == "none")
        return cfg;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (token.size() != 2 || token[0] != token[1] || token[0] < '1' || token[0] > '4')
            throw InvalidArgument("loop symbol '" + string(token) + "' is not one of 11, 22, 33, 44");
        cfg.loops.insert(token[0] - '0');
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return cfg;
}

auto Theorem5Config::to_string() const -> string
{
    string out;
    for (int v : loops) {
        if (! out.empty())
            out += ',';
        out += std::to_string(v * 11);
    }
    return out.empty() ? "none" : out;
}

auto build_theorem5_digraph(const Theorem5Config & cfg) -> Digraph
{
    Digraph h;
    for (int i = 1; i <= 4; ++i)
        h.add_vertex(std::to_string(i));
    for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {3, 4}, {1, 4}, {2, 4}})
        h.add_arc(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    for (int v : cfg.loops) {
        if (v < 1 || v > 4)
            throw InvalidArgument("loop vertex out of range");
        h.add_arc(static_cast<Vertex>(v - 1), static_cast<Vertex>(v - 1));
    }
    return h;
}

auto classify_theorem5(const Theorem5Config & cfg) -> Classification
{
    Digraph h = build_theorem5_digraph(cfg);
    Classification c;
    c.rule = "thm5.1";
    if (cfg.loops.contains(3) && ! cfg.loops.contains(4)) {
        c.verdict = Verdict::poly;
        c.ordering = find_minmax(h);
        if (! c.ordering)
            c.notes.push_back("no Min-Max ordering exists for this target");
    }
    else {
        c.verdict = Verdict::np_hard;
        attach_hardness(c, h);
    }
    return c;
}

auto classify_general(const Digraph & h, size_t minmax_guard) -> Classification
{
    Classification c;
    if (auto w = find_witness(h)) {
        c.verdict = Verdict::np_hard;
        c.rule = hardness_rule(*w);
        c.witness = std::move(w);
        return c;
    }
    if (h.size() <= minmax_guard) {
        if (auto order = find_minmax(h, minmax_guard, Exec::parallel)) {
            c.verdict = Verdict::poly;
            c.rule = "minmax";
            c.ordering = std::move(order);
            return c;
        }
    }
    else
        c.notes.push_back("minmax search skipped: " + std::to_string(h.size()) + " vertices exceed the guard of " + std::to_string(minmax_guard));
    c.verdict = Verdict::unknown;
    c.rule = "none";
    return c;
}

namespace {
    inline constexpr size_t enumeration_guard = 6;

    // Nondecreasing part-size lists with at least two parts, in lexicographic order.
    auto partitions(size_t n) -> vector<vector<size_t>>
    {
        vector<vector<size_t>> out;
        vector<size_t> cur;
        auto rec = [&](auto & self, size_t remaining, size_t min_part) -> void {
            if (remaining == 0) {
                if (cur.size() >= 2)
                    out.push_back(cur);
                return;
            }
            for (size_t s = min_part; s <= remaining; ++s) {
                cur.push_back(s);
                self(self, remaining - s, s);
                cur.pop_back();
            }
        };
        rec(rec, n, 1);
        return out;
    }
}

auto enumerate_reflexive_mpts(size_t n, Exec exec) -> vector<EnumeratedTarget>
{
    if (n > enumeration_guard)
        throw GuardExceeded("enumeration limited to " + std::to_string(enumeration_guard) + " vertices");

    vector<EnumeratedTarget> result;
    for (const auto & sizes : partitions(n)) {
        vector<size_t> part(n);
        for (size_t p = 0, v = 0; p < sizes.size(); ++p)
            for (size_t j = 0; j < sizes[p]; ++j)
                part[v++] = p;
        vector<std::pair<Vertex, Vertex>> cross;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (part[a] != part[b])
                    cross.emplace_back(a, b);

        auto build = [&](unsigned long mask) {
            Digraph g;
            for (size_t i = 1; i <= n; ++i)
                g.add_vertex(std::to_string(i));
            for (size_t e = 0; e < cross.size(); ++e) {
                auto [a, b] = cross[e];
                if ((mask >> e) & 1)
                    g.add_arc(b, a);
                else
                    g.add_arc(a, b);
            }
            return reflexive_closure(g);
        };

        const long count = 1L << cross.size();
        vector<string> codes(static_cast<size_t>(count));
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
            for (long mask = 0; mask < count; ++mask)
                codes[mask] = canonical_code(build(static_cast<unsigned long>(mask)));
        }
        else {
            for (long mask = 0; mask < count; ++mask)
                codes[mask] = canonical_code(build(static_cast<unsigned long>(mask)));
        }

        std::map<string, long> first_seen;
        for (long mask = 0; mask < count; ++mask)
            first_seen.emplace(codes[mask], mask);
        vector<long> keep;
        for (auto & [code, mask] : first_seen)
            keep.push_back(mask);
        std::sort(keep.begin(), keep.end());
        for (long mask : keep)
            result.push_back({build(static_cast<unsigned long>(mask)), sizes});
    }
    return result;
}

} // namespace minhom
