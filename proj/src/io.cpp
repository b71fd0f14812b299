#include <minhom/error.hpp>
#include <minhom/io.hpp>

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace minhom {

namespace {
    struct Line {
        size_t number;
        vector<string> tokens;
    };

    // Tokenised non-blank, non-comment lines.
    auto read_lines(std::istream & in) -> vector<Line>
    {
        vector<Line> out;
        string raw;
        size_t number = 0;
        while (std::getline(in, raw)) {
            ++number;
            if (auto hash = raw.find('#'); hash != string::npos)
                raw.erase(hash);
            std::istringstream words(raw);
            Line line{number, {}};
            for (string w; words >> w;)
                line.tokens.push_back(std::move(w));
            if (! line.tokens.empty())
                out.push_back(std::move(line));
        }
        return out;
    }

    auto expect_arity(const Line & line, size_t count) -> void
    {
        if (line.tokens.size() != count)
            throw ParseError("'" + line.tokens[0] + "' expects " + std::to_string(count - 1) + " argument(s)", line.number);
    }

    template <typename F>
    auto at_line(size_t number, F && f) -> decltype(f())
    {
        try {
            return f();
        }
        catch (const ParseError &) {
            throw;
        }
        catch (const Error & e) {
            throw ParseError(e.what(), number);
        }
    }

    auto sorted_by_names(vector<std::pair<string, string>> pairs) -> vector<std::pair<string, string>>
    {
        std::sort(pairs.begin(), pairs.end());
        return pairs;
    }

    auto parse_size(string_view text) -> std::optional<size_t>
    {
        size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
            return std::nullopt;
        return value;
    }
}

auto parse_digraph(std::istream & in) -> Digraph
{
    Digraph g;
    for (const auto & line : read_lines(in)) {
        const string & kw = line.tokens[0];
        if (kw == "v") {
            expect_arity(line, 2);
            at_line(line.number, [&] { return g.add_vertex(line.tokens[1]); });
        }
        else if (kw == "a") {
            expect_arity(line, 3);
            at_line(line.number, [&] {
                Vertex tail = g.ensure_vertex(line.tokens[1]);
                return g.add_arc(tail, g.ensure_vertex(line.tokens[2]));
            });
        }
        else
            throw ParseError("unknown directive '" + kw + "'", line.number);
    }
    return g;
}

auto parse_digraph(string_view text) -> Digraph
{
    std::istringstream in{string(text)};
    return parse_digraph(in);
}

auto write_digraph(std::ostream & out, const Digraph & g) -> void
{
    for (auto & name : g.names())
        out << "v " << name << '\n';
    vector<std::pair<string, string>> arcs;
    for (auto [u, v] : g.arcs())
        arcs.emplace_back(g.name(u), g.name(v));
    for (auto & [t, h] : sorted_by_names(std::move(arcs)))
        out << "a " << t << ' ' << h << '\n';
}

auto parse_bipartite(std::istream & in) -> BipartiteGraph
{
    BipartiteGraph g;
    for (const auto & line : read_lines(in)) {
        const string & kw = line.tokens[0];
        if (kw == "p1" || kw == "p2") {
            expect_arity(line, 2);
            at_line(line.number, [&] { return g.add_vertex(line.tokens[1], kw == "p1" ? Side::first : Side::second); });
        }
        else if (kw == "e") {
            expect_arity(line, 3);
            at_line(line.number, [&] { return g.add_edge(line.tokens[1], line.tokens[2]); });
        }
        else
            throw ParseError("unknown directive '" + kw + "'", line.number);
    }
    return g;
}

auto parse_bipartite(string_view text) -> BipartiteGraph
{
    std::istringstream in{string(text)};
    return parse_bipartite(in);
}

auto write_bipartite(std::ostream & out, const BipartiteGraph & g) -> void
{
    for (Vertex v : g.part(Side::first))
        out << "p1 " << g.name(v) << '\n';
    for (Vertex v : g.part(Side::second))
        out << "p2 " << g.name(v) << '\n';
    vector<std::pair<string, string>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(g.name(u), g.name(v));
    for (auto & [a, b] : sorted_by_names(std::move(edges)))
        out << "e " << a << ' ' << b << '\n';
}

auto parse_costs(std::istream & in, const Digraph & input, const Digraph & target) -> CostMatrix
{
    CostMatrix costs(input.size(), target.size());
    vector<char> seen(input.size() * target.size(), 0);
    for (const auto & line : read_lines(in)) {
        if (line.tokens[0] != "c")
            throw ParseError("unknown directive '" + line.tokens[0] + "'", line.number);
        expect_arity(line, 4);
        auto u = at_line(line.number, [&] { return input.index_of(line.tokens[1]); });
        auto i = at_line(line.number, [&] { return target.index_of(line.tokens[2]); });
        const string & text = line.tokens[3];
        Cost value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw ParseError("cost '" + text + "' is not a 64-bit integer", line.number);
        char & flag = seen[u * target.size() + i];
        if (flag)
            throw ParseError("duplicate cost for (" + line.tokens[1] + ", " + line.tokens[2] + ")", line.number);
        flag = 1;
        costs.set(u, i, value);
    }
    return costs;
}

auto parse_costs(string_view text, const Digraph & input, const Digraph & target) -> CostMatrix
{
    std::istringstream in{string(text)};
    return parse_costs(in, input, target);
}

auto write_solution(std::ostream & out, const Digraph & input, const Digraph & target, const SolveResult & result) -> void
{
    if (! result.optimum) {
        out << "infeasible\n";
        return;
    }
    out << "cost " << result.optimum->cost << '\n';
    for (Vertex u = 0; u < input.size(); ++u)
        out << "map " << input.name(u) << ' ' << target.name(result.optimum->map[u]) << '\n';
}

auto format_structure(const BipartiteGraph & g, const ForbiddenStructure & s) -> string
{
    string out = "witness " + to_string(s.kind);
    for (Vertex v : s.embedding)
        out += " " + g.name(v);
    return out;
}

auto format_witness(const Digraph & h, const Witness & w) -> string
{
    if (auto rc = std::get_if<ReflexiveCycle>(&w)) {
        string out = "witness reflexive-cycle";
        for (Vertex v : rc->cycle)
            out += " " + h.name(v);
        return out + " looped " + h.name(rc->looped);
    }
    const auto & bf = std::get<BGForbidden>(w);
    vector<Vertex> sorted = bf.subset;
    std::sort(sorted.begin(), sorted.end());
    BipartiteGraph rep = bg(induced(h, sorted));
    string out = "witness " + to_string(bf.structure.kind) + " subset";
    for (Vertex v : sorted)
        out += " " + h.name(v);
    out += " embedding";
    for (Vertex v : bf.structure.embedding)
        out += " " + rep.name(v);
    return out;
}

auto write_classification(std::ostream & out, const Digraph & h, const Classification & c) -> void
{
    out << "verdict " << to_string(c.verdict) << '\n';
    out << "rule " << c.rule << '\n';
    if (c.ordering)
        out << "ordering " << format_ordering(h, *c.ordering) << '\n';
    if (c.witness)
        out << format_witness(h, *c.witness) << '\n';
    for (auto & note : c.notes)
        out << "note " << note << '\n';
}

auto builtin_digraph(string_view name) -> std::optional<Digraph>
{
    auto suffix_number = [&](string_view prefix) -> std::optional<size_t> {
        if (! name.starts_with(prefix))
            return std::nullopt;
        return parse_size(name.substr(prefix.size()));
    };
    if (name == "rc_k12")
        return reflexive_closure(make_oriented_kb(1, 2));
    if (name == "rc_k21")
        return reflexive_closure(make_oriented_kb(2, 1));
    if (auto k = suffix_number("rc_ttminus"))
        return reflexive_closure(make_tt_minus(*k));
    if (auto k = suffix_number("rc_tt"))
        return reflexive_closure(make_tt(*k));
    if (auto k = suffix_number("cycle"))
        return make_cycle(*k);
    if (name.starts_with("t5_"))
        return build_theorem5_digraph(Theorem5Config::parse(name.substr(3)));
    return std::nullopt;
}

} // namespace minhom
