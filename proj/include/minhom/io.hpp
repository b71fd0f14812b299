#pragma once

#include <minhom/birep.hpp>
#include <minhom/classify.hpp>
#include <minhom/cost.hpp>
#include <minhom/digraph.hpp>
#include <minhom/solver.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace minhom {

// Line-oriented text formats. '#' starts a comment; blank lines are ignored.
// Parsers throw ParseError carrying the 1-based line number.

/// `v <name>` declares a vertex, `a <tail> <head>` an arc. Arc endpoints
/// are declared on first use.
auto parse_digraph(std::istream & in) -> Digraph;
auto parse_digraph(std::string_view text) -> Digraph;
/// `v` lines in declaration order, then `a` lines sorted by name.
auto write_digraph(std::ostream & out, const Digraph & g) -> void;

/// `p1 <name>` / `p2 <name>` declare vertices, `e <u> <v>` an edge. Edge
/// endpoints must already be declared.
auto parse_bipartite(std::istream & in) -> BipartiteGraph;
auto parse_bipartite(std::string_view text) -> BipartiteGraph;
auto write_bipartite(std::ostream & out, const BipartiteGraph & g) -> void;

/// `c <input-vertex> <target-vertex> <integer>`; missing entries are 0 and
/// duplicates are an error.
auto parse_costs(std::istream & in, const Digraph & input, const Digraph & target) -> CostMatrix;
auto parse_costs(std::string_view text, const Digraph & input, const Digraph & target) -> CostMatrix;

/// `cost <n>` and `map <u> <i>` lines in input declaration order, or `infeasible`.
auto write_solution(std::ostream & out, const Digraph & input, const Digraph & target, const SolveResult & result) -> void;

/// `witness <kind> <vertices...>` with the kind's vertex list.
auto format_witness(const Digraph & h, const Witness & w) -> std::string;
auto format_structure(const BipartiteGraph & g, const ForbiddenStructure & s) -> std::string;

/// `verdict`, `rule`, then `ordering ...` / `witness ...` and `note ...` lines.
auto write_classification(std::ostream & out, const Digraph & h, const Classification & c) -> void;

/// Built-in targets: rc_tt<k>, rc_ttminus<k>, rc_k12, rc_k21, cycle<k>,
/// t5_<B> where B is a comma list such as 11,33 (t5_ or t5_none for no loops).
auto builtin_digraph(std::string_view name) -> std::optional<Digraph>;

} // namespace minhom
