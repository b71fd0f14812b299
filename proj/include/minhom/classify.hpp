#pragma once

#include <minhom/birep.hpp>
#include <minhom/digraph.hpp>
#include <minhom/exec.hpp>
#include <minhom/minmax.hpp>

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace minhom {

/// Induced directed cycle (length >= 3) carrying at least one loop.
struct ReflexiveCycle {
    std::vector<Vertex> cycle;
    Vertex looped;
};

/// Forbidden structure inside BG(H[subset]). Embedding indices refer to
/// bg(induced(h, subset)).
struct BGForbidden {
    std::vector<Vertex> subset;
    ForbiddenStructure structure;
};

using Witness = std::variant<ReflexiveCycle, BGForbidden>;

auto validate_witness(const Digraph & h, const Witness & w) -> bool;

/// Witness search: induced cycles of length 3..min(|V|, 4) with a loop,
/// then every induced subset of at most 4 vertices whose bipartite
/// representation holds a forbidden structure. First hit wins.
auto find_witness(const Digraph & h) -> std::optional<Witness>;

enum class Verdict { poly, np_hard, unknown };

auto to_string(Verdict v) -> std::string;

struct Classification {
    Verdict verdict = Verdict::unknown;
    std::optional<Ordering> ordering;
    std::optional<Witness> witness;
    /// Tag of the rule that produced the verdict: thm4.1, thm4.3, thm5.1, lemma4.2, bg-forbidden, minmax, none.
    std::string rule;
    std::vector<std::string> notes;
};

/// Reflexive multipartite tournament with at least two parts. Reflexive
/// tournaments are delegated to classify_tournament_wpl. Throws
/// InvalidArgument / NotMultipartiteTournament when the premise fails.
auto classify_reflexive_mpt(const Digraph & h) -> Classification;

/// Tournament with possible loops. Throws InvalidArgument otherwise.
auto classify_tournament_wpl(const Digraph & h) -> Classification;

/// Loop indicators for the 4-vertex acyclic 3-partite family; each element is in 1..4.
struct Theorem5Config {
    std::set<int> loops;

    /// Parses "11,33" style lists (empty string = no loops).
    static auto parse(std::string_view text) -> Theorem5Config;
    auto to_string() const -> std::string;
};

/// Vertices 1..4, arcs 12, 23, 34, 14, 24 plus the configured loops.
auto build_theorem5_digraph(const Theorem5Config & cfg) -> Digraph;
auto classify_theorem5(const Theorem5Config & cfg) -> Classification;

/// Sufficient conditions only: witness => np-hard, Min-Max ordering =>
/// poly, otherwise unknown.
auto classify_general(const Digraph & h, std::size_t minmax_guard = default_minmax_guard) -> Classification;

struct EnumeratedTarget {
    Digraph graph;
    std::vector<std::size_t> part_sizes;
};

/// Reflexive multipartite tournaments with exactly `n` vertices and at
/// least two parts, one per isomorphism class, in a deterministic order.
/// Requires n <= canonical_code_guard.
auto enumerate_reflexive_mpts(std::size_t n, Exec exec = Exec::parallel) -> std::vector<EnumeratedTarget>;

} // namespace minhom
