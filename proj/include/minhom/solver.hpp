#pragma once

#include <minhom/cost.hpp>
#include <minhom/digraph.hpp>
#include <minhom/exec.hpp>
#include <minhom/minmax.hpp>

#include <optional>
#include <string>
#include <vector>

namespace minhom {

enum class Method { bruteforce, minmax, cycle };

auto to_string(Method m) -> std::string;

struct Homomorphism {
    std::vector<Vertex> map;
    Cost cost = 0;
};

struct SolveResult {
    std::optional<Homomorphism> optimum;
    Method method = Method::bruteforce;

    auto feasible() const noexcept -> bool { return optimum.has_value(); }
};

inline constexpr std::uint64_t default_node_budget = 200'000'000;
/// Brute force keeps domains as 64-bit masks.
inline constexpr std::size_t bruteforce_max_target = 64;

struct BruteforceOptions {
    std::uint64_t node_budget = default_node_budget;
    Exec exec = Exec::serial;
};

/// Exact optimum by depth-first search over the input vertices in
/// declaration order with forward checking and a cost lower bound. Returns
/// the lexicographically smallest optimal map. Throws GuardExceeded when the
/// node budget runs out.
auto solve_bruteforce(const Digraph & input, const Digraph & target, const CostMatrix & costs, BruteforceOptions options = {})
    -> SolveResult;

/// Exact optimum via a threshold min-cut network, valid when `order` is a
/// Min-Max ordering of the target. Throws InvalidArgument when it is not,
/// Overflow when the capacities leave the int64 range.
auto solve_minmax(const Digraph & input, const Digraph & target, const Ordering & order, const CostMatrix & costs) -> SolveResult;

/// Exact optimum for the target C_k with vertices 1..k in cycle order
/// (costs have k columns). Fixes one image per component and propagates.
auto solve_cycle(const Digraph & input, std::size_t k, const CostMatrix & costs) -> SolveResult;

/// solve_cycle for a target given as any digraph that is a directed cycle;
/// the map refers to the target's own vertices. Throws InvalidArgument otherwise.
auto solve_cycle_target(const Digraph & input, const Digraph & target, const CostMatrix & costs) -> SolveResult;

/// Costs folded from an extension H' onto its base H: c_v(u) is the minimum
/// of c_w(u) over the copies w of v.
struct CollapsedCosts {
    CostMatrix costs;
    /// choice[u][v]: the copy of v with the smallest cost for input vertex u.
    std::vector<std::vector<Vertex>> choice;

    /// Turns a map into the base digraph back into a map into the extension.
    auto lift(std::span<const Vertex> base_map) const -> std::vector<Vertex>;
};

/// Throws InvalidArgument when `origin` does not describe `extended` as an
/// extension of `base` (see extend()).
auto collapse_extension(const Digraph & extended, const Digraph & base, std::span<const Vertex> origin, const CostMatrix & costs)
    -> CollapsedCosts;

struct AutoOptions {
    std::size_t minmax_guard = default_minmax_guard;
    std::uint64_t node_budget = default_node_budget;
    Exec exec = Exec::parallel;
};

/// Tries the cycle solver, then a Min-Max ordering found by search, then
/// brute force. Throws GuardExceeded naming every guard that fired.
auto solve_auto(const Digraph & input, const Digraph & target, const CostMatrix & costs, AutoOptions options = {}) -> SolveResult;

} // namespace minhom
