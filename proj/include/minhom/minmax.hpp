#pragma once

#include <minhom/digraph.hpp>
#include <minhom/exec.hpp>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace minhom {

/// A permutation of V(H). `sequence()[k]` is the vertex at position k and
/// `rank(v)` is the position of v (both 0-based).
class Ordering {
public:
    Ordering() = default;
    /// Throws InvalidArgument unless `sequence` is a permutation of 0..n-1.
    explicit Ordering(std::vector<Vertex> sequence);

    static auto identity(std::size_t n) -> Ordering;

    auto size() const noexcept -> std::size_t { return sequence_.size(); }
    auto sequence() const noexcept -> const std::vector<Vertex> & { return sequence_; }
    auto rank(Vertex v) const -> std::size_t { return rank_.at(v); }
    auto reversed() const -> Ordering;

    friend auto operator==(const Ordering &, const Ordering &) -> bool = default;

private:
    std::vector<Vertex> sequence_;
    std::vector<std::size_t> rank_;
};

/// Arcs as position pairs under some ordering.
using PositionPair = std::pair<std::size_t, std::size_t>;

struct ArcPair {
    Arc e;
    Arc f;
    PositionPair min_pair;
    PositionPair max_pair;
    bool nontrivial;
};

auto make_arc_pair(const Ordering & order, Arc e, Arc f) -> ArcPair;

struct MinMaxCheck {
    bool valid;
    /// First violating pair when invalid: arcs are scanned in order of
    /// their position pairs and pairs (e, f) with e before f.
    std::optional<ArcPair> violation;
};

/// Throws InvalidArgument when `order` is not a permutation of V(h).
auto verify_minmax(const Digraph & h, const Ordering & order) -> MinMaxCheck;

inline constexpr std::size_t default_minmax_guard = 9;

/// Lexicographically first Min-Max ordering (by vertex sequence), or
/// nullopt. Throws GuardExceeded above `guard` vertices. The parallel
/// variant splits the search on the first position and returns the same result.
auto find_minmax(const Digraph & h, std::size_t guard = default_minmax_guard, Exec exec = Exec::serial) -> std::optional<Ordering>;

enum class CanonicalFamily { rc_tt, rc_tt_minus, rc_k12, rc_k21 };

struct FamilyMember {
    Digraph graph;
    Ordering ordering;
};

/// The reflexive family digraph together with a Min-Max ordering for it:
/// 1..p for RC(TT_p) and RC(TT_p^-), (2,1,3) for RC(K_{1,2}) and its
/// converse-symmetric counterpart (1,3,2) for RC(K_{2,1}). `p` is ignored
/// for the two K families.
auto canonical_ordering(CanonicalFamily family, std::size_t p = 0) -> FamilyMember;

/// Comma-separated vertex names in sequence order.
auto format_ordering(const Digraph & h, const Ordering & order) -> std::string;
/// Parses a comma-separated list of vertex names of h.
auto parse_ordering(const Digraph & h, std::string_view text) -> Ordering;

} // namespace minhom
