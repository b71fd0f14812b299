#include <minhom/error.hpp>
#include <minhom/minmax.hpp>

#include <algorithm>
#include <numeric>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace minhom {

Ordering::Ordering(vector<Vertex> sequence) : sequence_(std::move(sequence)), rank_(sequence_.size(), sequence_.size())
{
    for (size_t pos = 0; pos < sequence_.size(); ++pos) {
        Vertex v = sequence_[pos];
        if (v >= sequence_.size() || rank_[v] != sequence_.size())
            throw InvalidArgument("ordering is not a permutation");
        rank_[v] = pos;
    }
}

auto Ordering::identity(size_t n) -> Ordering
{
    vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    return Ordering(std::move(seq));
}

auto Ordering::reversed() const -> Ordering
{
    return Ordering(vector<Vertex>(sequence_.rbegin(), sequence_.rend()));
}

namespace {
    struct PairBounds {
        PositionPair lo, hi;
        bool nontrivial;
    };

    auto bounds(PositionPair a, PositionPair b) -> PairBounds
    {
        PositionPair lo{std::min(a.first, b.first), std::min(a.second, b.second)};
        PositionPair hi{std::max(a.first, b.first), std::max(a.second, b.second)};
        bool trivial = (lo == a && hi == b) || (lo == b && hi == a);
        return {lo, hi, ! trivial};
    }

    // Arc relation over positions: has(i, j) iff the vertices at positions i, j form an arc.
    auto pair_ok(const Digraph & h, const vector<Vertex> & seq, PositionPair a, PositionPair b) -> bool
    {
        auto [lo, hi, nontrivial] = bounds(a, b);
        return ! nontrivial || (h.has_arc(seq[lo.first], seq[lo.second]) && h.has_arc(seq[hi.first], seq[hi.second]));
    }

    class MinMaxSearch {
    public:
        MinMaxSearch(const Digraph & h) : h_(h), rank_(h.size(), unplaced) {}

        auto run_from(Vertex first) -> optional<Ordering>
        {
            seq_.clear();
            arcs_.clear();
            std::fill(rank_.begin(), rank_.end(), unplaced);
            if (place(first) && search())
                return Ordering(seq_);
            return std::nullopt;
        }

    private:
        static constexpr size_t unplaced = static_cast<size_t>(-1);

        // Places v at the next position; false (and undone) if a fully
        // placed non-trivial pair now fails.
        auto place(Vertex v) -> bool
        {
            size_t pos = seq_.size();
            seq_.push_back(v);
            rank_[v] = pos;
            size_t old_arcs = arcs_.size();
            for (Vertex w : h_.out(v))
                if (rank_[w] != unplaced)
                    arcs_.emplace_back(pos, rank_[w]);
            for (Vertex w : h_.in(v))
                if (rank_[w] != unplaced && w != v)
                    arcs_.emplace_back(rank_[w], pos);

            for (size_t a = old_arcs; a < arcs_.size(); ++a)
                for (size_t b = 0; b < a; ++b)
                    if (! pair_ok(h_, seq_, arcs_[a], arcs_[b])) {
                        unplace(old_arcs);
                        return false;
                    }
            return true;
        }

        auto unplace(size_t old_arcs) -> void
        {
            arcs_.resize(old_arcs);
            rank_[seq_.back()] = unplaced;
            seq_.pop_back();
        }

        auto search() -> bool
        {
            if (seq_.size() == h_.size())
                return true;
            for (Vertex v = 0; v < h_.size(); ++v) {
                if (rank_[v] != unplaced)
                    continue;
                size_t old_arcs = arcs_.size();
                if (! place(v))
                    continue;
                if (search())
                    return true;
                unplace(old_arcs);
            }
            return false;
        }

        const Digraph & h_;
        vector<Vertex> seq_;
        vector<size_t> rank_;
        vector<PositionPair> arcs_;
    };
}

auto make_arc_pair(const Ordering & order, Arc e, Arc f) -> ArcPair
{
    PositionPair pe{order.rank(e.tail), order.rank(e.head)};
    PositionPair pf{order.rank(f.tail), order.rank(f.head)};
    auto [lo, hi, nontrivial] = bounds(pe, pf);
    return ArcPair{e, f, lo, hi, nontrivial};
}

auto verify_minmax(const Digraph & h, const Ordering & order) -> MinMaxCheck
{
    if (order.size() != h.size())
        throw InvalidArgument("ordering size does not match the digraph");
    const auto & seq = order.sequence();
    vector<std::pair<PositionPair, Arc>> arcs;
    for (Arc a : h.arcs())
        arcs.push_back({{order.rank(a.tail), order.rank(a.head)}, a});
    std::sort(arcs.begin(), arcs.end());

    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j)
            if (! pair_ok(h, seq, arcs[i].first, arcs[j].first))
                return MinMaxCheck{false, make_arc_pair(order, arcs[i].second, arcs[j].second)};
    return MinMaxCheck{true, std::nullopt};
}

auto find_minmax(const Digraph & h, size_t guard, Exec exec) -> optional<Ordering>
{
    if (h.size() > guard)
        throw GuardExceeded("Min-Max ordering search on " + std::to_string(h.size()) + " vertices exceeds the guard of "
            + std::to_string(guard));
    if (h.empty())
        return Ordering{};

    const long n = static_cast<long>(h.size());
    if (exec == Exec::serial) {
        MinMaxSearch search(h);
        for (long first = 0; first < n; ++first)
            if (auto found = search.run_from(first))
                return found;
        return std::nullopt;
    }

    vector<optional<Ordering>> per_first(h.size());
#pragma omp parallel
    {
        MinMaxSearch search(h);
#pragma omp for schedule(dynamic, 1)
        for (long first = 0; first < n; ++first)
            per_first[first] = search.run_from(first);
    }
    for (auto & found : per_first)
        if (found)
            return found;
    return std::nullopt;
}

auto canonical_ordering(CanonicalFamily family, size_t p) -> FamilyMember
{
    switch (family) {
    case CanonicalFamily::rc_tt:
        return {reflexive_closure(make_tt(p)), Ordering::identity(p)};
    case CanonicalFamily::rc_tt_minus:
        if (p < 2)
            throw InvalidArgument("RC(TT_p^-) requires p >= 2");
        return {reflexive_closure(make_tt_minus(p)), Ordering::identity(p)};
    case CanonicalFamily::rc_k12:
        return {reflexive_closure(make_oriented_kb(1, 2)), Ordering({1, 0, 2})};
    case CanonicalFamily::rc_k21:
        return {reflexive_closure(make_oriented_kb(2, 1)), Ordering({0, 2, 1})};
    }
    throw InvalidArgument("unknown family");
}

auto format_ordering(const Digraph & h, const Ordering & order) -> string
{
    string out;
    for (Vertex v : order.sequence()) {
        if (! out.empty())
            out += ',';
        out += h.name(v);
    }
    return out;
}

auto parse_ordering(const Digraph & h, std::string_view text) -> Ordering
{
    vector<Vertex> seq;
    size_t start = 0;
    while (start <= text.size() && ! text.empty()) {
        size_t comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        seq.push_back(h.index_of(token));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (seq.size() != h.size())
        throw InvalidArgument("ordering lists " + std::to_string(seq.size()) + " vertices, target has " + std::to_string(h.size()));
    return Ordering(std::move(seq));
}

} // namespace minhom
