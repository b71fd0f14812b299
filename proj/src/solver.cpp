#include <minhom/error.hpp>
#include <minhom/maxflow.hpp>
#include <minhom/solver.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>

using std::optional;
using std::size_t;
using std::span;
using std::uint64_t;
using std::vector;

namespace minhom {

auto to_string(Method m) -> std::string
{
    switch (m) {
    case Method::bruteforce: return "bruteforce";
    case Method::minmax: return "minmax";
    case Method::cycle: return "cycle";
    }
    return "unknown";
}

namespace {
    auto checked_add(Cost a, Cost b) -> Cost
    {
        Cost r;
        if (__builtin_add_overflow(a, b, &r))
            throw Overflow("cost arithmetic overflows int64");
        return r;
    }

    auto checked_mul(Cost a, Cost b) -> Cost
    {
        Cost r;
        if (__builtin_mul_overflow(a, b, &r))
            throw Overflow("cost arithmetic overflows int64");
        return r;
    }

    auto trivial_result(const Digraph & input, const Digraph & target, Method method) -> optional<SolveResult>
    {
        if (input.empty())
            return SolveResult{Homomorphism{}, method};
        if (target.empty())
            return SolveResult{std::nullopt, method};
        return std::nullopt;
    }

    constexpr Cost no_solution = std::numeric_limits<Cost>::max();

    // Depth-first search over input vertices in declaration order. Values are
    // tried in ascending order and the incumbent only changes on a strict
    // improvement, so the first optimum found is the lexicographically least.
    class BruteforceSearch {
    public:
        BruteforceSearch(const Digraph & input, const Digraph & target, const CostMatrix & costs, uint64_t budget,
            std::atomic<uint64_t> & nodes) :
            input_(input),
            costs_(costs),
            n_(input.size()),
            out_mask_(target.size(), 0),
            in_mask_(target.size(), 0),
            budget_(budget),
            nodes_(nodes),
            domains_((input.size() + 1) * input.size(), 0),
            map_(input.size(), 0)
        {
            uint64_t loops = 0;
            for (auto [a, b] : target.arcs()) {
                out_mask_[a] |= uint64_t{1} << b;
                in_mask_[b] |= uint64_t{1} << a;
                if (a == b)
                    loops |= uint64_t{1} << a;
            }
            uint64_t all = target.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << target.size()) - 1;
            for (Vertex u = 0; u < n_; ++u)
                domains_[u] = input.has_loop(u) ? (all & loops) : all;
        }

        auto initial_domains() const -> span<const uint64_t> { return {domains_.data(), n_}; }

        // Applies u := value to the domains at `depth`, writing depth + 1.
        // Returns false on a wipe-out.
        auto assign(size_t depth, Vertex u, Vertex value) -> bool
        {
            const uint64_t * cur = &domains_[depth * n_];
            if (! ((cur[u] >> value) & 1))
                return false;
            uint64_t * next = &domains_[(depth + 1) * n_];
            std::copy(cur, cur + n_, next);
            next[u] = uint64_t{1} << value;
            for (Vertex w : input_.out(u))
                if (w > u && ! (next[w] &= out_mask_[value]))
                    return false;
            for (Vertex w : input_.in(u))
                if (w > u && ! (next[w] &= in_mask_[value]))
                    return false;
            map_[u] = value;
            return true;
        }

        auto search(size_t depth, Cost partial) -> void
        {
            if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_)
                throw GuardExceeded("brute-force node budget of " + std::to_string(budget_) + " exhausted");
            if (depth == n_) {
                if (partial < best_) {
                    best_ = partial;
                    best_map_ = map_;
                }
                return;
            }
            const uint64_t * dom = &domains_[depth * n_];
            Cost bound = partial;
            for (Vertex w = depth; w < n_; ++w) {
                if (! dom[w])
                    return;
                bound = checked_add(bound, min_cost(w, dom[w]));
            }
            if (bound >= best_)
                return;

            Vertex u = depth;
            for (uint64_t bits = dom[u]; bits; bits &= bits - 1) {
                auto value = static_cast<Vertex>(std::countr_zero(bits));
                if (assign(depth, u, value))
                    search(depth + 1, checked_add(partial, costs_.at(u, value)));
            }
        }

        auto best() const -> Cost { return best_; }
        auto best_map() const -> const vector<Vertex> & { return best_map_; }

    private:
        auto min_cost(Vertex u, uint64_t dom) const -> Cost
        {
            Cost m = no_solution;
            for (; dom; dom &= dom - 1)
                m = std::min(m, costs_.at(u, static_cast<Vertex>(std::countr_zero(dom))));
            return m;
        }

        const Digraph & input_;
        const CostMatrix & costs_;
        size_t n_;
        vector<uint64_t> out_mask_, in_mask_;
        uint64_t budget_;
        std::atomic<uint64_t> & nodes_;
        vector<uint64_t> domains_;
        vector<Vertex> map_;
        Cost best_ = no_solution;
        vector<Vertex> best_map_;
    };
}

auto solve_bruteforce(const Digraph & input, const Digraph & target, const CostMatrix & costs, BruteforceOptions options) -> SolveResult
{
    costs.check_shape(input.size(), target.size());
    if (auto r = trivial_result(input, target, Method::bruteforce))
        return *r;
    if (target.size() > bruteforce_max_target)
        throw GuardExceeded("brute force supports at most " + std::to_string(bruteforce_max_target) + " target vertices");

    std::atomic<uint64_t> nodes{0};
    const size_t n = input.size();

    if (options.exec == Exec::serial || n < 2) {
        BruteforceSearch search(input, target, costs, options.node_budget, nodes);
        search.search(0, 0);
        if (search.best() == no_solution)
            return {std::nullopt, Method::bruteforce};
        return {Homomorphism{search.best_map(), search.best()}, Method::bruteforce};
    }

    // Split on the first two input vertices; tasks are listed in
    // lexicographic order so the reduction keeps the lexicographic tie-break.
    vector<std::pair<Vertex, Vertex>> tasks;
    {
        BruteforceSearch probe(input, target, costs, options.node_budget, nodes);
        auto dom = probe.initial_domains();
        for (uint64_t a = dom[0]; a; a &= a - 1) {
            auto va = static_cast<Vertex>(std::countr_zero(a));
            for (uint64_t b = dom[1]; b; b &= b - 1) {
                auto vb = static_cast<Vertex>(std::countr_zero(b));
                tasks.emplace_back(va, vb);
            }
        }
    }

    vector<Cost> task_cost(tasks.size(), no_solution);
    vector<vector<Vertex>> task_map(tasks.size());
    std::exception_ptr failure;
    const long task_count = static_cast<long>(tasks.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (long t = 0; t < task_count; ++t) {
        try {
            BruteforceSearch search(input, target, costs, options.node_budget, nodes);
            auto [va, vb] = tasks[t];
            if (! search.assign(0, 0, va) || ! search.assign(1, 1, vb))
                continue;
            search.search(2, checked_add(costs.at(0, va), costs.at(1, vb)));
            task_cost[t] = search.best();
            if (search.best() != no_solution)
                task_map[t] = search.best_map();
        }
        catch (...) {
#pragma omp critical
            if (! failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    size_t best = tasks.size();
    for (size_t t = 0; t < tasks.size(); ++t)
        if (task_cost[t] != no_solution && (best == tasks.size() || task_cost[t] < task_cost[best]))
            best = t;
    if (best == tasks.size())
        return {std::nullopt, Method::bruteforce};
    return {Homomorphism{task_map[best], task_cost[best]}, Method::bruteforce};
}

namespace {
    // Arc relation of the target over positions of the ordering, in the
    // row-interval form that min-max closure guarantees.
    struct Staircase {
        size_t p;
        vector<char> rel;
        vector<char> is_row, is_col;
        vector<size_t> lo, hi; // per row: first and last column

        auto has(size_t i, size_t j) const -> bool { return rel[i * p + j] != 0; }
    };

    auto build_staircase(const Digraph & target, const Ordering & order) -> Staircase
    {
        const size_t p = target.size();
        Staircase s{p, vector<char>(p * p, 0), vector<char>(p, 0), vector<char>(p, 0), vector<size_t>(p, 0), vector<size_t>(p, 0)};
        for (auto [a, b] : target.arcs()) {
            size_t i = order.rank(a), j = order.rank(b);
            s.rel[i * p + j] = 1;
            s.is_row[i] = 1;
            s.is_col[j] = 1;
        }

        optional<size_t> prev;
        for (size_t i = 0; i < p; ++i) {
            if (! s.is_row[i])
                continue;
            size_t first = p, last = 0;
            for (size_t j = 0; j < p; ++j)
                if (s.has(i, j)) {
                    first = std::min(first, j);
                    last = j;
                }
            for (size_t j = first; j <= last; ++j)
                if (s.is_col[j] && ! s.has(i, j))
                    throw InternalError("Min-Max relation row is not an interval over the column labels");
            if (prev && (first < s.lo[*prev] || last < s.hi[*prev]))
                throw InternalError("Min-Max relation row bounds are not monotone");
            s.lo[i] = first;
            s.hi[i] = last;
            prev = i;
        }
        return s;
    }
}

auto solve_minmax(const Digraph & input, const Digraph & target, const Ordering & order, const CostMatrix & costs) -> SolveResult
{
    costs.check_shape(input.size(), target.size());
    if (order.size() != target.size())
        throw InvalidArgument("ordering size does not match the target");
    if (! verify_minmax(target, order).valid)
        throw InvalidArgument("ordering is not a Min-Max ordering of the target");
    if (auto r = trivial_result(input, target, Method::minmax))
        return *r;

    const size_t n = input.size();
    const size_t p = target.size();
    const auto & seq = order.sequence();
    Staircase stair = build_staircase(target, order);

    // Label restrictions by position.
    vector<char> allowed(n * p, 1);
    for (Vertex u = 0; u < n; ++u) {
        bool has_out = ! input.out(u).empty(), has_in = ! input.in(u).empty(), loop = input.has_loop(u);
        bool any = false;
        for (size_t k = 0; k < p; ++k) {
            char & ok = allowed[u * p + k];
            ok = (! has_out || stair.is_row[k]) && (! has_in || stair.is_col[k]) && (! loop || stair.has(k, k));
            any = any || ok;
        }
        if (! any)
            return {std::nullopt, Method::minmax};
    }

    vector<Cost> shift(n, 0);
    Cost big = 1;
    for (Vertex u = 0; u < n; ++u) {
        Cost lo = 0, hi = 0;
        for (size_t k = 0; k < p; ++k) {
            lo = std::min(lo, costs.at(u, seq[k]));
            hi = std::max(hi, costs.at(u, seq[k]));
        }
        if (lo == std::numeric_limits<Cost>::min())
            throw Overflow("cost too small to shift");
        shift[u] = -lo;
        big = checked_add(big, checked_add(shift[u], hi));
    }
    const Cost infinity = checked_mul(static_cast<Cost>(n) + 2, big);

    // Node 0 = source, 1 = sink, threshold node (u, k) for k = 1..p-1 means label(u) >= k.
    FlowNetwork net(2 + n * (p - 1));
    const FlowNetwork::Node source = 0, sink = 1;
    auto node = [&](Vertex u, size_t k) -> FlowNetwork::Node { return 2 + u * (p - 1) + (k - 1); };

    for (Vertex u = 0; u < n; ++u) {
        FlowNetwork::Node prev = source;
        for (size_t k = 0; k < p; ++k) {
            FlowNetwork::Node next = k + 1 < p ? node(u, k + 1) : sink;
            Cost cap = allowed[u * p + k] ? checked_add(shift[u], costs.at(u, seq[k])) : big;
            net.add_arc(prev, next, cap);
            if (k + 1 < p && k >= 1)
                net.add_arc(next, prev, infinity);
            prev = next;
        }
    }

    // lambda(i): m(smallest row >= i); mu(j): smallest row whose last column >= j.
    vector<optional<size_t>> lambda(p), mu(p);
    for (size_t i = 0; i < p; ++i)
        for (size_t r = i; r < p; ++r)
            if (stair.is_row[r]) {
                lambda[i] = stair.lo[r];
                break;
            }
    for (size_t j = 0; j < p; ++j)
        for (size_t r = 0; r < p; ++r)
            if (stair.is_row[r] && stair.hi[r] >= j) {
                mu[j] = r;
                break;
            }

    for (auto [u, v] : input.arcs()) {
        if (u == v)
            continue;
        for (size_t i = 1; i < p; ++i)
            if (lambda[i] && *lambda[i] >= 1)
                net.add_arc(node(u, i), node(v, *lambda[i]), infinity);
        for (size_t j = 1; j < p; ++j)
            if (mu[j] && *mu[j] >= 1)
                net.add_arc(node(v, j), node(u, *mu[j]), infinity);
    }

    Cost cut = net.max_flow(source, sink);
    if (cut >= big)
        return {std::nullopt, Method::minmax};

    Homomorphism hom;
    hom.map.resize(n);
    Cost shifted = 0;
    for (Vertex u = 0; u < n; ++u) {
        size_t label = 0;
        for (size_t k = 1; k < p; ++k) {
            bool in_source = net.on_source_side(node(u, k));
            if (in_source && label + 1 != k)
                throw InternalError("threshold chain is not monotone in the minimum cut");
            if (in_source)
                label = k;
        }
        hom.map[u] = seq[label];
        shifted = checked_add(shifted, shift[u]);
    }
    hom.cost = cut - shifted;
    if (! is_homomorphism(input, target, hom.map) || homomorphism_cost(costs, hom.map) != hom.cost)
        throw InternalError("minimum cut does not decode to an optimal homomorphism");
    return {std::move(hom), Method::minmax};
}

auto solve_cycle(const Digraph & input, size_t k, const CostMatrix & costs) -> SolveResult
{
    if (k < 2)
        throw InvalidArgument("cycle solver requires k >= 2");
    costs.check_shape(input.size(), k);

    Homomorphism hom;
    hom.map.assign(input.size(), 0);
    vector<Vertex> trial(input.size(), 0);
    for (const auto & comp : components(input)) {
        Vertex root = comp.front();
        optional<Cost> best;
        vector<Vertex> best_images;
        for (Vertex start = 0; start < k; ++start) {
            // comp is sorted and connected: propagate from root along underlying edges.
            vector<char> seen(input.size(), 0);
            vector<Vertex> stack{root};
            trial[root] = start;
            seen[root] = 1;
            while (! stack.empty()) {
                Vertex u = stack.back();
                stack.pop_back();
                for (Vertex w : input.out(u))
                    if (! seen[w]) {
                        seen[w] = 1;
                        trial[w] = (trial[u] + 1) % k;
                        stack.push_back(w);
                    }
                for (Vertex w : input.in(u))
                    if (! seen[w]) {
                        seen[w] = 1;
                        trial[w] = (trial[u] + k - 1) % k;
                        stack.push_back(w);
                    }
            }
            bool consistent = true;
            Cost total = 0;
            for (Vertex u : comp) {
                for (Vertex w : input.out(u))
                    consistent = consistent && w != u && trial[w] == (trial[u] + 1) % k;
                total = checked_add(total, costs.at(u, trial[u]));
            }
            if (consistent && (! best || total < *best)) {
                best = total;
                best_images.clear();
                for (Vertex u : comp)
                    best_images.push_back(trial[u]);
            }
        }
        if (! best)
            return {std::nullopt, Method::cycle};
        for (size_t i = 0; i < comp.size(); ++i)
            hom.map[comp[i]] = best_images[i];
        hom.cost = checked_add(hom.cost, *best);
    }
    return {std::move(hom), Method::cycle};
}

auto CollapsedCosts::lift(span<const Vertex> base_map) const -> vector<Vertex>
{
    if (base_map.size() != choice.size())
        throw InvalidArgument("lift: map size does not match the instance");
    vector<Vertex> out(base_map.size());
    for (Vertex u = 0; u < base_map.size(); ++u)
        out[u] = choice[u].at(base_map[u]);
    return out;
}

auto collapse_extension(const Digraph & extended, const Digraph & base, span<const Vertex> origin, const CostMatrix & costs)
    -> CollapsedCosts
{
    if (origin.size() != extended.size())
        throw InvalidArgument("decomposition must cover every vertex of the extension");
    if (! base.is_loopless())
        throw InvalidArgument("base digraph of an extension must be loopless");
    vector<char> covered(base.size(), 0);
    for (Vertex v : origin) {
        if (v >= base.size())
            throw InvalidArgument("decomposition refers to an unknown base vertex");
        covered[v] = 1;
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end())
        throw InvalidArgument("decomposition leaves a base vertex without copies");
    for (Vertex a = 0; a < extended.size(); ++a)
        for (Vertex b = 0; b < extended.size(); ++b)
            if (extended.has_arc(a, b) != base.has_arc(origin[a], origin[b]))
                throw InvalidArgument("decomposition is inconsistent with the arcs of the extension");

    const size_t rows = costs.rows();
    costs.check_shape(rows, extended.size());
    CollapsedCosts result{CostMatrix(rows, base.size()), vector<vector<Vertex>>(rows, vector<Vertex>(base.size(), extended.size()))};
    for (Vertex u = 0; u < rows; ++u)
        for (Vertex w = 0; w < extended.size(); ++w) {
            Vertex v = origin[w];
            Vertex & chosen = result.choice[u][v];
            if (chosen == extended.size() || costs.at(u, w) < costs.at(u, chosen))
                chosen = w;
        }
    for (Vertex u = 0; u < rows; ++u)
        for (Vertex v = 0; v < base.size(); ++v)
            result.costs.set(u, v, costs.at(u, result.choice[u][v]));
    return result;
}

auto solve_cycle_target(const Digraph & input, const Digraph & target, const CostMatrix & costs) -> SolveResult
{
    costs.check_shape(input.size(), target.size());
    auto cycle = as_directed_cycle(target);
    if (! cycle)
        throw InvalidArgument("target is not a directed cycle");
    const size_t k = cycle->size();
    CostMatrix along(input.size(), k);
    for (Vertex u = 0; u < input.size(); ++u)
        for (size_t j = 0; j < k; ++j)
            along.set(u, j, costs.at(u, (*cycle)[j]));
    SolveResult r = solve_cycle(input, k, along);
    if (r.optimum)
        for (auto & image : r.optimum->map)
            image = (*cycle)[image];
    return r;
}

auto solve_auto(const Digraph & input, const Digraph & target, const CostMatrix & costs, AutoOptions options) -> SolveResult
{
    costs.check_shape(input.size(), target.size());
    std::string fired;

    if (as_directed_cycle(target))
        return solve_cycle_target(input, target, costs);

    if (target.size() <= options.minmax_guard) {
        if (auto order = find_minmax(target, options.minmax_guard, options.exec))
            return solve_minmax(input, target, *order, costs);
    }
    else
        fired += "minmax guard (" + std::to_string(target.size()) + " > " + std::to_string(options.minmax_guard) + " vertices); ";

    try {
        return solve_bruteforce(input, target, costs, {options.node_budget, options.exec});
    }
    catch (const GuardExceeded & e) {
        throw GuardExceeded("no method applicable: " + fired + e.what());
    }
}

} // namespace minhom
