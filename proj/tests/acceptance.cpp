// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "support.hpp"

#include <minhom/classify.hpp>
#include <minhom/error.hpp>
#include <minhom/io.hpp>
#include <minhom/minmax.hpp>
#include <minhom/solver.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

using namespace minhom;
using oracle::dg;

namespace {
    struct Outcome {
        bool ok = true;
        std::string detail;

        auto fail(const std::string & why) -> void
        {
            if (ok)
                detail = why;
            ok = false;
        }
    };

    int failures = 0;

    auto criterion(int number, const std::string & title, double limit_seconds, const std::function<Outcome()> & body) -> void
    {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        }
        catch (const std::exception & e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > limit_seconds)
            o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
        if (! o.ok)
            ++failures;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " [" << timing << "]";
        if (! o.detail.empty())
            std::cout << " -- " << o.detail;
        std::cout << std::endl;
    }

    auto same_cost(const SolveResult & a, const SolveResult & b) -> bool
    {
        if (a.feasible() != b.feasible())
            return false;
        return ! a.optimum || a.optimum->cost == b.optimum->cost;
    }

    auto loop_subsets(const std::string & items) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (unsigned mask = 0; mask < (1u << items.size()); ++mask) {
            std::string s;
            for (std::size_t i = 0; i < items.size(); ++i)
                if (mask >> i & 1)
                    s += items[i];
            out.push_back(s);
        }
        return out;
    }

    auto bg_kind(const std::optional<Witness> & w) -> std::optional<ForbiddenKind>
    {
        if (w)
            if (auto b = std::get_if<BGForbidden>(&*w))
                return b->structure.kind;
        return std::nullopt;
    }

    auto c1_canonical_orderings() -> Outcome
    {
        Outcome o;
        auto check = [&](const Digraph & h, const std::vector<Vertex> & seq, const std::string & what) {
            if (! verify_minmax(h, Ordering(seq)).valid || ! oracle::naive_is_minmax(h, seq))
                o.fail(what + " rejected");
        };
        for (std::size_t p = 1; p <= 8; ++p) {
            std::vector<Vertex> id(p);
            std::iota(id.begin(), id.end(), 0);
            check(oracle::family_rc_tt(p), id, "RC(TT_" + std::to_string(p) + ")");
            auto m = canonical_ordering(CanonicalFamily::rc_tt, p);
            check(m.graph, m.ordering.sequence(), "canonical RC(TT_" + std::to_string(p) + ")");
            if (p >= 3) {
                check(oracle::family_rc_tt_minus(p), id, "RC(TT-_" + std::to_string(p) + ")");
                auto mm = canonical_ordering(CanonicalFamily::rc_tt_minus, p);
                check(mm.graph, mm.ordering.sequence(), "canonical RC(TT-_" + std::to_string(p) + ")");
            }
        }
        check(oracle::family_rc_k12(), {1, 0, 2}, "RC(K12) with 2,1,3");
        auto k12 = canonical_ordering(CanonicalFamily::rc_k12);
        if (format_ordering(k12.graph, k12.ordering) != "2,1,3")
            o.fail("RC(K12) ordering is not 2,1,3");
        check(k12.graph, k12.ordering.sequence(), "canonical RC(K12)");
        auto k21 = canonical_ordering(CanonicalFamily::rc_k21);
        if (! (k21.graph == reflexive_closure(make_oriented_kb(2, 1))))
            o.fail("RC(K21) graph mismatch");
        check(k21.graph, k21.ordering.sequence(), "canonical RC(K21) " + format_ordering(k21.graph, k21.ordering));
        o.detail = "p = 1..8, RC(K21) ordering " + format_ordering(k21.graph, k21.ordering);
        return o;
    }

    auto c2_minmax_vs_bruteforce() -> Outcome
    {
        Outcome o;
        std::mt19937_64 rng(20260101);
        std::uniform_int_distribution<std::size_t> h_size(1, 4), d_size(1, 8);
        std::uniform_real_distribution<double> density(0.1, 0.6);
        int instances = 0, infeasible = 0;
        while (instances < 1200) {
            auto h = oracle::random_digraph(rng, h_size(rng), 0.5, 0.5);
            auto order = find_minmax(h);
            if (! order)
                continue;
            auto d = oracle::random_digraph(rng, d_size(rng), density(rng), 0.2);
            auto c = oracle::random_costs(rng, d.size(), h.size());
            auto flow = solve_minmax(d, h, *order, c);
            auto brute = solve_bruteforce(d, h, c);
            ++instances;
            infeasible += brute.feasible() ? 0 : 1;
            if (! same_cost(flow, brute))
                o.fail("disagreement on instance " + std::to_string(instances));
            if (flow.optimum && (! is_homomorphism(d, h, flow.optimum->map) || homomorphism_cost(c, flow.optimum->map) != flow.optimum->cost))
                o.fail("min-cut map does not re-verify on instance " + std::to_string(instances));
        }
        if (o.ok)
            o.detail = std::to_string(instances) + " instances, " + std::to_string(infeasible) + " infeasible";
        return o;
    }

    auto c3_cycle_vs_bruteforce() -> Outcome
    {
        Outcome o;
        std::mt19937_64 rng(20260102);
        std::uniform_int_distribution<std::size_t> k_dist(2, 5), d_size(1, 8);
        std::uniform_real_distribution<double> density(0.05, 0.35);
        int instances = 0, infeasible = 0;
        for (; instances < 600; ++instances) {
            std::size_t k = k_dist(rng);
            auto d = oracle::random_digraph(rng, d_size(rng), density(rng), 0.03);
            auto c = oracle::random_costs(rng, d.size(), k);
            auto cyc = solve_cycle(d, k, c);
            auto brute = solve_bruteforce(d, make_cycle(k), c);
            infeasible += brute.feasible() ? 0 : 1;
            if (! same_cost(cyc, brute))
                o.fail("disagreement on instance " + std::to_string(instances));
        }
        if (o.ok)
            o.detail = std::to_string(instances) + " instances, " + std::to_string(infeasible) + " infeasible";
        return o;
    }

    auto c4_reflexive_mpts() -> Outcome
    {
        Outcome o;
        std::string counts;
        for (std::size_t n = 2; n <= 5; ++n) {
            auto truth = oracle::all_reflexive_mpts(n);
            auto listed = enumerate_reflexive_mpts(n);
            if (listed.size() != truth.size())
                o.fail("n=" + std::to_string(n) + ": enumerated " + std::to_string(listed.size()) + ", expected " + std::to_string(truth.size()));
            std::size_t poly = 0;
            std::set<std::string> seen;
            for (auto & t : listed) {
                auto code = oracle::naive_canonical(t.graph);
                if (! truth.contains(code) || ! seen.insert(code).second)
                    o.fail("n=" + std::to_string(n) + ": enumeration produced a foreign or repeated class");
                auto c = classify_reflexive_mpt(t.graph);
                bool expected_poly = oracle::in_poly_family(t.graph);
                std::ostringstream graph_text;
                write_digraph(graph_text, t.graph);
                if ((c.verdict == Verdict::poly) != expected_poly)
                    o.fail("wrong verdict for " + graph_text.str());
                if (c.verdict == Verdict::poly) {
                    ++poly;
                    if (! c.ordering || ! verify_minmax(t.graph, *c.ordering).valid)
                        o.fail("poly case without a verified ordering");
                }
                else {
                    if (! c.witness || ! validate_witness(t.graph, *c.witness))
                        o.fail("np-hard case without a validated witness: " + graph_text.str());
                    else if (auto rc = std::get_if<ReflexiveCycle>(&*c.witness); rc && rc->cycle.size() > 4)
                        o.fail("reflexive cycle longer than 4");
                    else if (auto b = std::get_if<BGForbidden>(&*c.witness); b && b->subset.size() > 4)
                        o.fail("forbidden structure on more than 4 vertices");
                }
                auto g = classify_general(t.graph);
                if (g.verdict != Verdict::unknown && g.verdict != c.verdict)
                    o.fail("general classifier contradicts the dichotomy");
            }
            counts += (counts.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " + std::to_string(listed.size())
                + " classes (" + std::to_string(poly) + " poly)";
        }
        if (o.ok)
            o.detail = counts;
        return o;
    }

    auto c5_loop_table() -> Outcome
    {
        Outcome o;
        const std::set<std::string> poly{"33", "11,33", "22,33", "11,22,33"};
        std::string table;
        for (auto & subset : loop_subsets("1234")) {
            std::string b;
            for (char c : subset)
                b += (b.empty() ? "" : ",") + std::string(2, c);
            auto cfg = Theorem5Config::parse(b);
            auto c = classify_theorem5(cfg);
            if ((c.verdict == Verdict::poly) != poly.contains(b))
                o.fail("wrong verdict for B = {" + b + "}");
            auto h = build_theorem5_digraph(cfg);
            if (c.ordering && ! verify_minmax(h, *c.ordering).valid)
                o.fail("unverified ordering for B = {" + b + "}");
            if (c.witness && ! validate_witness(h, *c.witness))
                o.fail("invalid witness for B = {" + b + "}");
        }
        auto full = classify_theorem5(Theorem5Config::parse("11,22,33,44"));
        if (bg_kind(full.witness) != ForbiddenKind::bipartite_tent)
            o.fail("no bipartite tent for B = {11,22,33,44}");
        if (o.ok)
            o.detail = "16 subsets, tent found for {11,22,33,44}";
        return o;
    }

    auto c6_claw_family() -> Outcome
    {
        Outcome o;
        int hard = 0, ordered = 0;
        for (auto & loops : loop_subsets("uvwz")) {
            std::string arcs = "z>u z>v z>w";
            for (char c : loops)
                arcs += std::string(" ") + c + ">" + c;
            auto base = dg("u v w z", arcs);
            bool claw = loops.find('u') != std::string::npos && loops.find('v') != std::string::npos
                && loops.find('w') != std::string::npos;
            for (auto h : {base, converse(base)}) {
                if (claw) {
                    auto c = classify_general(h);
                    if (c.verdict != Verdict::np_hard || bg_kind(c.witness) != ForbiddenKind::bipartite_claw
                        || ! validate_witness(h, *c.witness))
                        o.fail("no claw for loops {" + loops + "}");
                    ++hard;
                }
                else {
                    auto order = find_minmax(h);
                    if (! order || ! verify_minmax(h, *order).valid)
                        o.fail("no Min-Max ordering for loops {" + loops + "}");
                    ++ordered;
                }
            }
        }
        if (o.ok)
            o.detail = std::to_string(hard) + " claw cases, " + std::to_string(ordered) + " ordered cases";
        return o;
    }

    // Exhaustive part-respecting maps G -> BG(H).
    auto bipartite_optimum(const BipartiteGraph & g, const BipartiteGraph & target, const CostMatrix & c,
        std::vector<std::vector<Vertex>> * all_homs) -> std::optional<Cost>
    {
        std::vector<std::vector<Vertex>> domain(g.size());
        for (Vertex u = 0; u < g.size(); ++u)
            domain[u] = target.part(g.side(u));
        std::optional<Cost> best;
        std::vector<std::size_t> idx(g.size(), 0);
        if (g.size() == 0)
            return 0;
        while (true) {
            std::vector<Vertex> f(g.size());
            for (Vertex u = 0; u < g.size(); ++u)
                f[u] = domain[u][idx[u]];
            bool ok = true;
            for (auto [a, b] : g.edges())
                ok = ok && target.has_edge(f[a], f[b]);
            if (ok) {
                Cost cost = 0;
                for (Vertex u = 0; u < g.size(); ++u)
                    cost += c.at(u, f[u]);
                if (! best || cost < *best)
                    best = cost;
                if (all_homs)
                    all_homs->push_back(f);
            }
            std::size_t i = g.size();
            while (i > 0 && idx[i - 1] + 1 == domain[i - 1].size())
                idx[--i] = 0;
            if (i == 0)
                break;
            ++idx[i - 1];
        }
        return best;
    }

    auto c7_bipartite_transformation() -> Outcome
    {
        Outcome o;
        std::mt19937_64 rng(20260107);
        int instances = 0, round_trips = 0;
        for (; instances < 80; ++instances) {
            auto h = oracle::random_digraph(rng, 2 + rng() % 2, 0.5, 0.4);
            auto target = bg(h);
            BipartiteGraph g;
            std::size_t left = 1 + rng() % 3, right = 1 + rng() % 3;
            for (std::size_t i = 0; i < left; ++i)
                g.add_vertex("s" + std::to_string(i), Side::first);
            for (std::size_t i = 0; i < right; ++i)
                g.add_vertex("t" + std::to_string(i), Side::second);
            for (Vertex u = 0; u < left; ++u)
                for (Vertex v = left; v < left + right; ++v)
                    if (rng() % 2)
                        g.add_edge(u, v);
            auto c = oracle::random_costs(rng, g.size(), target.size());

            std::vector<std::vector<Vertex>> homs;
            auto expected = bipartite_optimum(g, target, c, &homs);
            auto inst = digraph_instance_from_bipartite(g, h, c);
            auto got = solve_bruteforce(inst.input, h, inst.costs);
            if (expected.has_value() != got.feasible() || (expected && *expected != got.optimum->cost))
                o.fail("optimum mismatch on instance " + std::to_string(instances));
            for (auto & f : homs) {
                auto back = project_solution(g, h, f);
                if (lift_solution(g, h, back) != f || homomorphism_cost(inst.costs, back) != homomorphism_cost(c, f))
                    o.fail("round trip broken on instance " + std::to_string(instances));
                ++round_trips;
            }
            if (got.optimum && project_solution(g, h, lift_solution(g, h, got.optimum->map)) != got.optimum->map)
                o.fail("project(lift(f)) != f on instance " + std::to_string(instances));
        }
        if (o.ok)
            o.detail = std::to_string(instances) + " instances, " + std::to_string(round_trips) + " round trips";
        return o;
    }

    auto c8_extension_collapse() -> Outcome
    {
        Outcome o;
        std::mt19937_64 rng(20260108);
        int instances = 0;
        for (; instances < 250; ++instances) {
            auto base = oracle::random_digraph(rng, 2 + rng() % 3, 0.5, 0.0);
            std::vector<std::size_t> sizes(base.size());
            for (auto & s : sizes)
                s = 1 + rng() % 3;
            auto ext = extend(base, sizes);
            auto d = oracle::random_digraph(rng, 1 + rng() % 5, 0.3, 0.0);
            auto c = oracle::random_costs(rng, d.size(), ext.graph.size());
            auto over_ext = solve_bruteforce(d, ext.graph, c);
            auto collapsed = collapse_extension(ext.graph, base, ext.origin, c);
            auto over_base = solve_bruteforce(d, base, collapsed.costs);
            if (! same_cost(over_ext, over_base))
                o.fail("optimum mismatch on instance " + std::to_string(instances));
            if (over_base.optimum) {
                auto lifted = collapsed.lift(over_base.optimum->map);
                if (! is_homomorphism(d, ext.graph, lifted) || homomorphism_cost(c, lifted) != over_base.optimum->cost)
                    o.fail("lifted map is not optimal on instance " + std::to_string(instances));
            }
        }
        if (o.ok)
            o.detail = std::to_string(instances) + " instances";
        return o;
    }

    auto c9_structure_goldens() -> Outcome
    {
        Outcome o;
        auto rc3 = bg(reflexive_closure(make_cycle(3)));
        bool six_cycle = rc3.size() == 6 && rc3.edge_count() == 6 && rc3.components().size() == 1;
        for (Vertex v = 0; v < rc3.size(); ++v)
            six_cycle = six_cycle && rc3.neighbours(v).size() == 2;
        if (! six_cycle)
            o.fail("BG(RC(C3)) is not a 6-cycle");
        auto pib = is_proper_interval_bigraph(rc3);
        if (pib.proper_interval || ! pib.obstruction || pib.obstruction->kind != ForbiddenKind::long_induced_cycle
            || pib.obstruction->embedding.size() != 6)
            o.fail("BG(RC(C3)) not rejected with a 6-cycle");
        if (oracle::has_strong_ordering(rc3))
            o.fail("oracle accepts BG(RC(C3))");

        for (auto kind : {ForbiddenKind::bipartite_claw, ForbiddenKind::bipartite_net, ForbiddenKind::bipartite_tent}) {
            auto g = pattern_graph(kind);
            auto found = find_forbidden(g);
            if (! found || found->kind != kind || ! validate_structure(g, *found))
                o.fail(to_string(kind) + " not detected in itself");
            if (oracle::has_strong_ordering(g))
                o.fail(to_string(kind) + " accepted by the strong-ordering oracle");
            for (std::uint32_t mask = 0; mask + 1 < (1u << 7); ++mask) {
                std::vector<Vertex> subset;
                for (Vertex v = 0; v < 7; ++v)
                    if (mask >> v & 1)
                        subset.push_back(v);
                auto sub = g.induced(subset);
                if (find_forbidden(sub) || ! oracle::has_strong_ordering(sub))
                    o.fail(to_string(kind) + " has an obstruction in a proper induced subgraph");
            }
        }
        return o;
    }

    auto run_binary(const std::string & args) -> std::string
    {
        std::string command = std::string(MINHOM_CLI_PATH) + " " + args + " 2>&1; echo \"exit $?\"";
        std::string out;
        if (FILE * pipe = popen(command.c_str(), "r")) {
            char buffer[4096];
            std::size_t n;
            while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
                out.append(buffer, n);
            pclose(pipe);
        }
        return out;
    }

    auto c10_determinism() -> Outcome
    {
        Outcome o;
        auto dir = std::filesystem::temp_directory_path() / "minhom_acceptance";
        std::filesystem::create_directories(dir);
        auto file = [&](const std::string & name, const std::string & text) {
            auto path = dir / name;
            std::ofstream(path) << text;
            return path.string();
        };
        auto input = file("d.graph", "v u\nv v\nv w\na u v\na v w\na w w\n");
        auto costs = file("d.cost", "c u 1 3\nc u 2 -1\nc v 3 4\nc w 1 -2\nc w 3 5\n");
        auto rc3 = file("rc3.graph", "a 1 2\na 2 3\na 3 1\na 1 1\na 2 2\na 3 3\n");
        auto bip = file("net.bip", "p1 x1\np1 x2\np1 x3\np1 x4\np2 y1\np2 y2\np2 y3\n"
                                   "e x3 y1\ne x3 y2\ne x4 y1\ne x4 y2\ne x1 y1\ne x2 y2\ne x4 y3\n");
        const std::vector<std::string> commands{
            "solve --target rc_tt3 --input " + input + " --costs " + costs + " --method auto --seed 1",
            "solve --target rc_ttminus3 --input " + input + " --costs " + costs + " --method minmax",
            "solve --target " + rc3 + " --input " + input + " --costs " + costs + " --method brute",
            "solve --target cycle3 --input " + input + " --method cycle",
            "classify-rmpt --target rc_k21",
            "classify-rmpt --target " + rc3,
            "classify-tournament --target rc_tt4",
            "classify-t5 --b 33",
            "classify-t5 --b 11,22,33,44",
            "classify-t5 --b none",
            "classify-general --target t5_33,44",
            "bg --target " + rc3,
            "pib-check --target " + rc3,
            "pib-check --input " + bip,
            "minmax-verify --target cycle2 --ordering 1,2",
            "minmax-find --target rc_ttminus5",
            "witness --target t5_11,22,33,44",
            "enumerate-rmpt --guard 5 --seed 7",
        };
        for (auto & cmd : commands) {
            auto first = run_binary(cmd), second = run_binary(cmd);
            if (first.empty() || first != second)
                o.fail("output differs for: " + cmd);
        }
        if (o.ok)
            o.detail = std::to_string(commands.size()) + " commands covering all 11 subcommands";
        return o;
    }
}

auto main() -> int
{
    criterion(1, "canonical Min-Max orderings verify", 1, c1_canonical_orderings);
    criterion(2, "min-cut solver equals brute force", 60, c2_minmax_vs_bruteforce);
    criterion(3, "cycle solver equals brute force", 30, c3_cycle_vs_bruteforce);
    criterion(4, "reflexive multipartite tournament dichotomy, 2..5 vertices", 300, c4_reflexive_mpts);
    criterion(5, "sixteen-case loop table with tent witness", 1, c5_loop_table);
    criterion(6, "claw family and its converses", 10, c6_claw_family);
    criterion(7, "bipartite instance transformation", 30, c7_bipartite_transformation);
    criterion(8, "extension collapse", 30, c8_extension_collapse);
    criterion(9, "structure goldens", 1, c9_structure_goldens);
    criterion(10, "CLI determinism", 120, c10_determinism);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
