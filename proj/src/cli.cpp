#include <minhom/cli.hpp>
#include <minhom/error.hpp>
#include <minhom/io.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

using std::size_t;
using std::string;
using std::vector;

namespace minhom {

namespace {
    auto open_file(const string & path) -> std::ifstream
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidArgument("cannot open '" + path + "'");
        return in;
    }

    template <typename F>
    auto with_file_context(const string & path, F && f) -> decltype(f())
    {
        try {
            return f();
        }
        catch (const ParseError & e) {
            throw ParseError(path + ": " + e.what(), 0);
        }
    }

    // A path to a digraph file takes precedence over a built-in name.
    auto load_digraph(const string & source) -> Digraph
    {
        if (std::filesystem::is_regular_file(source)) {
            auto in = open_file(source);
            return with_file_context(source, [&] { return parse_digraph(in); });
        }
        if (auto g = builtin_digraph(source))
            return *g;
        throw InvalidArgument("'" + source + "' is neither a readable file nor a built-in digraph");
    }

    auto load_bipartite(const string & path) -> BipartiteGraph
    {
        auto in = open_file(path);
        return with_file_context(path, [&] { return parse_bipartite(in); });
    }

    auto load_costs(const string & path, const Digraph & input, const Digraph & target) -> CostMatrix
    {
        if (path.empty())
            return CostMatrix(input.size(), target.size());
        auto in = open_file(path);
        return with_file_context(path, [&] { return parse_costs(in, input, target); });
    }

    struct Flags {
        string target, input, costs, method = "auto", ordering, b;
        std::uint64_t seed = 0;
        std::optional<size_t> guard;
    };

    auto require(const string & value, const char * flag) -> const string &
    {
        if (value.empty())
            throw InvalidArgument(string("missing ") + flag);
        return value;
    }

    auto cmd_solve(const Flags & f, std::ostream & out, std::ostream & err) -> int
    {
        Digraph target = load_digraph(require(f.target, "--target"));
        Digraph input = load_digraph(require(f.input, "--input"));
        CostMatrix costs = load_costs(f.costs, input, target);
        size_t guard = f.guard.value_or(default_minmax_guard);

        SolveResult result;
        if (f.method == "auto")
            result = solve_auto(input, target, costs, AutoOptions{guard, default_node_budget, Exec::parallel});
        else if (f.method == "brute")
            result = solve_bruteforce(input, target, costs, {default_node_budget, Exec::parallel});
        else if (f.method == "cycle")
            result = solve_cycle_target(input, target, costs);
        else if (f.method == "minmax") {
            std::optional<Ordering> order;
            if (! f.ordering.empty())
                order = parse_ordering(target, f.ordering);
            else if (! (order = find_minmax(target, guard, Exec::parallel)))
                throw InvalidArgument("target has no Min-Max ordering");
            result = solve_minmax(input, target, *order, costs);
        }
        else
            throw InvalidArgument("unknown method '" + f.method + "'");

        err << "method " << to_string(result.method) << '\n';
        write_solution(out, input, target, result);
        return result.feasible() ? 0 : 2;
    }

    auto cmd_classify(const Flags & f, std::ostream & out, const std::function<Classification(const Digraph &)> & classify) -> int
    {
        Digraph h = load_digraph(require(f.target, "--target"));
        write_classification(out, h, classify(h));
        return 0;
    }

    auto cmd_classify_t5(const Flags & f, std::ostream & out) -> int
    {
        auto cfg = Theorem5Config::parse(f.b);
        write_classification(out, build_theorem5_digraph(cfg), classify_theorem5(cfg));
        return 0;
    }

    auto cmd_bg(const Flags & f, std::ostream & out) -> int
    {
        write_bipartite(out, bg(load_digraph(require(f.target, "--target"))));
        return 0;
    }

    auto cmd_pib_check(const Flags & f, std::ostream & out) -> int
    {
        if (f.input.empty() == f.target.empty())
            throw InvalidArgument("pib-check takes exactly one of --input (bipartite file) or --target (digraph)");
        BipartiteGraph g = f.input.empty() ? bg(load_digraph(f.target)) : load_bipartite(f.input);
        auto result = is_proper_interval_bigraph(g, f.guard.value_or(default_forbidden_guard));
        out << "verdict " << (result.proper_interval ? "true" : "false") << '\n';
        if (result.obstruction)
            out << format_structure(g, *result.obstruction) << '\n';
        return 0;
    }

    auto cmd_minmax_verify(const Flags & f, std::ostream & out) -> int
    {
        Digraph h = load_digraph(require(f.target, "--target"));
        Ordering order = parse_ordering(h, require(f.ordering, "--ordering"));
        auto check = verify_minmax(h, order);
        out << "valid " << (check.valid ? "true" : "false") << '\n';
        if (check.violation) {
            const auto & v = *check.violation;
            const auto & seq = order.sequence();
            out << "violation " << h.name(v.e.tail) << ' ' << h.name(v.e.head) << ' ' << h.name(v.f.tail) << ' '
                << h.name(v.f.head) << '\n';
            out << "min " << h.name(seq[v.min_pair.first]) << ' ' << h.name(seq[v.min_pair.second]) << '\n';
            out << "max " << h.name(seq[v.max_pair.first]) << ' ' << h.name(seq[v.max_pair.second]) << '\n';
        }
        return 0;
    }

    auto cmd_minmax_find(const Flags & f, std::ostream & out) -> int
    {
        Digraph h = load_digraph(require(f.target, "--target"));
        auto order = find_minmax(h, f.guard.value_or(default_minmax_guard), Exec::parallel);
        out << "ordering " << (order ? format_ordering(h, *order) : "none") << '\n';
        return 0;
    }

    auto cmd_witness(const Flags & f, std::ostream & out) -> int
    {
        Digraph h = load_digraph(require(f.target, "--target"));
        auto w = find_witness(h);
        out << (w ? format_witness(h, *w) : "witness none") << '\n';
        return 0;
    }

    auto cmd_enumerate(const Flags & f, std::ostream & out) -> int
    {
        size_t max_n = f.guard.value_or(5);
        for (size_t n = 2; n <= max_n; ++n) {
            auto targets = enumerate_reflexive_mpts(n, Exec::parallel);
            for (auto & t : targets) {
                auto c = classify_reflexive_mpt(t.graph);
                out << "rmpt " << n << " parts ";
                for (size_t i = 0; i < t.part_sizes.size(); ++i)
                    out << (i ? "," : "") << t.part_sizes[i];
                out << " arcs";
                for (auto [u, v] : t.graph.arcs())
                    if (u != v)
                        out << ' ' << t.graph.name(u) << '-' << t.graph.name(v);
                out << " verdict " << to_string(c.verdict) << '\n';
            }
            out << "count " << n << ' ' << targets.size() << '\n';
        }
        return 0;
    }
}

auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Minimum cost homomorphism solver and classifier", "minhom"};
    app.require_subcommand(1);
    Flags f;

    auto add_target = [&](CLI::App * c) { c->add_option("--target", f.target, "digraph file or built-in name"); };
    auto add_guard = [&](CLI::App * c, const string & what) { c->add_option("--guard", f.guard, what); };
    auto add_seed = [&](CLI::App * c) { c->add_option("--seed", f.seed, "reserved; no command is randomized"); };

    vector<std::pair<CLI::App *, std::function<int()>>> commands;
    auto command = [&](const string & name, const string & help, std::function<int()> body) {
        auto c = app.add_subcommand(name, help);
        add_seed(c);
        commands.emplace_back(c, std::move(body));
        return c;
    };

    auto solve = command("solve", "optimal homomorphism input -> target", [&] { return cmd_solve(f, out, err); });
    add_target(solve);
    solve->add_option("--input", f.input, "input digraph file or built-in name");
    solve->add_option("--costs", f.costs, "cost file (missing entries are 0)");
    solve->add_option("--method", f.method, "auto|minmax|cycle|brute")->check(CLI::IsMember({"auto", "minmax", "cycle", "brute"}));
    solve->add_option("--ordering", f.ordering, "Min-Max ordering for --method minmax");
    add_guard(solve, "vertex limit for the Min-Max ordering search");

    add_target(command("classify-rmpt", "reflexive multipartite tournament", [&] {
        return cmd_classify(f, out, classify_reflexive_mpt);
    }));
    add_target(command("classify-tournament", "tournament with possible loops", [&] {
        return cmd_classify(f, out, classify_tournament_wpl);
    }));
    command("classify-t5", "4-vertex acyclic 3-partite family with loops B", [&] { return cmd_classify_t5(f, out); })
        ->add_option("--b", f.b, "loops such as 11,33 (empty or none for no loops)");
    auto general = command("classify-general", "sufficient conditions for any digraph", [&] {
        return cmd_classify(f, out, [&](const Digraph & h) { return classify_general(h, f.guard.value_or(default_minmax_guard)); });
    });
    add_target(general);
    add_guard(general, "vertex limit for the Min-Max ordering search");

    add_target(command("bg", "bipartite representation", [&] { return cmd_bg(f, out); }));
    auto pib = command("pib-check", "proper interval bigraph test", [&] { return cmd_pib_check(f, out); });
    pib->add_option("--input", f.input, "bipartite graph file");
    add_target(pib);
    add_guard(pib, "longest induced cycle searched");
    auto verify = command("minmax-verify", "check a Min-Max ordering", [&] { return cmd_minmax_verify(f, out); });
    add_target(verify);
    verify->add_option("--ordering", f.ordering, "comma separated vertex names");
    auto find = command("minmax-find", "search for a Min-Max ordering", [&] { return cmd_minmax_find(f, out); });
    add_target(find);
    add_guard(find, "vertex limit");
    add_target(command("witness", "hardness witness search", [&] { return cmd_witness(f, out); }));
    add_guard(command("enumerate-rmpt", "classify all reflexive multipartite tournaments", [&] { return cmd_enumerate(f, out); }),
        "largest vertex count (default 5)");

    try {
        vector<string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        for (auto & [c, body] : commands)
            if (c->parsed())
                return body();
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace minhom
