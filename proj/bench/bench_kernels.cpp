// Serial vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <minhom/classify.hpp>
#include <minhom/minmax.hpp>
#include <minhom/solver.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace minhom;

namespace {
    auto exec_of(const benchmark::State & state) -> Exec
    {
        return state.range(0) ? Exec::parallel : Exec::serial;
    }

    auto random_input(std::mt19937_64 & rng, std::size_t n, double p) -> Digraph
    {
        Digraph d;
        for (std::size_t i = 0; i < n; ++i)
            d.add_vertex("d" + std::to_string(i));
        std::bernoulli_distribution arc(p);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (u != v && arc(rng))
                    d.add_arc(u, v);
        return d;
    }

    void bm_bruteforce(benchmark::State & state)
    {
        std::mt19937_64 rng(11);
        auto h = reflexive_closure(make_tt_minus(5));
        auto d = random_input(rng, 11, 0.15);
        CostMatrix c(d.size(), h.size());
        std::uniform_int_distribution<Cost> cost(-9, 9);
        for (Vertex u = 0; u < d.size(); ++u)
            for (Vertex v = 0; v < h.size(); ++v)
                c.set(u, v, cost(rng));
        BruteforceOptions opts;
        opts.exec = exec_of(state);
        for (auto _ : state)
            benchmark::DoNotOptimize(solve_bruteforce(d, h, c, opts));
    }

    void bm_find_minmax(benchmark::State & state)
    {
        // no Min-Max ordering exists, so every permutation is tried
        auto h = reflexive_closure(make_cycle(3));
        for (Vertex v = 3; v < 8; ++v) {
            h.add_vertex(std::to_string(v + 1));
            h.add_arc(v, v);
        }
        for (auto _ : state)
            benchmark::DoNotOptimize(find_minmax(h, default_minmax_guard, exec_of(state)));
    }

    void bm_enumerate(benchmark::State & state)
    {
        for (auto _ : state)
            benchmark::DoNotOptimize(enumerate_reflexive_mpts(5, exec_of(state)));
    }
}

BENCHMARK(bm_bruteforce)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_find_minmax)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
