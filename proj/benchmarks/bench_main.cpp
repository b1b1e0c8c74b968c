#include <benchmark/benchmark.h>

#include <map>
#include <utility>

#include "commkit/detect.hpp"
#include "commkit/generators.hpp"
#include "commkit/measures.hpp"
#include "commkit/topology.hpp"

using namespace commkit;

namespace {

const PlantedNetwork& network(std::size_t n, double mu) {
    static std::map<std::pair<std::size_t, double>, PlantedNetwork> cache;
    auto it = cache.find({n, mu});
    if (it == cache.end()) {
        LfrParams p;
        p.n = n;
        p.mu = mu;
        RngStream rng(1);
        it = cache.emplace(std::pair{n, mu}, lfr(p, rng)).first;
    }
    return it->second;
}

void BM_Lfr(benchmark::State& state) {
    LfrParams p;
    p.n = static_cast<std::size_t>(state.range(0));
    p.mu = 0.4;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        RngStream rng(++seed);
        benchmark::DoNotOptimize(lfr(p, rng));
    }
}
BENCHMARK(BM_Lfr)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_Detector(benchmark::State& state, const char* name) {
    const PlantedNetwork& net = network(static_cast<std::size_t>(state.range(0)), 0.4);
    for (auto _ : state) {
        RngStream rng(7);
        benchmark::DoNotOptimize(run_detector(name, net.graph, {}, rng));
    }
}
BENCHMARK_CAPTURE(BM_Detector, louvain, "louvain")->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Detector, fastgreedy, "fastgreedy")->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Detector, walktrap, "walktrap")->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Detector, infomap, "infomap")->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Detector, label_propagation, "label_propagation")->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Detector, mcl, "mcl")->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Detector, radetal, "radetal")->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Detector, leading_eigenvector, "leading_eigenvector")->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Nmi(benchmark::State& state) {
    const PlantedNetwork& net = network(static_cast<std::size_t>(state.range(0)), 0.4);
    RngStream rng(3);
    const DetectionResult found = detect_label_propagation(net.graph, {}, rng);
    for (auto _ : state) benchmark::DoNotOptimize(nmi(found.partition, net.planted));
}
BENCHMARK(BM_Nmi)->Arg(1000)->Arg(4000);

void BM_Modularity(benchmark::State& state) {
    const PlantedNetwork& net = network(static_cast<std::size_t>(state.range(0)), 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(modularity(net.graph, net.planted));
}
BENCHMARK(BM_Modularity)->Arg(1000)->Arg(4000);

void BM_EdgeBetweenness(benchmark::State& state) {
    const PlantedNetwork& net = network(static_cast<std::size_t>(state.range(0)), 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(edge_betweenness(net.graph));
}
BENCHMARK(BM_EdgeBetweenness)->Arg(1000)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
