#include "borelz/chromatic.hpp"
#include "borelz/period.hpp"
#include "borelz/transition_graph.hpp"
#include "borelz/witness.hpp"

#include <benchmark/benchmark.h>

using namespace borelz;

namespace {

struct Instance {
    std::vector<std::uint32_t> gens;
    std::uint32_t colors;
};

const std::vector<Instance> kInstances = {
    {{1}, 2},          {{1, 2}, 4},       {{1, 5, 8}, 3},    {{1, 5, 8}, 4},
    {{1, 2, 3, 4}, 6}, {{2, 7, 9}, 4},    {{1, 3, 5, 7, 9}, 3},
};

Sft instance_sft(const benchmark::State& state) {
    const auto& in = kInstances[static_cast<std::size_t>(state.range(0))];
    return coloring_sft(GeneratorSet(in.gens), Alphabet(in.colors));
}

void label(benchmark::State& state, const Sft& sft, std::size_t vertices) {
    state.SetLabel("S=" + sft.coloring_rule()->to_string() + " b=" + std::to_string(sft.alphabet().size()));
    state.counters["codes"] = static_cast<double>(sft.code_space());
    state.counters["vertices"] = static_cast<double>(vertices);
}

void BM_Build(benchmark::State& state) {
    const auto sft = instance_sft(state);
    std::size_t v = 0;
    for (auto _ : state) {
        auto g = TransitionGraph::build(sft);
        v = g.vertex_count();
        benchmark::DoNotOptimize(g);
    }
    label(state, sft, v);
}

void BM_BuildOnDemand(benchmark::State& state) {
    const auto sft = instance_sft(state);
    BuildOptions sparse;
    sparse.dense_threshold = 0;
    std::size_t v = 0;
    for (auto _ : state) {
        auto g = TransitionGraph::build(sft, sparse);
        v = g.vertex_count();
        benchmark::DoNotOptimize(g);
    }
    label(state, sft, v);
}

void BM_Scc(benchmark::State& state) {
    const auto sft = instance_sft(state);
    const auto g = TransitionGraph::build(sft);
    for (auto _ : state) {
        auto s = strongly_connected_components(g);
        benchmark::DoNotOptimize(s);
    }
    label(state, sft, g.vertex_count());
}

void BM_Periods(benchmark::State& state) {
    const auto sft = instance_sft(state);
    const auto g = TransitionGraph::build(sft);
    const auto s = strongly_connected_components(g);
    for (auto _ : state) {
        Period acc = 0;
        for (std::uint32_t c = 0; c < s.component_count(); ++c) acc += period(g, s, c);
        benchmark::DoNotOptimize(acc);
    }
    label(state, sft, g.vertex_count());
}

void BM_Decide(benchmark::State& state) {
    const auto sft = instance_sft(state);
    for (auto _ : state) benchmark::DoNotOptimize(decide(sft).answer);
    label(state, sft, TransitionGraph::build(sft).vertex_count());
}

void BM_ExtractCertificate(benchmark::State& state) {
    const auto sft = instance_sft(state);
    for (auto _ : state) benchmark::DoNotOptimize(extract_certificate(sft));
    label(state, sft, TransitionGraph::build(sft).vertex_count());
}

void BM_ChiBpcLoop(benchmark::State& state) {
    static const std::vector<std::vector<std::uint32_t>> sets = {{1, 2}, {1, 5, 8}, {2, 7, 9}, {1, 2, 3, 4}};
    const GeneratorSet gens(sets[static_cast<std::size_t>(state.range(0))]);
    ChiOptions opts;
    opts.method = ChiMethod::BpcOnly;
    for (auto _ : state) benchmark::DoNotOptimize(chi(gens, opts).value);
    state.SetLabel("S=" + gens.to_string());
}

void all_instances(benchmark::internal::Benchmark* b) {
    for (std::size_t i = 0; i < kInstances.size(); ++i) b->Arg(static_cast<int64_t>(i));
}

} // namespace

BENCHMARK(BM_Build)->Apply(all_instances)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildOnDemand)->Apply(all_instances)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scc)->Apply(all_instances)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Periods)->Apply(all_instances)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Decide)->Apply(all_instances)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtractCertificate)->Arg(1)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChiBpcLoop)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
