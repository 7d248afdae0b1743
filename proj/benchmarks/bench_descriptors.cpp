#include <benchmark/benchmark.h>

#include <vector>

#include "egf/cluster.hpp"
#include "egf/graph.hpp"
#include "egf/pathint.hpp"
#include "egf/rng.hpp"
#include "egf/sdp.hpp"

namespace {

egf::ParticleState RandomState(std::size_t n) {
  return egf::init_state(n, 7.0, 0.03, 1.0, 0.0, std::uint64_t{42});
}

void BM_VelocityKnnGraph(benchmark::State& state) {
  const auto particles = RandomState(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(egf::velocity_knn_graph(particles, 20));
  }
}
BENCHMARK(BM_VelocityKnnGraph)->Arg(200)->Arg(400)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_NodeDescriptor(benchmark::State& state) {
  const auto g = egf::velocity_knn_graph(RandomState(static_cast<std::size_t>(state.range(0))), 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(egf::node_descriptor(g).phi_set);
  }
}
BENCHMARK(BM_NodeDescriptor)->Arg(200)->Arg(400)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_FullDescriptor(benchmark::State& state) {
  const auto g = egf::velocity_knn_graph(RandomState(static_cast<std::size_t>(state.range(0))), 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(egf::descriptor(g).phi_set);
  }
}
BENCHMARK(BM_FullDescriptor)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Baseline(benchmark::State& state) {
  const auto g = egf::velocity_knn_graph(RandomState(static_cast<std::size_t>(state.range(0))), 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(egf::baseline_collectiveness(g));
  }
}
BENCHMARK(BM_Baseline)->Arg(200)->Arg(400)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_SdpStep(benchmark::State& state) {
  egf::Rng rng(7);
  auto particles = RandomState(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    particles = egf::step(particles, rng);
  }
}
BENCHMARK(BM_SdpStep)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_ClusterBlobs(benchmark::State& state) {
  egf::Rng rng(3);
  const std::size_t per_blob = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<double>> rows;
  for (int b = 0; b < 3; ++b) {
    for (std::size_t i = 0; i < per_blob; ++i) {
      rows.push_back({10.0 * b + rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    }
  }
  const egf::PointSet points(rows);
  for (auto _ : state) {
    benchmark::DoNotOptimize(egf::cluster_points(points, {.k = 10, .k0 = 1, .target_k = 3}));
  }
}
BENCHMARK(BM_ClusterBlobs)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
