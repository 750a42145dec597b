#include <benchmark/benchmark.h>

#include <string>

#include "lpa/closure.hpp"
#include "lpa/element.hpp"
#include "lpa/graph.hpp"
#include "lpa/ideal.hpp"

namespace {

// Layered DAG with two forward edges per vertex; n is large enough that the
// 2^n subset scan dominates.
lpa::Graph layered_graph(std::size_t n) {
  lpa::GraphBuilder b;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("v" + std::string(i < 10 ? "0" : "") + std::to_string(i));
    b.add_vertex(names.back());
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    b.add_bundle(names[i], names[i + 1], lpa::Multiplicity::finite(1));
    if (i + 2 < n && i % 2 == 0) {
      b.add_bundle(names[i], names[i + 2], lpa::Multiplicity::finite(1));
    }
  }
  return b.build();
}

// Small branching graph whose annihilation product grid is large enough to
// time: a binary tree with doubled edges.
lpa::Graph product_graph() {
  lpa::GraphBuilder b;
  b.add_vertices({"a", "b", "c", "d", "e", "f", "g"});
  b.add_bundle("a", "b", lpa::Multiplicity::finite(2));
  b.add_bundle("a", "c", lpa::Multiplicity::finite(2));
  b.add_bundle("b", "d", lpa::Multiplicity::finite(2));
  b.add_bundle("b", "e", lpa::Multiplicity::finite(1));
  b.add_bundle("c", "f", lpa::Multiplicity::finite(2));
  b.add_bundle("c", "g", lpa::Multiplicity::finite(1));
  return b.build();
}

void bench_enumerate_hs_serial(benchmark::State& state) {
  lpa::Graph g = layered_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpa::enumerate_hs_serial(g, 64));
  }
}

void bench_enumerate_hs_parallel(benchmark::State& state) {
  lpa::Graph g = layered_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpa::enumerate_hs(g, 64));
  }
}

void bench_quasibaer_serial(benchmark::State& state) {
  lpa::Graph g = layered_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpa::is_quasi_baer_serial(g, 64));
  }
}

void bench_quasibaer_parallel(benchmark::State& state) {
  lpa::Graph g = layered_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpa::is_quasi_baer(g, 64));
  }
}

void bench_verify_serial(benchmark::State& state) {
  lpa::Graph g = product_graph();
  lpa::AdmissiblePair pair =
      lpa::validate_pair(g, g.resolve({"b", "d", "e"}), lpa::VertexSet{});
  lpa::IdealPresentation pres = lpa::IdealPresentation::make(pair, {}, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lpa::verify_annihilation_serial(pres, static_cast<std::size_t>(state.range(0))));
  }
}

void bench_verify_parallel(benchmark::State& state) {
  lpa::Graph g = product_graph();
  lpa::AdmissiblePair pair =
      lpa::validate_pair(g, g.resolve({"b", "d", "e"}), lpa::VertexSet{});
  lpa::IdealPresentation pres = lpa::IdealPresentation::make(pair, {}, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lpa::verify_annihilation(pres, static_cast<std::size_t>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(bench_enumerate_hs_serial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_enumerate_hs_parallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_quasibaer_serial)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_quasibaer_parallel)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_verify_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_verify_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
