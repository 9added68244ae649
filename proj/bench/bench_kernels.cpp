// Parallel kernels against their serial reference twins. Run with
// OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <memory>

#include "hbody/kernel_orbit.hpp"
#include "hbody/orbit.hpp"
#include "hbody/surface_hom.hpp"
#include "hbody/todd_coxeter.hpp"

using namespace hbody;

namespace {

  OrbitSet const& depth9() {
    static OrbitSet const s = generate_c0({});
    return s;
  }

  GroupPtr const& example2() {
    static GroupPtr const g = std::make_shared<FiniteGroup const>(coset_enumerate(
        make_presentation({"al", "be", "ga", "de"},
                          {"al^3", "be^3", "ga^3", "de^3", "[al,be]^3", "[al,de]", "[ga,de]",
                           "[[al,be],al]", "[[al,be],be]", "ga^-1 al ga be^-1 al^-1 be",
                           "ga^-1 be ga al^-1 be^-1 al", "de^-1 be de al^-1 be^-1 al"}),
        "example2"));
    return g;
  }

  std::vector<Epimorphism> const& example2_thetas() {
    static std::vector<Epimorphism> const thetas = [] {
      auto const& g = example2();
      Element     a = g->generators()[0], b = g->generators()[2];
      std::vector<Epimorphism> out;
      for (auto [r, t] : partner_pairs(*g, a, b, true)) {
        out.push_back(make_epimorphism(g, a, b, r, t));
      }
      return out;
    }();
    return thetas;
  }

  KernelOrbit const& example1_orbit() {
    static KernelOrbit const orbit = [] {
      auto theta = example1_epimorphism(11, 5, 3);
      return kernel_orbit(theta, automorphisms(theta.group()));
    }();
    return orbit;
  }

  void BM_generate_c0_parallel(benchmark::State& state) {
    OrbitOptions opts{.depth = static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) {
      benchmark::DoNotOptimize(generate_c0(opts).size());
    }
  }

  void BM_generate_c0_serial(benchmark::State& state) {
    OrbitOptions opts{.depth = static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) {
      benchmark::DoNotOptimize(reference::generate_c0(opts).size());
    }
  }

  void BM_partner_pairs_parallel(benchmark::State& state) {
    auto const& g = *example2();
    for (auto _ : state) {
      benchmark::DoNotOptimize(partner_pairs(g, g.generators()[0], g.generators()[2], true));
    }
  }

  void BM_partner_pairs_serial(benchmark::State& state) {
    auto const& g = *example2();
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          reference::partner_pairs(g, g.generators()[0], g.generators()[2], true));
    }
  }

  void BM_batch_witnesses_parallel(benchmark::State& state) {
    auto const& thetas = example2_thetas();
    depth9();
    for (auto _ : state) {
      benchmark::DoNotOptimize(batch_witnesses(thetas, depth9()));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * thetas.size()));
  }

  void BM_batch_witnesses_serial(benchmark::State& state) {
    auto const& thetas = example2_thetas();
    depth9();
    for (auto _ : state) {
      benchmark::DoNotOptimize(reference::batch_witnesses(thetas, depth9()));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * thetas.size()));
  }

  std::vector<ElementPair> const& heisenberg_pairs() {
    static std::vector<ElementPair> const pairs = noncommuting_pairs(heisenberg(5));
    return pairs;
  }

  void BM_pair_orbit_count_parallel(benchmark::State& state) {
    static FiniteGroup const               g    = heisenberg(5);
    static std::vector<Automorphism> const auts = automorphisms(g);
    for (auto _ : state) {
      benchmark::DoNotOptimize(pair_orbit_count(g, auts, heisenberg_pairs()));
    }
  }

  void BM_pair_orbit_count_serial(benchmark::State& state) {
    static FiniteGroup const               g    = heisenberg(5);
    static std::vector<Automorphism> const auts = automorphisms(g);
    for (auto _ : state) {
      benchmark::DoNotOptimize(reference::pair_orbit_count(g, auts, heisenberg_pairs()));
    }
  }

  void BM_intersection_parallel(benchmark::State& state) {
    auto const& orbit = example1_orbit();
    for (auto _ : state) {
      benchmark::DoNotOptimize(intersection_avoids_c0(orbit, depth9()).avoids);
    }
  }

  void BM_intersection_serial(benchmark::State& state) {
    auto const& orbit = example1_orbit();
    for (auto _ : state) {
      benchmark::DoNotOptimize(reference::intersection_avoids_c0(orbit, depth9()).avoids);
    }
  }

}  // namespace

BENCHMARK(BM_generate_c0_parallel)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_generate_c0_serial)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_partner_pairs_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_partner_pairs_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_batch_witnesses_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_batch_witnesses_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pair_orbit_count_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pair_orbit_count_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_intersection_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_intersection_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
