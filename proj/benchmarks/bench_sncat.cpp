#include <benchmark/benchmark.h>

#include <cstddef>  // for size_t
#include <random>   // for mt19937_64
#include <vector>   // for vector

#include "sncat/bicat.hpp"
#include "sncat/decat.hpp"
#include "sncat/linear.hpp"
#include "sncat/partitions.hpp"
#include "sncat/relations.hpp"

namespace {

  template <typename T>
  std::vector<std::pair<T, T>> random_pairs(std::vector<T> const& pool,
                                            std::size_t           count) {
    std::mt19937_64                            rng(1);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<std::pair<T, T>>               result;
    for (std::size_t i = 0; i < count; ++i) {
      result.emplace_back(pool[pick(rng)], pool[pick(rng)]);
    }
    return result;
  }

  void BM_RelationCompose(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    std::vector<sncat::BinaryRelation> pool;
    for (auto const& p : sncat::symmetric_inverse_monoid(n)) {
      pool.push_back(p.to_relation());
    }
    auto const  pairs = random_pairs(pool, 1024);
    std::size_t i     = 0;
    for (auto _ : state) {
      auto const& [a, b] = pairs[i++ & 1023];
      benchmark::DoNotOptimize(compose(a, b));
    }
  }
  BENCHMARK(BM_RelationCompose)->Arg(3)->Arg(5);

  void BM_PartitionProduct(benchmark::State& state) {
    auto const  n     = static_cast<std::size_t>(state.range(0));
    auto const  pairs = random_pairs(sncat::partition_monoid(n), 1024);
    std::size_t i     = 0;
    for (auto _ : state) {
      auto const& [a, b] = pairs[i++ & 1023];
      benchmark::DoNotOptimize(product(a, b));
    }
  }
  BENCHMARK(BM_PartitionProduct)->Arg(2)->Arg(4);

  void BM_FactorizableSubmonoid(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(sncat::maximal_factorizable_submonoid(n));
    }
  }
  BENCHMARK(BM_FactorizableSubmonoid)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

  void BM_SampledAxioms(benchmark::State& state) {
    auto const C = state.range(0) == 0 ? sncat::relation_two_category(3)
                                       : sncat::partition_two_category(3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          check_axioms(C, sncat::CheckMode::sampled(7, 100000)).passed());
    }
  }
  BENCHMARK(BM_SampledAxioms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void BM_GrothendieckRing(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      sncat::CompletedCategory const K{
          sncat::LinearTwoCategory(sncat::relation_two_category(n))};
      benchmark::DoNotOptimize(grothendieck_ring(K).rank());
    }
  }
  BENCHMARK(BM_GrothendieckRing)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

  void BM_MobiusBasisIS(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(sncat::mobius_basis_is(n));
    }
  }
  BENCHMARK(BM_MobiusBasisIS)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
