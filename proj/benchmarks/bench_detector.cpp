/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "frod/detector.hpp"
#include "frod/entropy.hpp"
#include "frod/fuzzy_relation.hpp"

namespace {

frod::MixedTable synthetic(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<frod::Attribute> cols;
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<double> v(n);
    for (auto& x : v) x = noise(rng);
    cols.push_back(frod::Attribute::numerical("a" + std::to_string(a), std::move(v)));
  }
  std::vector<frod::Label> labels(n, frod::Label::Unlabeled);
  labels[0] = frod::Label::Outlier;
  labels[1] = frod::Label::Normal;
  labels[2] = frod::Label::Normal;
  return frod::MixedTable(std::move(cols), std::move(labels)).normalize();
}

std::vector<frod::ObjectId> iota_ids(std::size_t n) {
  std::vector<frod::ObjectId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  return ids;
}

void BM_RelationForAttribute(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto table = synthetic(n, 1, 7);
  const auto ids = iota_ids(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frod::relation_for_attribute(table, 0, ids, 1.0));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RelationForAttribute)->RangeMultiplier(2)->Range(128, 2048)->Complexity(benchmark::oNSquared);

void BM_AllOutlierFactors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto table = synthetic(n, 1, 11);
  const frod::EntropyState es(frod::relation_for_attribute(table, 0, iota_ids(n), 1.0));
  for (auto _ : state) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += frod::outlier_factor(es, i);
    benchmark::DoNotOptimize(sum);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AllOutlierFactors)->RangeMultiplier(2)->Range(128, 2048)->Complexity(benchmark::oNSquared);

void BM_Detect(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto table = synthetic(n, 8, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frod::detect(table, frod::FrodConfig{}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Detect)->RangeMultiplier(2)->Range(128, 1024)->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
