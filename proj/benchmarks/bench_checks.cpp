// Copyright 2026 The lsakit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "lsakit/bialgebra.hpp"
#include "lsakit/catalog.hpp"
#include "lsakit/check.hpp"
#include "lsakit/construct.hpp"
#include "lsakit/matched.hpp"

namespace lsakit {
namespace {

const SpecialSymplecticData& ssla4() {
  static const SpecialSymplecticData s = special_symplectic_of(catalog_get("ssla-2d-4"));
  return s;
}

const Plsa& plsa4() {
  static const Plsa p = plsa_of(catalog_get("plsa-2d-IV"));
  return p;
}

// Cotangent doubles iterated `level` times from ssla-2d-4: dimension 2^(level+1).
SpecialSymplecticData doubled(int level) {
  SpecialSymplecticData s = ssla4();
  for (int i = 0; i < level; ++i) {
    const DoubleData d = cotangent_double(s);
    s = {d.bracket, d.conn, *d.omega_p};
  }
  return s;
}

void BM_CheckLeftSymmetric(benchmark::State& state) {
  const SpecialSymplecticData s = doubled(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_left_symmetric(s.conn));
  state.counters["dim"] = static_cast<double>(s.conn.dim());
}
BENCHMARK(BM_CheckLeftSymmetric)->DenseRange(0, 3);

void BM_CheckSpecialSymplectic(benchmark::State& state) {
  const SpecialSymplecticData s = doubled(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_special_symplectic(s));
  state.counters["dim"] = static_cast<double>(s.conn.dim());
}
BENCHMARK(BM_CheckSpecialSymplectic)->DenseRange(0, 2);

void BM_HypersymplecticTangent(benchmark::State& state) {
  const SpecialSymplecticData s = doubled(static_cast<int>(state.range(0)));
  const FamilyParams p{Family::kF3, 5, 1, 4, 1};
  for (auto _ : state) benchmark::DoNotOptimize(hypersymplectic_from_tangent(s, p));
}
BENCHMARK(BM_HypersymplecticTangent)->DenseRange(0, 1);

void BM_MatchedPair(benchmark::State& state) {
  const MatchedPairData mp = dual_matched_pair(plsa4(), plsa4());
  for (auto _ : state) benchmark::DoNotOptimize(check_matched_pair(mp));
}
BENCHMARK(BM_MatchedPair);

void BM_ROperators(benchmark::State& state) {
  const Mode mode = state.range(0) ? Mode::kCrossCheck : Mode::kProduction;
  RMatrix r(2);
  r.r(0, 0) = 1;
  r.r(0, 1) = Rational(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(R_operators(plsa4(), r, mode));
}
BENCHMARK(BM_ROperators)->Arg(0)->Arg(1);

void BM_DrinfeldDouble(benchmark::State& state) {
  const Plsa p = plsa_of(catalog_get("plsa-2d-II"));
  for (auto _ : state) benchmark::DoNotOptimize(drinfeld_double(p, CoproductPair(2)));
}
BENCHMARK(BM_DrinfeldDouble);

}  // namespace
}  // namespace lsakit

BENCHMARK_MAIN();
