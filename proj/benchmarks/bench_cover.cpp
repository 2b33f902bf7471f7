#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "spincover/cover.hpp"
#include "spincover/group.hpp"
#include "spincover/sylow.hpp"

using namespace spincover;

namespace {

std::vector<CoverElement> random_elements(int n, int alpha, size_t count,
                                          uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> img(n);
  std::vector<CoverElement> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    for (int j = 0; j < n; ++j) img[j] = j + 1;
    for (int j = n - 1; j > 0; --j)
      std::swap(img[j], img[rng() % (j + 1)]);
    CoverElement e = lift_perm(Perm::from_images(img), alpha);
    if (rng() & 1) e = central_z(n, alpha) * e;
    out.push_back(e);
  }
  return out;
}

void BM_CoverMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto elems = random_elements(n, 0, 256, 7);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elems[i % 256] * elems[(i + 1) % 256]);
    ++i;
  }
}
BENCHMARK(BM_CoverMul)->Arg(8)->Arg(15);

void BM_CocycleExponent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto elems = random_elements(n, 1, 256, 11);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cocycle_exponent(elems[i % 256].perm, elems[(i + 1) % 256].perm, 1));
    ++i;
  }
}
BENCHMARK(BM_CocycleExponent)->Arg(8)->Arg(15);

void BM_SylowClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto s = sylow(make_spec(Family::TwoSplus, n), 2);
    benchmark::DoNotOptimize(s.order);
  }
}
BENCHMARK(BM_SylowClosure)->Arg(6)->Arg(10)->Arg(15);

void BM_CoverEnumeration_2S6(benchmark::State& state) {
  std::vector<CoverElement> gens{central_z(6, 0)};
  for (int j = 1; j <= 5; ++j) gens.push_back(gen_t(j, 6, 0));
  for (auto _ : state) {
    auto g = closure(gens, cover_identity(6, 0));
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_CoverEnumeration_2S6);

void BM_PRankClique(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = p_rank(make_spec(Family::TwoSplus, n), 2);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(BM_PRankClique)->Arg(6)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
