#include <benchmark/benchmark.h>

#include <random>

#include "loglocal/fleet.hpp"
#include "loglocal/givental.hpp"
#include "loglocal/lattice.hpp"
#include "loglocal/tropical.hpp"
#include "loglocal/verify.hpp"

using namespace loglocal;

namespace {

IntMat random_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-50, 50);
  IntMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
  return a;
}

CurveClass degree_for(const NefToricProduct& x, int d) {
  CurveClass out;
  out.d.assign(x.num_factors(), Int(d));
  return out;
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
  IntMat a = random_matrix(static_cast<int>(state.range(0)), 12345);
  for (auto _ : state) {
    SnfResult f = smith_normal_form(a);
    benchmark::DoNotOptimize(f.s(0, 0));
  }
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 8);

static void BM_TwoPointMultiplicity(benchmark::State& state) {
  NefToricProduct x = fleet_geometry("P3");
  CurveClass d = degree_for(x, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Int m = multiplicity(build_q_curve(x, d));
    benchmark::DoNotOptimize(m.get_mpz_t());
  }
}
BENCHMARK(BM_TwoPointMultiplicity)->RangeMultiplier(4)->Range(1, 256);

static void BM_LocalSeriesTerm(benchmark::State& state) {
  NefToricProduct x = fleet_geometry("P2");
  CurveClass d = degree_for(x, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ISeriesTerm t = i_term_local(x, d);
    benchmark::DoNotOptimize(t.body.is_zero());
  }
}
BENCHMARK(BM_LocalSeriesTerm)->RangeMultiplier(2)->Range(1, 32);

static void BM_TwoPointExtraction(benchmark::State& state) {
  NefToricProduct x = fleet_geometry("P(1,1,2)");
  CurveClass d = degree_for(x, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Rat q = q_local_series(x, d);
    benchmark::DoNotOptimize(q.get_num().get_mpz_t());
  }
}
BENCHMARK(BM_TwoPointExtraction)->RangeMultiplier(2)->Range(1, 16);

static void BM_VerifySweep(benchmark::State& state) {
  NefToricProduct x = fleet_geometry("P1xP1");
  std::vector<Int> dmax(2, Int(state.range(0)));
  for (auto _ : state) {
    std::vector<DegreeReport> reports = sweep(x, dmax);
    benchmark::DoNotOptimize(reports.size());
  }
}
BENCHMARK(BM_VerifySweep)->DenseRange(2, 6, 2);

BENCHMARK_MAIN();
