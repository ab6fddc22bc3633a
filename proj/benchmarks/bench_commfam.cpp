#include <benchmark/benchmark.h>

#include "commfam/argshift.hpp"
#include "commfam/catalog.hpp"
#include "commfam/pipeline.hpp"

using namespace commfam;

namespace {

Poly dense_poly(const std::vector<VarId>& vars, int terms, uint64_t seed) {
  Rng rng(seed);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> fs;
    int deg = static_cast<int>(rng.draw(1, 3));
    for (int d = 0; d < deg; ++d)
      fs.push_back({vars[static_cast<size_t>(rng.draw(0, static_cast<long>(vars.size()) - 1))], 1});
    p += Poly::term(Monomial(std::move(fs)), rng.draw_rational(50));
  }
  return p;
}

void BM_PolyMul(benchmark::State& state) {
  std::vector<VarId> vars;
  for (int i = 0; i < 6; ++i)
    vars.push_back(VarRegistry::instance().fresh_coordinate("b" + std::to_string(i)));
  Poly a = dense_poly(vars, static_cast<int>(state.range(0)), 1);
  Poly b = dense_poly(vars, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    Poly c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_PolyMul)->Arg(16)->Arg(64);

void BM_PoissonBracketCasimir(benchmark::State& state) {
  LieAlgebra sl3 = catalog("sl", 3);
  InvariantSet inv = classical_invariants(sl3);
  const Poly& cubic = inv.generators.back();
  Poly probe = sl3.coordinate_poly(0) * sl3.coordinate_poly(3);
  for (auto _ : state) {
    RatFunc br = poisson_bracket(sl3, cubic, probe);
    benchmark::DoNotOptimize(br);
  }
}
BENCHMARK(BM_PoissonBracketCasimir);

void BM_SymbolicIndexSo5(benchmark::State& state) {
  LieAlgebra so5 = catalog("so", 5);
  MatK b = kirillov_matrix(so5);
  for (auto _ : state) {
    int r = matk_rank(b);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SymbolicIndexSo5);

void BM_ClassicalInvariantsSp4(benchmark::State& state) {
  LieAlgebra sp4 = catalog("sp", 4);
  for (auto _ : state) {
    InvariantSet inv = classical_invariants(sp4);
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_ClassicalInvariantsSp4);

void BM_ConstructHeis5(benchmark::State& state) {
  LieAlgebra h5 = catalog("heis", 5);
  ConstructOptions opts;
  for (auto _ : state) {
    Certificate cert = construct(h5, opts);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_ConstructHeis5);

void BM_ConstructStrictlyUpper4(benchmark::State& state) {
  LieAlgebra n4 = catalog("strictly_upper", 4);
  ConstructOptions opts;
  for (auto _ : state) {
    Certificate cert = construct(n4, opts);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_ConstructStrictlyUpper4);

}  // namespace

BENCHMARK_MAIN();
