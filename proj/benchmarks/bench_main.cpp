#include <benchmark/benchmark.h>

#include "algmono/constructions.hpp"
#include "algmono/verdict.hpp"
#include "algmono_tools/random.hpp"

using namespace algmono;

namespace {

LambdaMatrix random_lambda(std::size_t n, FieldSpec f, std::uint64_t seed) {
  tools::Rng rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3), width(0, 3), shift(-2, 2);
  LambdaMatrix m(n, n, LaurentPoly::from_ints({}, 0, f));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<long> cs;
      for (long k = 0, w = width(rng); k <= w; ++k) cs.push_back(coeff(rng));
      m(i, j) = LaurentPoly::from_ints(cs, shift(rng), f);
    }
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FieldSpec f = state.range(1) == 0 ? FieldSpec::rationals() : FieldSpec::prime(static_cast<std::uint32_t>(state.range(1)));
  LambdaMatrix a = random_lambda(n, f, 1234 + n);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->ArgsProduct({{2, 3, 4, 5}, {0, 2, 3}})->Args({6, 2})->Args({6, 3});

void BM_CoverHomologyMappingTorus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  tools::Rng rng(99);
  MappingTorus mt = mapping_torus_presentation(free_abelian_presentation(n), automorphism_from_matrix(tools::random_gl(rng, n, 8)));
  for (auto _ : state) benchmark::DoNotOptimize(cover_homology(mt.presentation, mt.nu));
}
BENCHMARK(BM_CoverHomologyMappingTorus)->DenseRange(1, 5);

void BM_CrosscheckRandom(benchmark::State& state) {
  tools::Rng rng(7);
  std::vector<std::pair<Presentation, ZMap>> cases;
  while (cases.size() < 50) {
    auto c = tools::random_case(rng);
    try {
      validate_zmap(c.presentation, c.nu);
    } catch (const ValidationError&) {
      continue;
    }
    cases.emplace_back(c.presentation, c.nu);
  }
  const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};
  for (auto _ : state)
    for (const auto& [p, nu] : cases) benchmark::DoNotOptimize(crosscheck_equivalence(p, nu, fields));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cases.size()));
}
BENCHMARK(BM_CrosscheckRandom);

void BM_MatrixJordan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  KMatrix a(n, n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = Scalar(1);
    if (i + 1 < n && i % 3 != 2) a(i, i + 1) = Scalar(1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(matrix_jordan_at(a, Scalar(1)));
}
BENCHMARK(BM_MatrixJordan)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
