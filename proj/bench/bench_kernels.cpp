#include <benchmark/benchmark.h>

#include <random>

#include "sparsefac/config.hpp"
#include "sparsefac/factor_engine.hpp"
#include "sparsefac/isolation.hpp"
#include "sparsefac/ntt.hpp"
#include "sparsefac/poly_text.hpp"

using namespace sparsefac;

namespace {

constexpr std::uint32_t kPrime = 998244353;

std::vector<std::uint32_t> random_vec(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % kPrime);
  return v;
}

int threads_arg(const benchmark::State& state) { return static_cast<int>(state.range(1)); }

void BM_NttForward(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  kernels::set_threads(threads_arg(state));
  const Ntt& ntt = Ntt::get(kPrime);
  auto a = random_vec(n, 1);
  for (auto _ : state) {
    if (threads_arg(state) == 1) ntt.forward_serial(a.data(), n);
    else ntt.forward(a.data(), n);
    benchmark::DoNotOptimize(a.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
  kernels::set_threads(1);
}

void BM_Convolve(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  kernels::set_threads(threads_arg(state));
  auto a = random_vec(n, 2), b = random_vec(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(convolve_ntt(a, b, kPrime, threads_arg(state) > 1));
  kernels::set_threads(1);
}

void BM_ConvolveSchoolbook(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  auto a = random_vec(n, 2), b = random_vec(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(convolve_schoolbook(a, b, kPrime));
}

void BM_Injectivity(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  kernels::set_threads(threads_arg(state));
  auto exps = monomials_up_to(n, 2);
  IsolationScheme s = find_isolating_prime(n, 2);
  for (auto _ : state) {
    bool ok = threads_arg(state) == 1 ? injective_mod_p_serial(exps, s.w, s.p)
                                      : injective_mod_p_parallel(exps, s.w, s.p);
    benchmark::DoNotOptimize(ok);
  }
  kernels::set_threads(1);
}

void BM_ConstantDegreeFactors(benchmark::State& state) {
  Config cfg;
  cfg.jobs = static_cast<unsigned>(state.range(0));
  kernels::set_threads(static_cast<int>(cfg.jobs));
  SparsePoly f = parse_expression("(z1*z2 + z3)^2*(z1 + z2 + z3 + 1)*(z1^3 + z2 + 5)", z_names(3));
  for (auto _ : state) benchmark::DoNotOptimize(constant_degree_factors(f, 2, cfg));
  kernels::set_threads(1);
}

}  // namespace

BENCHMARK(BM_NttForward)->ArgsProduct({{1 << 12, 1 << 16, 1 << 20}, {1, 2, 4}});
BENCHMARK(BM_Convolve)->ArgsProduct({{1 << 10, 1 << 16}, {1, 4}});
BENCHMARK(BM_ConvolveSchoolbook)->Arg(1 << 10);
BENCHMARK(BM_Injectivity)->ArgsProduct({{4, 6, 8}, {1, 4}});
BENCHMARK(BM_ConstantDegreeFactors)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
