#include <benchmark/benchmark.h>

#include "soficonv/bernoulli.hpp"
#include "soficonv/pisot.hpp"
#include "soficonv/spectrum.hpp"

using namespace soficonv;

namespace {

FieldDescriptor beta3() { return {{Integer(1), Integer(-3), Integer(1)}, Rational(5, 2), Rational(27, 10)}; }
FieldDescriptor tribonacci() {
  return {{Integer(-1), Integer(-1), Integer(-1), Integer(1)}, Rational(9, 5), Rational(19, 10)};
}

void BM_SternSweep(benchmark::State& state) {
  const auto limit = static_cast<long>(state.range(0));
  for (auto _ : state) {
    Integer acc = 0;
    for (long n = 1; n < limit; ++n) acc += spectrum::stern(n);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * limit);
}
BENCHMARK(BM_SternSweep)->Arg(1 << 10)->Arg(1 << 14);

void BM_SternTable(benchmark::State& state) {
  for (auto _ : state) {
    spectrum::SternTable t(static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(t(t.size() - 1));
  }
}
BENCHMARK(BM_SternTable)->Arg(1 << 16)->Arg(1 << 20);

void BM_CountDp(benchmark::State& state) {
  Integer n = 1;
  n <<= static_cast<unsigned>(state.range(0));
  n -= 12345;
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli::count_representations(n, 2, 3));
}
BENCHMARK(BM_CountDp)->Arg(64)->Arg(1024);

void BM_CarryClosure(benchmark::State& state) {
  const bool tri = state.range(0) == 1;
  auto base = pisot::PisotBase::create(tri ? tribonacci() : beta3(), tri ? 2 : 3);
  for (auto _ : state) {
    auto t = pisot::build_transducer(base, pisot::Window::Symmetric);
    benchmark::DoNotOptimize(t.edges.size());
  }
}
BENCHMARK(BM_CarryClosure)->Arg(0)->Arg(1);

void BM_Lyapunov(benchmark::State& state) {
  const auto mode = state.range(0) == 0 ? spectrum::LyapunovMode::BinaryDrive : spectrum::LyapunovMode::Levy;
  for (auto _ : state) benchmark::DoNotOptimize(spectrum::lyapunov_estimate(mode, 0, 10000).per_quotient);
}
BENCHMARK(BM_Lyapunov)->Arg(0)->Arg(1);

}  // namespace
BENCHMARK_MAIN();
