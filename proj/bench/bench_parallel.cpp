#include <benchmark/benchmark.h>

#include "belyi/blocks.hpp"
#include "belyi/enumerate.hpp"
#include "belyi/families.hpp"

using namespace belyi;

namespace {

const Passport kDegree30 = Passport::parse("[1^2 2^14, 3^7 9^1, 2^1 4^7]");

void enumerate_mode(benchmark::State& st, bool parallel) {
  EnumerateOptions opt;
  opt.parallel = parallel;
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_dessins(kDegree30, opt).dessins.size());
}

void BM_EnumerateSerial(benchmark::State& st) { enumerate_mode(st, false); }
void BM_EnumerateParallel(benchmark::State& st) { enumerate_mode(st, true); }

// a large primitive member, so the scan runs to the end
void BM_PrimitiveSerial(benchmark::State& st) {
  Dessin d = family("BM2.case6a", static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(is_primitive_serial(d).primitive);
}
void BM_PrimitiveParallel(benchmark::State& st) {
  Dessin d = family("BM2.case6a", static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(is_primitive(d).primitive);
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrimitiveSerial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrimitiveParallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
