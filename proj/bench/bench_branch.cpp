// Parallel seed fan-out vs. the serial reference search.

#include <benchmark/benchmark.h>

#include "cuntz/morphism.hpp"
#include "cuntz/reps.hpp"

using namespace cuntz;

namespace {

// a level-3 endomorphism of O_3 keeps the seed set large
BranchSystem make_system(int which) {
  switch (which) {
    case 0:
      return BranchSystem(PermRep::cycle(Word(2, {1, 1, 2})), perm_endo("1342").morphism());
    case 1:
      return BranchSystem(PermRep::cycle(Word(3, {1, 2, 3})), nakanishi().morphism());
    default: {
      std::vector<int> image(27);
      for (int i = 0; i < 27; ++i) image[i] = (i * 5 + 7) % 27;
      return BranchSystem(PermRep::cycle(Word(3, {1, 1, 2, 3})),
                          PermEndo(WordPermutation(3, 3, image)).morphism());
    }
  }
}

void BM_branch_parallel(benchmark::State& state) {
  const BranchSystem sys = make_system(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(branch(sys).fingerprint.size());
}

void BM_branch_serial(benchmark::State& state) {
  const BranchSystem sys = make_system(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(branch_serial(sys).fingerprint.size());
}

}  // namespace

BENCHMARK(BM_branch_parallel)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_branch_serial)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
