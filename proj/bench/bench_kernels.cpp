// SPDX-License-Identifier: Apache-2.0
// Period kernels on the reference, serial and OpenMP backends, with and
// without Newton-polytope pruning.
#include <benchmark/benchmark.h>

#include "tlg/grassmann.hpp"
#include "tlg/kernels.hpp"
#include "tlg/laurent.hpp"
#include "tlg/series.hpp"

namespace {

using tlg::KernelBackend;
using tlg::LaurentPoly;

LaurentPoly p3_model() {
  const std::vector<std::string> v{"x", "y", "z"};
  return LaurentPoly::variable(v, "x") + LaurentPoly::variable(v, "y") + LaurentPoly::variable(v, "z") +
         LaurentPoly::monomial(v, {-1, -1, -1});
}

LaurentPoly grass_model() { return tlg::bcfks_laurent(tlg::GrassSpec{3, 3, {2, 1, 1, 1}}); }

void run_phi(benchmark::State& state, const LaurentPoly& f, KernelBackend backend, bool prune) {
  tlg::KernelOptions opt;
  opt.backend = backend;
  opt.prune = prune;
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tlg::phi(f, order, {}, opt));
  }
}

void BM_P3(benchmark::State& state, KernelBackend backend, bool prune) { run_phi(state, p3_model(), backend, prune); }
void BM_Grass(benchmark::State& state, KernelBackend backend, bool prune) {
  run_phi(state, grass_model(), backend, prune);
}

}  // namespace

BENCHMARK_CAPTURE(BM_P3, reference, KernelBackend::Reference, true)->Arg(13)->Arg(17);
BENCHMARK_CAPTURE(BM_P3, serial, KernelBackend::Serial, true)->Arg(13)->Arg(17);
BENCHMARK_CAPTURE(BM_P3, openmp, KernelBackend::OpenMP, true)->Arg(13)->Arg(17);
BENCHMARK_CAPTURE(BM_P3, serial_unpruned, KernelBackend::Serial, false)->Arg(13)->Arg(17);
BENCHMARK_CAPTURE(BM_Grass, reference, KernelBackend::Reference, true)->Arg(5);
BENCHMARK_CAPTURE(BM_Grass, serial, KernelBackend::Serial, true)->Arg(5)->Arg(7);
BENCHMARK_CAPTURE(BM_Grass, openmp, KernelBackend::OpenMP, true)->Arg(5)->Arg(7);
BENCHMARK_CAPTURE(BM_Grass, serial_unpruned, KernelBackend::Serial, false)->Arg(5);

BENCHMARK_MAIN();
