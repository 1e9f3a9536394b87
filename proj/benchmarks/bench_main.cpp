#include <benchmark/benchmark.h>

#include "diracwg/certification.hpp"
#include "diracwg/curve_geometry.hpp"
#include "diracwg/eigensolve.hpp"
#include "diracwg/strip_operator.hpp"
#include "diracwg/transverse_spectrum.hpp"

namespace {

using namespace diracwg;

void BM_solve_root(benchmark::State& state) {
  const double mass = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_root(mass, 1).E);
}
BENCHMARK(BM_solve_root)->Arg(1)->Arg(50)->Arg(10000);

void BM_transverse_fem_oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(transverse_fem_oracle(0.0, 5.0, n));
}
BENCHMARK(BM_transverse_fem_oracle)->Arg(128)->Arg(512);

void BM_assemble_square_form(benchmark::State& state) {
  const TubeGeometry geom =
      validate_tube(CurvatureProfile::polynomial_bump(1.0, 1.0), 0.1);
  const int ns = static_cast<int>(state.range(0));
  const int nt = static_cast<int>(state.range(1));
  const StripGrid grid = make_strip_grid(8.0, ns, nt);
  for (auto _ : state)
    benchmark::DoNotOptimize(assemble_square_form(geom, 10.0, grid).free_dim());
}
BENCHMARK(BM_assemble_square_form)->Args({81, 21})->Args({161, 41});

void BM_lowest_pairs_shift_invert(benchmark::State& state) {
  const TubeGeometry geom =
      validate_tube(CurvatureProfile::polynomial_bump(1.0, 1.0), 0.1);
  const StripGrid grid =
      make_strip_grid(8.0, static_cast<int>(state.range(0)), 21);
  const AssembledForms forms = assemble_square_form(geom, 50.0, grid);
  SolveOptions opt;
  opt.count = 1;
  opt.tol = 1e-8;
  opt.precond = Preconditioner::ShiftInvert;
  opt.shift = solve_root(5.0, 1).E / 0.01 - 2.0;
  for (auto _ : state) {
    const SpectralResult r = lowest_pairs(forms, opt);
    benchmark::DoNotOptimize(r.eigenvalues.front());
  }
}
BENCHMARK(BM_lowest_pairs_shift_invert)->Arg(81)->Arg(161);

void BM_compute_I_epsilon(benchmark::State& state) {
  const TubeGeometry geom =
      validate_tube(CurvatureProfile::polynomial_bump(1.0, 1.0), 0.1);
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_I_epsilon(geom, q));
}
BENCHMARK(BM_compute_I_epsilon)->Arg(100)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
