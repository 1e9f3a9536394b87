#include "diracwg/effective_models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diracwg/transverse_spectrum.hpp"

namespace diracwg {

namespace {
constexpr double kPi = std::numbers::pi;
}

double effective_mass(double m) {
  if (m < 0.0) throw std::invalid_argument("effective_mass: m < 0");
  return 2.0 * m / kPi;
}

double mode_effective_mass(double m, int k) {
  if (k < 1) throw std::invalid_argument("mode_effective_mass: k < 1");
  if (k % 2 == 0) return 0.0;
  return 2.0 * m / (k * kPi);
}

ModeCoefficients coupling(int k) {
  if (k < 2) throw std::invalid_argument("coupling: k < 2");
  ModeCoefficients c;
  c.k = k;
  const double sp = std::sin(kPi * (k + 1) / 4.0);
  const double sm = std::sin(kPi * (k - 1) / 4.0);
  c.a = 4.0 / kPi * sp * sp / (k + 1);
  c.b = 4.0 / kPi * sm * sm / (k - 1);
  return c;
}

std::vector<LargeMassRow> large_mass_gap(const TubeGeometry& geom,
                                         const StripGrid& grid,
                                         std::span<const double> m_list,
                                         const SolveOptions& opts) {
  if (!geom.profile.compact_support())
    throw std::invalid_argument(
        "large_mass_gap: profile must be compactly supported");

  const double eps = geom.epsilon;
  const AssembledForms dirichlet = assemble_dirichlet_form(geom, grid);
  SolveOptions dopts = opts;
  if (opts.precond == Preconditioner::ShiftInvert) {
    // safe margin below the Dirichlet essential edge pi^2/(4 eps^2)
    dopts.shift = kPi * kPi / (4.0 * eps * eps) - 2.0 / (eps * eps) *
                  0.1 - 2.0;
  }
  const double mu_inf = lowest_pairs(dirichlet, dopts).eigenvalues.front();

  std::vector<LargeMassRow> rows;
  rows.reserve(m_list.size());
  for (double m : m_list) {
    const AssembledForms forms = assemble_square_form(geom, m, grid);
    SolveOptions mopts = opts;
    if (opts.precond == Preconditioner::ShiftInvert) {
      // each shifted square form sits just below eps^-2 E_1(m eps)
      mopts.shift = solve_root(m * eps, 1).E / (eps * eps) - 2.0;
    }
    LargeMassRow row;
    row.m = m;
    row.mu1_qm = lowest_pairs(forms, mopts).eigenvalues.front();
    row.mu1_qinf = mu_inf;
    row.gap = mu_inf - row.mu1_qm;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace diracwg
