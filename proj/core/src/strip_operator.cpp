#include "diracwg/strip_operator.hpp"

#include <cmath>
#include <stdexcept>

#include "diracwg/errors.hpp"

namespace diracwg {

namespace {

using Complex = std::complex<double>;
using Triplet = Eigen::Triplet<Complex>;

constexpr double kGauss = 0.57735026918962576451;  // 1/sqrt(3)

struct DofLayout {
  std::vector<int> map;
  std::vector<double> coeff;
  std::vector<int> owner;
  int free_dim = 0;
};

DofLayout build_layout(const StripGrid& grid, BoundaryModel bc) {
  const int nfull = 2 * grid.nodes();
  DofLayout lay;
  lay.map.assign(nfull, -1);
  lay.coeff.assign(nfull, 0.0);

  auto full = [&](int i, int j, int c) { return 2 * (i * grid.n_t + j) + c; };

  for (int i = 0; i < grid.n_s; ++i) {
    const bool s_wall = (i == 0 || i == grid.n_s - 1);
    for (int j = 0; j < grid.n_t; ++j) {
      const bool t_bottom = (j == 0);
      const bool t_top = (j == grid.n_t - 1);
      for (int c = 0; c < 2; ++c) {
        const int d = full(i, j, c);
        if (s_wall) continue;  // artificial Dirichlet truncation
        if (bc == BoundaryModel::Dirichlet && (t_bottom || t_top)) continue;
        if (bc == BoundaryModel::InfiniteMass && c == 1 &&
            (t_bottom || t_top)) {
          // u2(., -1) = +u1(., -1), u2(., +1) = -u1(., +1)
          const int rep = full(i, j, 0);
          lay.map[d] = lay.map[rep];
          lay.coeff[d] = t_top ? -1.0 : 1.0;
          continue;
        }
        lay.map[d] = lay.free_dim++;
        lay.coeff[d] = 1.0;
        lay.owner.push_back(d);
      }
    }
  }
  return lay;
}

AssembledForms assemble(const TubeGeometry& geom, double m,
                        const StripGrid& grid, BoundaryModel bc) {
  if (!geom.validity.width_ok)
    throw std::invalid_argument("assemble: tube geometry not validated");
  if (m < 0.0) throw std::invalid_argument("assemble: m must be >= 0");

  const double eps = geom.epsilon;
  const double hs = grid.h_s();
  const double ht = grid.h_t();
  const bool infinite_mass = (bc == BoundaryModel::InfiniteMass);

  DofLayout lay = build_layout(grid, bc);

  std::vector<Triplet> ta, tb;
  ta.reserve(static_cast<std::size_t>(grid.nodes()) * 40);
  tb.reserve(static_cast<std::size_t>(grid.nodes()) * 20);

  auto full = [&](int i, int j, int c) { return 2 * (i * grid.n_t + j) + c; };
  auto scatter = [&](std::vector<Triplet>& trips, int r, int c, Complex v) {
    const int fr = lay.map[r];
    const int fc = lay.map[c];
    if (fr < 0 || fc < 0) return;
    trips.emplace_back(fr, fc, v * (lay.coeff[r] * lay.coeff[c]));
  };

  // 2x2 Gauss points in the reference square [-1,1]^2; Q1 shape functions.
  const double gp[2] = {-kGauss, kGauss};

  for (int ei = 0; ei < grid.n_s - 1; ++ei) {
    const double s0 = grid.s_of(ei);
    for (int ej = 0; ej < grid.n_t - 1; ++ej) {
      const double t0 = grid.t_of(ej);
      // local nodes: (ei,ej), (ei+1,ej), (ei,ej+1), (ei+1,ej+1)
      const int nodes[4][2] = {
          {ei, ej}, {ei + 1, ej}, {ei, ej + 1}, {ei + 1, ej + 1}};

      Complex la[2][4][4] = {};  // per component
      double lb[4][4] = {};

      for (int qx = 0; qx < 2; ++qx) {
        for (int qy = 0; qy < 2; ++qy) {
          const double xi = gp[qx];   // reference s
          const double eta = gp[qy];  // reference t
          const double s = s0 + 0.5 * hs * (xi + 1.0);
          const double t = t0 + 0.5 * ht * (eta + 1.0);
          const double W = 0.25 * hs * ht;  // Gauss weight * Jacobian

          double N[4], dNs[4], dNt[4];
          const double xs[2] = {0.5 * (1.0 - xi), 0.5 * (1.0 + xi)};
          const double xt[2] = {0.5 * (1.0 - eta), 0.5 * (1.0 + eta)};
          const double dxs[2] = {-1.0 / hs, 1.0 / hs};
          const double dxt[2] = {-1.0 / ht, 1.0 / ht};
          for (int a = 0; a < 4; ++a) {
            const int ax = a & 1;      // 0: left, 1: right
            const int ay = a >> 1;     // 0: bottom, 1: top
            N[a] = xs[ax] * xt[ay];
            dNs[a] = dxs[ax] * xt[ay];
            dNt[a] = xs[ax] * dxt[ay];
          }

          const double kap = geom.profile.kappa(s);
          const double kp = geom.profile.kappa_prime(s);
          const double kpp = geom.profile.kappa_second(s);
          const double g = 1.0 - eps * t * kap;
          if (g <= 0.5)
            throw DegenerateJacobian(
                "assemble: 1 - eps*t*kappa <= 1/2 at a quadrature point");
          const double g2 = g * g;
          const double w = 1.0 / g2;
          const double et = eps * t;
          const double pot = -0.25 * kap * kap / g2 -
                             1.25 * kp * kp * et * et / (g2 * g2) -
                             0.5 * kpp * et / (g2 * g);
          const double q0 = infinite_mass ? 0.5 * kap : 0.0;  // gauge kappa/2

          for (int c = 0; c < 2; ++c) {
            const double q = (c == 0) ? q0 : -q0;  // sigma3 sign
            for (int a = 0; a < 4; ++a) {
              for (int b = 0; b < 4; ++b) {
                const double re =
                    w * (dNs[a] * dNs[b] + q * q * N[a] * N[b]) +
                    dNt[a] * dNt[b] / (eps * eps) + pot * N[a] * N[b];
                const double im = w * q * (N[a] * dNs[b] - N[b] * dNs[a]);
                la[c][a][b] += W * Complex(re, im);
              }
            }
          }
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) lb[a][b] += W * N[a] * N[b];
        }
      }

      for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) {
            const int ra = full(nodes[a][0], nodes[a][1], c);
            const int rb = full(nodes[b][0], nodes[b][1], c);
            scatter(ta, ra, rb, la[c][a][b]);
            scatter(tb, ra, rb, Complex(lb[a][b], 0.0));
          }
    }
  }

  // Boundary edge term (m/eps) int |u(s, +-1)|^2 ds.
  if (infinite_mass && m > 0.0) {
    const double edge_diag = m / eps * hs / 3.0;
    const double edge_off = m / eps * hs / 6.0;
    for (int j : {0, grid.n_t - 1}) {
      for (int ei = 0; ei < grid.n_s - 1; ++ei) {
        for (int c = 0; c < 2; ++c) {
          const int d0 = full(ei, j, c);
          const int d1 = full(ei + 1, j, c);
          scatter(ta, d0, d0, edge_diag);
          scatter(ta, d1, d1, edge_diag);
          scatter(ta, d0, d1, edge_off);
          scatter(ta, d1, d0, edge_off);
        }
      }
    }
  }

  AssembledForms forms;
  forms.grid = grid;
  forms.bc = bc;
  forms.mass_shift_applied = true;
  forms.dof_map = std::move(lay.map);
  forms.dof_coeff = std::move(lay.coeff);
  forms.free_owner = std::move(lay.owner);
  forms.A.resize(lay.free_dim, lay.free_dim);
  forms.B.resize(lay.free_dim, lay.free_dim);
  forms.A.setFromTriplets(ta.begin(), ta.end());
  forms.B.setFromTriplets(tb.begin(), tb.end());
  forms.A.makeCompressed();
  forms.B.makeCompressed();
  return forms;
}

}  // namespace

StripGrid make_strip_grid(double S, int n_s, int n_t) {
  if (S <= 0.0) throw std::invalid_argument("make_strip_grid: S <= 0");
  if (n_s < 3 || n_t < 3)
    throw std::invalid_argument("make_strip_grid: node counts must be >= 3");
  if (n_t % 2 == 0)
    throw std::invalid_argument("make_strip_grid: n_t must be odd");
  return StripGrid{S, n_s, n_t};
}

SpinorField SpinorField::from_function(
    const StripGrid& grid,
    const std::function<std::array<std::complex<double>, 2>(double, double)>&
        f) {
  SpinorField field;
  field.grid = grid;
  field.values.resize(static_cast<std::size_t>(2) * grid.nodes());
  for (int i = 0; i < grid.n_s; ++i)
    for (int j = 0; j < grid.n_t; ++j) {
      const auto v = f(grid.s_of(i), grid.t_of(j));
      field.values[2 * (i * grid.n_t + j)] = v[0];
      field.values[2 * (i * grid.n_t + j) + 1] = v[1];
    }
  return field;
}

AssembledForms assemble_square_form(const TubeGeometry& geom, double m,
                                    const StripGrid& grid) {
  return assemble(geom, m, grid, BoundaryModel::InfiniteMass);
}

AssembledForms assemble_dirichlet_form(const TubeGeometry& geom,
                                       const StripGrid& grid) {
  return assemble(geom, 0.0, grid, BoundaryModel::Dirichlet);
}

double rayleigh(const AssembledForms& forms, const SpinorField& field) {
  if (field.grid.n_s != forms.grid.n_s || field.grid.n_t != forms.grid.n_t)
    throw std::invalid_argument("rayleigh: grid mismatch");
  Eigen::VectorXcd x(forms.free_dim());
  for (int f = 0; f < forms.free_dim(); ++f)
    x[f] = field.values[forms.free_owner[f]];
  const double den = x.dot(forms.B * x).real();
  if (den <= 0.0) throw ZeroField("rayleigh: field has zero mass norm");
  const double num = x.dot(forms.A * x).real();
  return num / den;
}

}  // namespace diracwg
