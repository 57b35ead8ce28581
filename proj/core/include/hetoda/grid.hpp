#pragma once

// Periodic N x N real scalar fields on the unit-area flat torus and their
// spectral calculus.
//
// Convention block, fixed for the whole project:
//   - torus R^2/Z^2 with complex coordinate z = x + iy;
//   - Kaehler form omega = (i/2) dz ^ dzbar, so the volume is 1;
//   - contraction Lambda(i g dz ^ dzbar) = 2g;
//   - hence i Lambda dbar d f = (1/2) Delta f with the geometric Laplacian
//     Delta = -(d^2/dx^2 + d^2/dy^2) implemented below.
//
// Sample layout: values are row-major with value(row, col) taken at
// x = col/n, y = row/n.  Fourier frequencies run over {-n/2, ..., n/2-1};
// the Nyquist mode is cosine-only by the real-transform symmetry.

#include <cstddef>
#include <span>
#include <vector>

#include "hetoda/errors.hpp"

namespace hetoda {

struct PeriodicGrid {
  int n = 0;

  explicit PeriodicGrid(int n);
  PeriodicGrid() = default;

  double sample_x(int col) const { return static_cast<double>(col) / n; }
  double sample_y(int row) const { return static_cast<double>(row) / n; }

  friend bool operator==(const PeriodicGrid&, const PeriodicGrid&) = default;
};

class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const PeriodicGrid& g, double fill = 0.0)
      : grid_(g), v_(static_cast<std::size_t>(g.n) * g.n, fill) {}
  ScalarField(const PeriodicGrid& g, std::vector<double> values);

  const PeriodicGrid& grid() const { return grid_; }
  int n() const { return grid_.n; }

  double at(int row, int col) const {
    return v_[static_cast<std::size_t>(row) * grid_.n + col];
  }
  double& at(int row, int col) {
    return v_[static_cast<std::size_t>(row) * grid_.n + col];
  }

  std::span<const double> values() const { return v_; }
  std::span<double> values() { return v_; }

  bool all_finite() const;

 private:
  PeriodicGrid grid_;
  std::vector<double> v_;
};

// Geometric Laplacian -(f_xx + f_yy), spectrally: mode k picks up the
// factor 4 pi^2 |k|^2; the mean maps to 0.
ScalarField laplacian(const ScalarField& f);

// Mean of samples = integral against the unit-volume form (trapezoid rule
// collapses to the mean on a periodic grid); exact for band-limited fields.
double integrate(const ScalarField& f);

// integral of f * g.
double inner(const ScalarField& f, const ScalarField& g);

// integral of |grad f|^2; satisfies dirichlet(f) = integrate(f*laplacian(f))
// to round-off.
double dirichlet(const ScalarField& f);

// Unique zero-mean f with laplacian(f) = g; g must have zero mean
// (|mean| <= 1e-10).
ScalarField poisson_solve(const ScalarField& g);

double max_abs(const ScalarField& f);

void require_same_grid(const ScalarField& a, const ScalarField& b,
                       const char* where);

}  // namespace hetoda
