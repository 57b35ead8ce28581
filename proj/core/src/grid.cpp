#include "hetoda/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>

#include "hetoda/reduce.hpp"

namespace hetoda {

namespace {

constexpr double kTwoPiSq = 4.0 * std::numbers::pi * std::numbers::pi;

// FFTW plan pair per resolution.  Plan creation is not thread-safe, so it
// sits behind a mutex; execution via the new-array interface is reentrant.
// FFTW_ESTIMATE keeps planning deterministic.
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;
};

PlanPair& plans_for(int n) {
  static std::mutex mu;
  static std::map<int, PlanPair> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<double> real(static_cast<std::size_t>(n) * n);
  std::vector<std::complex<double>> spec(static_cast<std::size_t>(n) * (n / 2 + 1));
  PlanPair p;
  p.fwd = fftw_plan_dft_r2c_2d(n, n, real.data(),
                               reinterpret_cast<fftw_complex*>(spec.data()),
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.inv = fftw_plan_dft_c2r_2d(n, n, reinterpret_cast<fftw_complex*>(spec.data()),
                               real.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p.fwd || !p.inv) throw Error("fftw planning failed");
  return cache.emplace(n, p).first->second;
}

std::vector<std::complex<double>> forward(const ScalarField& f) {
  const int n = f.n();
  std::vector<double> in(f.values().begin(), f.values().end());
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n) * (n / 2 + 1));
  fftw_execute_dft_r2c(plans_for(n).fwd, in.data(),
                       reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

ScalarField inverse(const PeriodicGrid& g, std::vector<std::complex<double>> spec) {
  const int n = g.n;
  ScalarField out(g);
  std::vector<double> buf(static_cast<std::size_t>(n) * n);
  fftw_execute_dft_c2r(plans_for(n).inv,
                       reinterpret_cast<fftw_complex*>(spec.data()), buf.data());
  const double scale = 1.0 / (static_cast<double>(n) * n);
  auto dst = out.values();
  for (std::size_t i = 0; i < buf.size(); ++i) dst[i] = buf[i] * scale;
  return out;
}

// |k|^2 with signed row frequency; the column index of the half-spectrum is
// already the nonnegative frequency.
double freq_sq(int n, int row, int col) {
  const int ky = row <= n / 2 ? row : row - n;
  const int kx = col;
  return static_cast<double>(kx) * kx + static_cast<double>(ky) * ky;
}

}  // namespace

PeriodicGrid::PeriodicGrid(int n_in) : n(n_in) {
  if (n < 8 || (n & (n - 1)) != 0)
    throw Error("PeriodicGrid: resolution must be a power of two >= 8, got " +
                std::to_string(n_in));
}

ScalarField::ScalarField(const PeriodicGrid& g, std::vector<double> values)
    : grid_(g), v_(std::move(values)) {
  if (v_.size() != static_cast<std::size_t>(g.n) * g.n)
    throw ShapeError("ScalarField: value count does not match grid");
}

bool ScalarField::all_finite() const {
  for (double v : v_)
    if (!std::isfinite(v)) return false;
  return true;
}

ScalarField laplacian(const ScalarField& f) {
  if (!f.all_finite()) throw Error("laplacian: non-finite input");
  const int n = f.n();
  auto spec = forward(f);
  const int half = n / 2 + 1;
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < half; ++col)
      spec[static_cast<std::size_t>(row) * half + col] *=
          kTwoPiSq * freq_sq(n, row, col);
  return inverse(f.grid(), std::move(spec));
}

double integrate(const ScalarField& f) {
  const double n2 = static_cast<double>(f.n()) * f.n();
  return pairwise_sum(f.values()) / n2;
}

double inner(const ScalarField& f, const ScalarField& g) {
  require_same_grid(f, g, "inner");
  std::vector<double> prod(f.values().size());
  auto fv = f.values();
  auto gv = g.values();
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = fv[i] * gv[i];
  const double n2 = static_cast<double>(f.n()) * f.n();
  return pairwise_sum(prod) / n2;
}

double dirichlet(const ScalarField& f) {
  const int n = f.n();
  auto spec = forward(f);
  const int half = n / 2 + 1;
  const double norm = static_cast<double>(n) * n;
  std::vector<double> contrib(spec.size());
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < half; ++col) {
      const std::size_t idx = static_cast<std::size_t>(row) * half + col;
      // Interior columns of the half-spectrum stand for a conjugate pair.
      const double mult = (col == 0 || col == n / 2) ? 1.0 : 2.0;
      const double amp = std::norm(spec[idx] / norm);
      contrib[idx] = mult * kTwoPiSq * freq_sq(n, row, col) * amp;
    }
  }
  return pairwise_sum(contrib);
}

ScalarField poisson_solve(const ScalarField& g) {
  if (!g.all_finite()) throw Error("poisson_solve: non-finite input");
  const double mean = integrate(g);
  if (std::abs(mean) > 1e-10)
    throw Error("poisson_solve: right-hand side mean " + std::to_string(mean) +
                " exceeds 1e-10");
  const int n = g.n();
  auto spec = forward(g);
  const int half = n / 2 + 1;
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < half; ++col) {
      const std::size_t idx = static_cast<std::size_t>(row) * half + col;
      const double fq = freq_sq(n, row, col);
      if (fq == 0.0)
        spec[idx] = 0.0;
      else
        spec[idx] /= kTwoPiSq * fq;
    }
  }
  return inverse(g.grid(), std::move(spec));
}

double max_abs(const ScalarField& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

void require_same_grid(const ScalarField& a, const ScalarField& b,
                       const char* where) {
  if (!(a.grid() == b.grid()))
    throw ShapeError(std::string(where) + ": grid mismatch");
}

}  // namespace hetoda
