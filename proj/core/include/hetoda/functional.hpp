#pragma once

// The restricted energy functional in closed form,
//
//   M(xi) = int (1/4)|grad xi|^2
//         + sum_pairs int (1/2) c (e^{(v,xi)} - 1)
//         + sum_j int a_j f_j,
//
// normalized so M(0) = 0, together with its L^2 gradient
//
//   grad M = (1/2) Delta xi + sum (1/2) c e^{(v,xi)} v + a,
//
// the equation residual R = Delta xi + sum c e^{(v,xi)} v - b = 2 grad M,
// the second-variation quadratic form, path-integral evaluation along
// metric paths, and affine geodesic scans with tail classification.

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hetoda/problem.hpp"

namespace hetoda {

struct EnergyBreakdown {
  double dirichlet = 0.0;
  double exponential = 0.0;
  double linear = 0.0;
  double total = 0.0;
};

EnergyBreakdown m_restricted(const HiggsProblem& p, const Potential& xi);

// Pointwise trace-zero stack; critical points solve the equation.
FieldStack gradient(const HiggsProblem& p, const Potential& xi);

FieldStack residual_mu(const HiggsProblem& p, const Potential& xi);

// Exact second t-derivative of M(xi + t eta) at t = 0:
//   Q(eta) = (1/2) int |grad eta|^2 + sum int (1/2) c e^{(v,xi)} (v,eta)^2.
// Nonnegative for every trace-zero eta.
double second_variation(const HiggsProblem& p, const Potential& xi,
                        const FieldStack& eta);

// A metric path must supply its own velocity so quadrature sees exact data.
struct PathPoint {
  Potential xi;
  FieldStack velocity;
};
using MetricPath = std::function<PathPoint(double t)>;

// Integrates int_0^1 <grad M(xi_t), d/dt xi_t> dt with 4-point
// Gauss-Legendre on `panels` uniform panels; path(0) must be 0.
double m_path_integral(const HiggsProblem& p, const MetricPath& path, int panels);

enum class ScanClass { DivergesUp, DivergesDown, BoundedFlat };
const char* to_string(ScanClass c);

struct ScanRow {
  double t, m, dirichlet, exponential, linear, l2;
};

struct ScanSeries {
  std::vector<ScanRow> rows;
  ScanClass classification = ScanClass::BoundedFlat;
  bool truncated_overflow = false;  // series stopped early at an overflowing t
  // Least-squares fit |xi|_{L2} ~ e0 + e1 M + e2 M^2, report only.
  std::array<double, 3> envelope{};
  bool has_envelope = false;
  std::string to_csv() const;
};

// Evaluates M along xi0 + t eta for t in t_list.  Classification comes from
// the closed-form tail, not from the samples: a non-constant direction
// diverges upward through the Dirichlet term; a constant direction w grows
// exponentially iff (v,w) > 0 for some active pair, else follows the linear
// slope 2 pi (gamma, w).
ScanSeries geodesic_scan(const HiggsProblem& p, const Potential& xi0,
                         const FieldStack& eta, std::span<const double> t_list);

}  // namespace hetoda
