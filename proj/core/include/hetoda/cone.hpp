#pragma once

// Decides whether -gamma lies in the strictly-positive cone spanned by the
// active root vectors, with exact certificates in both directions.  The
// auxiliary program is
//
//   maximize t  subject to  sum lambda_p v_p = -gamma,  lambda_p >= t,  t <= 1
//
// solved by an exact rational simplex (Bland's rule); membership holds iff
// the optimum satisfies t* > 0.  Floats never decide feasibility.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hetoda/rational.hpp"
#include "hetoda/weights.hpp"

namespace hetoda {

enum class ConeStatus { Feasible, Infeasible };

struct ConeCertificate {
  ConeStatus status = ConeStatus::Infeasible;

  // Feasible: positive lambda per active pair with sum lambda_p v_p = -gamma.
  RatVec lambda;

  // Infeasible: direction w in V with coprime integer entries satisfying
  // (v_p, w) <= 0 for every active pair and (-gamma, w) >= 0, not all tight.
  // When -gamma lies outside the closed cone the inequality is strict:
  // (-gamma, w) > 0.  When -gamma sits on the relative boundary of the
  // closed cone (so a nonnegative combination exists but no strictly
  // positive one) only (-gamma, w) = 0 with some (v_p, w) < 0 is available;
  // `boundary` marks that flavor.
  RatVec farkas_w;
  bool boundary = false;

  // Optimum of the auxiliary program; unset when the equality system is
  // inconsistent (-gamma outside the span of the active roots).
  std::optional<Rat> t_star;

  // r-1 minus the rank of the active roots: dimension of the flat subspace
  // the active pairing cannot see.
  int spanning_defect = 0;

  // Set when gamma was rationalized from floats.
  double rounding_radius = 0.0;

  std::string describe(const WeightSystem& ws) const;
};

// gamma must be trace-zero and have length r.  Certificates are verified
// exactly before being returned; a violation is an internal error.
ConeCertificate check_condition_v(const WeightSystem& ws, const RatVec& gamma);

// Independent test oracle: decides the same question by exhaustive
// enumeration of the auxiliary program's basic solutions.  Requires
// r <= 6 and at most 12 active pairs.
ConeCertificate oracle_condition_v(const WeightSystem& ws, const RatVec& gamma);

// Rounds float data to a fixed denominator and re-projects to trace zero,
// reporting the max adjustment applied to any entry.
struct RationalizedVector {
  RatVec value;
  double rounding_radius = 0.0;
};
RationalizedVector rationalize_trace_zero(std::span<const double> x,
                                          std::int64_t denominator = 1000000000);

// Exact post-hoc soundness check; used internally on every certificate and
// exposed for the acceptance suite.
bool verify_certificate(const WeightSystem& ws, const RatVec& gamma,
                        const ConeCertificate& cert, std::string* why = nullptr);

}  // namespace hetoda
