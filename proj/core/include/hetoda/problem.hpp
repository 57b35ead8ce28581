#pragma once

// Assembles the equation data of the diagonal system from geometric inputs:
// Higgs entries phi_{i,j} (coefficient of dz in a trivialized gauge),
// background diagonal metric factors k_j > 0, and background curvature
// scalars a_j with pointwise sum zero.  Derived data:
//
//   c_{i,j} = 4 |phi_{i,j}|^2 k_i / k_j      (one fixed norm convention,
//                                             anchored by the verify module)
//   b       = -2a
//   gamma_j = (1/2pi) * integral of a_j
//
// The active pairs are exactly those whose phi entry is not identically
// zero; identically-zero entries are dropped and recorded.

#include <string>
#include <vector>

#include "hetoda/stack.hpp"
#include "hetoda/weights.hpp"

namespace hetoda {

struct ComplexField {
  ScalarField re, im;
};

struct PairEntry {
  IndexPair pair;
  ComplexField value;
};

struct HiggsProblem {
  WeightSystem ws;  // active set = pairs with phi not identically zero
  PeriodicGrid grid;

  // Aligned with ws.active():
  std::vector<ComplexField> phi;
  std::vector<ScalarField> c;
  std::vector<bool> c_has_zero_sample;

  std::vector<ScalarField> k;  // size r, strictly positive
  std::vector<ScalarField> a;  // size r, pointwise sum zero
  std::vector<ScalarField> b;  // size r, -2a

  std::vector<double> gamma;  // trace-zero degree vector

  // Diagonal part of the Higgs field; inert in the scalar system, enters
  // only the verify module's full commutator.  Empty or size r.
  std::vector<ComplexField> phi0;

  std::vector<IndexPair> dropped_pairs;  // declared entries that were phi == 0

  int rank() const { return ws.rank(); }
};

HiggsProblem assemble(int r, const PeriodicGrid& grid,
                      std::vector<PairEntry> phi_entries,
                      std::vector<ScalarField> k, std::vector<ScalarField> a,
                      std::vector<ComplexField> phi0 = {});

// Cyclic layout: active pairs (2,1), (3,2), ..., (r,r-1), (1,r) carrying the
// subdiagonal entries phi_1 .. phi_{r-1} and the corner entry phi_r.
// Expression strings; imaginary parts default to "0".
HiggsProblem make_cyclic(int r, const PeriodicGrid& grid,
                         const std::vector<std::string>& phi_exprs,
                         const std::vector<std::string>& k_exprs,
                         const std::vector<std::string>& a_exprs);
HiggsProblem make_cyclic(int r, const PeriodicGrid& grid,
                         const std::vector<std::pair<std::string, std::string>>& phi_exprs,
                         const std::vector<std::string>& k_exprs,
                         const std::vector<std::string>& a_exprs);

// Discrete stand-in for the integrable-log hypothesis: WARN when an active
// coefficient has zero samples, FAIL when it is identically zero.
struct LogIntegrabilityRow {
  IndexPair pair;
  double zero_fraction = 0.0;
  double mean_log_nonzero = 0.0;  // mean of log c over the nonzero samples
  enum class Status { Ok, Warn, Fail } status = Status::Ok;
};

struct LogIntegrabilityReport {
  std::vector<LogIntegrabilityRow> rows;
  bool any_warn = false;
  bool any_fail = false;
  std::string to_text() const;
};

LogIntegrabilityReport validate_log_integrability(const HiggsProblem& p);

}  // namespace hetoda
