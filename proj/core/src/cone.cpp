#include "hetoda/cone.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hetoda/rational_linalg.hpp"

namespace hetoda {

namespace {

// ---------------------------------------------------------------------------
// Exact two-phase primal simplex for  min c.x  s.t.  A x = d, x >= 0,
// Bland's rule throughout.  Sizes here are tiny (rows <= r, cols <= r^2),
// so a dense rational tableau is the whole story.

struct LpResult {
  bool feasible = false;
  RatVec x;          // primal solution over the original columns
  RatVec y;          // dual multipliers per row (optimal or Farkas)
  Rat objective;     // c.x at the optimum (feasible case)
};

class Tableau {
 public:
  Tableau(const RatMat& a, const RatVec& d) {
    rows_ = a.size();
    orig_cols_ = rows_ ? a[0].size() : 0;
    cols_ = orig_cols_ + rows_;  // artificial per row
    t_.assign(rows_, RatVec(cols_ + 1, Rat(0)));
    sign_.assign(rows_, 1);
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      const int s = d[i] < 0 ? -1 : 1;
      sign_[i] = s;
      for (std::size_t j = 0; j < orig_cols_; ++j) t_[i][j] = s * a[i][j];
      t_[i][orig_cols_ + i] = 1;
      t_[i][cols_] = s * d[i];
      basis_[i] = orig_cols_ + i;
    }
  }

  // Runs Bland-rule simplex for the given cost vector over eligible columns.
  // Returns false on unboundedness.
  bool run(const RatVec& cost, std::size_t eligible_cols) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < eligible_cols; ++j) {
        if (is_basic(j)) continue;
        if (reduced_cost(cost, j) < 0) {
          enter = j;
          break;  // Bland: first improving column
        }
      }
      if (enter == cols_) return true;
      std::size_t leave = rows_;
      Rat best_ratio = 0;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rat ratio = t_[i][cols_] / t_[i][enter];
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
  }

  Rat reduced_cost(const RatVec& cost, std::size_t j) const {
    Rat rc = j < cost.size() ? cost[j] : Rat(0);
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rat cb = basis_[i] < cost.size() ? cost[basis_[i]] : Rat(0);
      if (cb != 0 && t_[i][j] != 0) rc -= cb * t_[i][j];
    }
    return rc;
  }

  Rat objective(const RatVec& cost) const {
    Rat v = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rat cb = basis_[i] < cost.size() ? cost[basis_[i]] : Rat(0);
      v += cb * t_[i][cols_];
    }
    return v;
  }

  // After a zero-objective phase 1: pivot artificials out of the basis or
  // drop the rows they certify as redundant.
  void purge_artificials() {
    for (std::size_t i = 0; i < rows_;) {
      if (basis_[i] < orig_cols_) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < orig_cols_ && t_[i][j] == 0) ++j;
      if (j < orig_cols_) {
        pivot(i, j);
        ++i;
      } else {
        drop_row(i);
      }
    }
  }

  RatVec primal() const {
    RatVec x(orig_cols_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < orig_cols_) x[basis_[i]] = t_[i][cols_];
    return x;
  }

  // Dual multipliers y per *original* row index: solve B^T y' = c_B over the
  // sign-adjusted columns, undo the sign flips, zero-fill dropped rows.
  RatVec duals(const RatVec& cost, std::size_t n_original_rows) const {
    const std::size_t m = rows_;
    RatMat bt(m, RatVec(m, Rat(0)));
    RatVec cb(m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
      cb[i] = basis_[i] < cost.size() ? cost[basis_[i]] : Rat(1);
      for (std::size_t k = 0; k < m; ++k)
        bt[i][k] = basis_column_entry(k, basis_[i]);
    }
    auto y = solve_square(std::move(bt), std::move(cb));
    if (!y) throw Error("simplex: singular basis while extracting duals");
    RatVec out(n_original_rows, Rat(0));
    for (std::size_t k = 0; k < m; ++k)
      out[row_ids_.empty() ? k : row_ids_[k]] = sign_[k] * (*y)[k];
    return out;
  }

 private:
  bool is_basic(std::size_t j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  // Entry of the *initial* (sign-adjusted) constraint matrix in row k,
  // column j; artificials are unit columns tied to original row positions.
  // init_ is only snapshotted at the first mutation, so an untouched
  // tableau serves directly.
  Rat basis_column_entry(std::size_t k, std::size_t j) const {
    if (j < orig_cols_) return init_.empty() ? t_[k][j] : init_[k][j];
    const std::size_t art_row = j - orig_cols_;
    const std::size_t actual = row_ids_.empty() ? k : row_ids_[k];
    return actual == art_row ? Rat(1) : Rat(0);
  }

  void pivot(std::size_t row, std::size_t col) {
    snapshot_init();
    const Rat piv = t_[row][col];
    for (auto& v : t_[row]) v /= piv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || t_[i][col] == 0) continue;
      const Rat f = t_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[row][j];
    }
    basis_[row] = col;
  }

  void drop_row(std::size_t row) {
    snapshot_init();
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    sign_.erase(sign_.begin() + static_cast<std::ptrdiff_t>(row));
    init_.erase(init_.begin() + static_cast<std::ptrdiff_t>(row));
    if (row_ids_.empty()) {
      row_ids_.resize(rows_);
      for (std::size_t k = 0; k < rows_; ++k) row_ids_[k] = k;
    }
    row_ids_.erase(row_ids_.begin() + static_cast<std::ptrdiff_t>(row));
    --rows_;
  }

  // Keeps the original (sign-adjusted) columns for dual extraction; the
  // tableau itself is overwritten by pivots.
  void snapshot_init() {
    if (!init_.empty()) return;
    init_.assign(rows_, RatVec(orig_cols_, Rat(0)));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < orig_cols_; ++j) init_[i][j] = t_[i][j];
  }

  std::size_t rows_ = 0, orig_cols_ = 0, cols_ = 0;
  RatMat t_;
  RatMat init_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> row_ids_;  // empty means identity
};

LpResult solve_standard_form(const RatMat& a, const RatVec& d, const RatVec& c) {
  const std::size_t m = a.size();
  Tableau tab(a, d);

  RatVec phase1(c.size() + m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) phase1[c.size() + i] = 1;
  if (!tab.run(phase1, c.size() + m))
    throw Error("simplex: phase 1 unbounded (impossible)");

  LpResult res;
  if (tab.objective(phase1) > 0) {
    res.feasible = false;
    res.y = tab.duals(phase1, m);
    return res;
  }
  tab.purge_artificials();
  if (!tab.run(c, c.size())) throw Error("simplex: objective unbounded");
  res.feasible = true;
  res.x = tab.primal();
  res.y = tab.duals(c, m);
  res.objective = tab.objective(c);
  return res;
}

// ---------------------------------------------------------------------------
// Auxiliary-program assembly.  V coordinates drop the last component (a
// trace-zero vector is determined by its first r-1 entries).  Columns are
// the slacks s_p (lambda_p = t + s_p), then t+, t-, and the slack of t <= 1.

struct AuxLp {
  RatMat a;
  RatVec d;
  RatVec c;
  std::size_t n_pairs = 0;
};

AuxLp build_aux_lp(const WeightSystem& ws, const RatVec& gamma) {
  const std::size_t r = static_cast<std::size_t>(ws.rank());
  const std::size_t m = ws.active_count();
  AuxLp lp;
  lp.n_pairs = m;
  const std::size_t rows = r;  // r-1 equalities + the t row
  const std::size_t cols = m + 3;
  lp.a.assign(rows, RatVec(cols, Rat(0)));
  lp.d.assign(rows, Rat(0));
  lp.c.assign(cols, Rat(0));

  RatVec root_sum(r, Rat(0));
  for (std::size_t p = 0; p < m; ++p) {
    const auto v = root_vector_q(ws, ws.active()[p].i, ws.active()[p].j);
    for (std::size_t i = 0; i + 1 < r; ++i) lp.a[i][p] = v[i];
    for (std::size_t i = 0; i < r; ++i) root_sum[i] += v[i];
  }
  const std::size_t tp = m, tm = m + 1, q = m + 2;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    lp.a[i][tp] = root_sum[i];
    lp.a[i][tm] = -root_sum[i];
    lp.d[i] = -gamma[i];
  }
  lp.a[r - 1][tp] = 1;
  lp.a[r - 1][tm] = -1;
  lp.a[r - 1][q] = 1;
  lp.d[r - 1] = 1;
  lp.c[tp] = -1;  // maximize t
  lp.c[tm] = 1;
  return lp;
}

// Lifts dual multipliers on the V coordinates to a trace-zero direction.
RatVec lift_dual_direction(const RatVec& y, std::size_t r) {
  RatVec w(r, Rat(0));
  for (std::size_t i = 0; i + 1 < r; ++i) w[i] = y[i];
  return normalize_coprime(project_trace_zero(w));
}

int spanning_defect_of(const WeightSystem& ws) {
  const std::size_t r = static_cast<std::size_t>(ws.rank());
  RatMat rows;
  for (const auto& p : ws.active()) {
    const auto v = root_vector_q(ws, p.i, p.j);
    rows.emplace_back(v.begin(), v.end() - 1);
  }
  const int rk = rows.empty() ? 0 : rank(std::move(rows));
  return static_cast<int>(r) - 1 - rk;
}

void validate_gamma(const WeightSystem& ws, const RatVec& gamma) {
  if (gamma.size() != static_cast<std::size_t>(ws.rank()))
    throw ShapeError("condition (v): gamma has wrong dimension");
  if (!is_trace_zero(gamma))
    throw Error("condition (v): gamma must be exactly trace-zero");
}

ConeCertificate empty_active_case(const WeightSystem& ws, const RatVec& gamma) {
  // The empty positive span is {0}: feasible iff gamma = 0.
  ConeCertificate cert;
  cert.spanning_defect = ws.rank() - 1;
  const bool zero = std::all_of(gamma.begin(), gamma.end(),
                                [](const Rat& q) { return q == 0; });
  if (zero) {
    cert.status = ConeStatus::Feasible;
  } else {
    cert.status = ConeStatus::Infeasible;
    RatVec w(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) w[i] = -gamma[i];
    cert.farkas_w = normalize_coprime(w);
    if (dot(cert.farkas_w, gamma) > 0)  // orient so (-gamma, w) > 0
      for (auto& v : cert.farkas_w) v = -v;
  }
  return cert;
}

}  // namespace

ConeCertificate check_condition_v(const WeightSystem& ws, const RatVec& gamma) {
  validate_gamma(ws, gamma);
  const std::size_t r = static_cast<std::size_t>(ws.rank());
  if (ws.active_count() == 0) {
    auto cert = empty_active_case(ws, gamma);
    std::string why;
    if (!verify_certificate(ws, gamma, cert, &why))
      throw Error("internal: unsound cone certificate: " + why);
    return cert;
  }

  const AuxLp lp = build_aux_lp(ws, gamma);
  const LpResult res = solve_standard_form(lp.a, lp.d, lp.c);

  ConeCertificate cert;
  cert.spanning_defect = spanning_defect_of(ws);
  if (!res.feasible) {
    // -gamma is outside the span of the active roots.
    cert.status = ConeStatus::Infeasible;
    cert.farkas_w = lift_dual_direction(res.y, r);
  } else {
    const Rat t_star = -res.objective;
    cert.t_star = t_star;
    if (t_star > 0) {
      cert.status = ConeStatus::Feasible;
      cert.lambda.resize(lp.n_pairs);
      for (std::size_t p = 0; p < lp.n_pairs; ++p)
        cert.lambda[p] = t_star + res.x[p];
    } else {
      cert.status = ConeStatus::Infeasible;
      cert.farkas_w = lift_dual_direction(res.y, r);
      RatVec gq(gamma.begin(), gamma.end());
      for (auto& v : gq) v = -v;
      cert.boundary = dot(gq, cert.farkas_w) == 0;
    }
  }
  std::string why;
  if (!verify_certificate(ws, gamma, cert, &why))
    throw Error("internal: unsound cone certificate: " + why);
  return cert;
}

ConeCertificate oracle_condition_v(const WeightSystem& ws, const RatVec& gamma) {
  validate_gamma(ws, gamma);
  if (ws.rank() > 6 || ws.active_count() > 12)
    throw Error("oracle_condition_v: size bound exceeded (r <= 6, <= 12 pairs)");
  if (ws.active_count() == 0) return empty_active_case(ws, gamma);

  const AuxLp lp = build_aux_lp(ws, gamma);
  const std::size_t n = lp.a[0].size();

  // Select a maximal independent row subset, checking consistency of the
  // rows it spans (augmented rank must match).
  std::vector<std::size_t> keep;
  RatMat acc, acc_aug;
  for (std::size_t i = 0; i < lp.a.size(); ++i) {
    RatVec aug = lp.a[i];
    aug.push_back(lp.d[i]);
    acc_aug.push_back(aug);
    if (rank(acc_aug) > static_cast<int>(acc.size())) {
      acc.push_back(lp.a[i]);
      if (rank(acc) == static_cast<int>(acc.size())) {
        keep.push_back(i);
      } else {
        // Row dependent but rhs not: inconsistent equality system.
        ConeCertificate cert;
        cert.status = ConeStatus::Infeasible;
        cert.spanning_defect = spanning_defect_of(ws);
        return cert;
      }
      acc_aug = acc;
      for (std::size_t k = 0; k < acc.size(); ++k)
        acc_aug[k].push_back(lp.d[keep[k]]);
    }
  }

  const std::size_t mrows = keep.size();
  std::optional<Rat> best_t;
  RatVec best_x;
  std::vector<std::size_t> pick(mrows);
  // Enumerate all column subsets of size mrows (basic solutions).
  const auto enumerate = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == mrows) {
      RatMat b(mrows, RatVec(mrows));
      RatVec rhs(mrows);
      for (std::size_t i = 0; i < mrows; ++i) {
        rhs[i] = lp.d[keep[i]];
        for (std::size_t k = 0; k < mrows; ++k) b[i][k] = lp.a[keep[i]][pick[k]];
      }
      auto sol = solve_square(std::move(b), std::move(rhs));
      if (!sol) return;
      for (const Rat& v : *sol)
        if (v < 0) return;
      RatVec x(n, Rat(0));
      for (std::size_t k = 0; k < mrows; ++k) x[pick[k]] = (*sol)[k];
      const Rat t = x[lp.n_pairs] - x[lp.n_pairs + 1];
      if (!best_t || t > *best_t) {
        best_t = t;
        best_x = x;
      }
      return;
    }
    for (std::size_t j = start; j + (mrows - depth) <= n; ++j) {
      pick[depth] = j;
      self(self, depth + 1, j + 1);
    }
  };
  enumerate(enumerate, 0, 0);

  ConeCertificate cert;
  cert.spanning_defect = spanning_defect_of(ws);
  if (!best_t) {
    cert.status = ConeStatus::Infeasible;
    return cert;
  }
  cert.t_star = *best_t;
  if (*best_t > 0) {
    cert.status = ConeStatus::Feasible;
    cert.lambda.resize(lp.n_pairs);
    for (std::size_t p = 0; p < lp.n_pairs; ++p)
      cert.lambda[p] = *best_t + best_x[p];
  } else {
    cert.status = ConeStatus::Infeasible;
  }
  return cert;
}

RationalizedVector rationalize_trace_zero(std::span<const double> x,
                                          std::int64_t denominator) {
  RationalizedVector out;
  out.value = project_trace_zero(to_rational(x, denominator));
  for (std::size_t i = 0; i < x.size(); ++i)
    out.rounding_radius =
        std::max(out.rounding_radius, std::abs(to_double(out.value[i]) - x[i]));
  return out;
}

bool verify_certificate(const WeightSystem& ws, const RatVec& gamma,
                        const ConeCertificate& cert, std::string* why) {
  const auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const std::size_t r = static_cast<std::size_t>(ws.rank());
  if (cert.status == ConeStatus::Feasible) {
    if (cert.lambda.size() != ws.active_count())
      return fail("lambda count mismatch");
    RatVec sum(r, Rat(0));
    for (std::size_t p = 0; p < cert.lambda.size(); ++p) {
      if (cert.lambda[p] <= 0) return fail("lambda not strictly positive");
      const auto v = root_vector_q(ws, ws.active()[p].i, ws.active()[p].j);
      for (std::size_t i = 0; i < r; ++i) sum[i] += cert.lambda[p] * v[i];
    }
    for (std::size_t i = 0; i < r; ++i)
      if (sum[i] != -gamma[i]) return fail("sum lambda v != -gamma");
    return true;
  }
  // Infeasible: oracle certificates carry no direction, only a status.
  if (cert.farkas_w.empty()) return true;
  if (cert.farkas_w.size() != r) return fail("farkas dimension mismatch");
  if (!is_trace_zero(cert.farkas_w)) return fail("farkas not trace-zero");
  bool some_strict = false;
  for (const auto& p : ws.active()) {
    const Rat pr = root_pairing(p, cert.farkas_w);
    if (pr > 0) return fail("(v, w) > 0 for an active pair");
    if (pr < 0) some_strict = true;
  }
  Rat mg = 0;
  for (std::size_t i = 0; i < r; ++i) mg += -gamma[i] * cert.farkas_w[i];
  if (mg < 0) return fail("(-gamma, w) < 0");
  if (mg == 0 && !some_strict) return fail("all certificate inequalities tight");
  if (cert.boundary != (mg == 0)) return fail("boundary flag inconsistent");
  return true;
}

std::string ConeCertificate::describe(const WeightSystem& ws) const {
  std::ostringstream os;
  os << "status = "
     << (status == ConeStatus::Feasible ? "Feasible" : "Infeasible") << "\n";
  if (t_star)
    os << "t_star = " << *t_star << "\n";
  else
    os << "t_star = none\n";
  if (status == ConeStatus::Feasible) {
    for (std::size_t p = 0; p < lambda.size(); ++p)
      os << "lambda(" << ws.active()[p].i << "," << ws.active()[p].j
         << ") = " << lambda[p] << "\n";
  } else if (!farkas_w.empty()) {
    os << "farkas_w =";
    for (const auto& v : farkas_w) os << " " << v;
    os << "\n";
    os << "boundary = " << (boundary ? "true" : "false") << "\n";
  }
  os << "spanning_defect = " << spanning_defect << "\n";
  os << "rounding_radius = " << rounding_radius << "\n";
  return os.str();
}

}  // namespace hetoda
