#include "hetoda/problem.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hetoda/fieldexpr.hpp"
#include "hetoda/reduce.hpp"

namespace hetoda {

namespace {

bool identically_zero(const ComplexField& f) {
  for (double v : f.re.values())
    if (v != 0.0) return false;
  for (double v : f.im.values())
    if (v != 0.0) return false;
  return true;
}

ScalarField eval_expr(const std::string& src, const PeriodicGrid& g) {
  return evaluate(parse_field_expr(src), g);
}

}  // namespace

HiggsProblem assemble(int r, const PeriodicGrid& grid,
                      std::vector<PairEntry> phi_entries,
                      std::vector<ScalarField> k, std::vector<ScalarField> a,
                      std::vector<ComplexField> phi0) {
  if (static_cast<int>(k.size()) != r || static_cast<int>(a.size()) != r)
    throw ShapeError("assemble: k and a must have r components");
  if (!phi0.empty() && static_cast<int>(phi0.size()) != r)
    throw ShapeError("assemble: phi0 must be empty or have r components");
  const ScalarField probe(grid);
  for (const auto& f : k) require_same_grid(probe, f, "assemble(k)");
  for (const auto& f : a) require_same_grid(probe, f, "assemble(a)");
  for (const auto& e : phi_entries) {
    require_same_grid(probe, e.value.re, "assemble(phi)");
    require_same_grid(probe, e.value.im, "assemble(phi)");
  }
  for (const auto& e : phi0) {
    require_same_grid(probe, e.re, "assemble(phi0)");
    require_same_grid(probe, e.im, "assemble(phi0)");
  }

  for (int j = 0; j < r; ++j)
    for (double v : k[j].values())
      if (!(v > 0.0))
        throw Error("assemble: k_" + std::to_string(j + 1) +
                    " must be strictly positive everywhere");

  double a_scale = 1.0;
  for (const auto& f : a) a_scale = std::max(a_scale, max_abs(f));
  const std::size_t len = probe.values().size();
  for (std::size_t s = 0; s < len; ++s) {
    double trace = 0.0;
    for (int j = 0; j < r; ++j) trace += a[j].values()[s];
    if (std::abs(trace) > 1e-12 * a_scale)
      throw Error("assemble: pointwise trace of a exceeds 1e-12 tolerance");
  }

  // Active pairs are the declared entries with phi not identically zero.
  std::vector<IndexPair> active;
  std::vector<ComplexField> phi;
  std::vector<IndexPair> dropped;
  for (auto& e : phi_entries) {
    if (identically_zero(e.value)) {
      dropped.push_back(e.pair);
      continue;
    }
    active.push_back(e.pair);
    phi.push_back(std::move(e.value));
  }

  WeightSystem ws(r, active);  // validates ranges, i != j, duplicates

  HiggsProblem p{std::move(ws), grid};
  p.phi = std::move(phi);
  p.k = std::move(k);
  p.a = std::move(a);
  p.phi0 = std::move(phi0);
  p.dropped_pairs = std::move(dropped);

  for (std::size_t q = 0; q < p.ws.active_count(); ++q) {
    const auto [i, j] = p.ws.active()[q];
    ScalarField cf(grid);
    bool zero_sample = false;
    auto cv = cf.values();
    auto re = p.phi[q].re.values();
    auto im = p.phi[q].im.values();
    auto ki = p.k[static_cast<std::size_t>(i - 1)].values();
    auto kj = p.k[static_cast<std::size_t>(j - 1)].values();
    for (std::size_t s = 0; s < len; ++s) {
      cv[s] = 4.0 * (re[s] * re[s] + im[s] * im[s]) * ki[s] / kj[s];
      if (cv[s] == 0.0) zero_sample = true;
    }
    p.c.push_back(std::move(cf));
    p.c_has_zero_sample.push_back(zero_sample);
  }

  p.b.reserve(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    ScalarField bf = p.a[static_cast<std::size_t>(j)];
    for (double& v : bf.values()) v *= -2.0;
    p.b.push_back(std::move(bf));
  }

  std::vector<double> gamma(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j)
    gamma[static_cast<std::size_t>(j)] =
        integrate(p.a[static_cast<std::size_t>(j)]) / (2.0 * std::numbers::pi);
  p.gamma = project_trace_zero(gamma);
  return p;
}

HiggsProblem make_cyclic(int r, const PeriodicGrid& grid,
                         const std::vector<std::string>& phi_exprs,
                         const std::vector<std::string>& k_exprs,
                         const std::vector<std::string>& a_exprs) {
  std::vector<std::pair<std::string, std::string>> with_im;
  with_im.reserve(phi_exprs.size());
  for (const auto& e : phi_exprs) with_im.emplace_back(e, "0");
  return make_cyclic(r, grid, with_im, k_exprs, a_exprs);
}

HiggsProblem make_cyclic(
    int r, const PeriodicGrid& grid,
    const std::vector<std::pair<std::string, std::string>>& phi_exprs,
    const std::vector<std::string>& k_exprs,
    const std::vector<std::string>& a_exprs) {
  if (r < 2) throw Error("make_cyclic: r must be >= 2");
  if (static_cast<int>(phi_exprs.size()) != r ||
      static_cast<int>(k_exprs.size()) != r ||
      static_cast<int>(a_exprs.size()) != r)
    throw ShapeError("make_cyclic: need r expressions for phi, k, and a");

  std::vector<PairEntry> entries;
  entries.reserve(static_cast<std::size_t>(r));
  for (int idx = 1; idx <= r; ++idx) {
    const IndexPair pair = idx < r ? IndexPair{idx + 1, idx} : IndexPair{1, r};
    const auto& [re_src, im_src] = phi_exprs[static_cast<std::size_t>(idx - 1)];
    entries.push_back({pair, {eval_expr(re_src, grid), eval_expr(im_src, grid)}});
  }
  std::vector<ScalarField> k, a;
  for (const auto& e : k_exprs) k.push_back(eval_expr(e, grid));
  for (const auto& e : a_exprs) a.push_back(eval_expr(e, grid));
  return assemble(r, grid, std::move(entries), std::move(k), std::move(a));
}

LogIntegrabilityReport validate_log_integrability(const HiggsProblem& p) {
  LogIntegrabilityReport rep;
  for (std::size_t q = 0; q < p.ws.active_count(); ++q) {
    LogIntegrabilityRow row;
    row.pair = p.ws.active()[q];
    std::vector<double> logs;
    std::size_t zeros = 0;
    for (double v : p.c[q].values()) {
      if (v > 0.0)
        logs.push_back(std::log(v));
      else
        ++zeros;
    }
    const auto total = p.c[q].values().size();
    row.zero_fraction = static_cast<double>(zeros) / static_cast<double>(total);
    if (logs.empty()) {
      row.status = LogIntegrabilityRow::Status::Fail;  // active yet c == 0
      rep.any_fail = true;
    } else {
      row.mean_log_nonzero = pairwise_sum(logs) / static_cast<double>(logs.size());
      row.status = zeros ? LogIntegrabilityRow::Status::Warn
                         : LogIntegrabilityRow::Status::Ok;
      rep.any_warn = rep.any_warn || zeros > 0;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

std::string LogIntegrabilityReport::to_text() const {
  std::ostringstream os;
  for (const auto& row : rows) {
    const char* st = row.status == LogIntegrabilityRow::Status::Ok     ? "OK"
                     : row.status == LogIntegrabilityRow::Status::Warn ? "WARN"
                                                                       : "FAIL";
    os << "pair (" << row.pair.i << "," << row.pair.j << "): " << st
       << " zero_fraction=" << row.zero_fraction
       << " mean_log_nonzero=" << row.mean_log_nonzero << "\n";
  }
  os << "summary = " << (any_fail ? "FAIL" : any_warn ? "WARN" : "OK") << "\n";
  return os.str();
}

}  // namespace hetoda
