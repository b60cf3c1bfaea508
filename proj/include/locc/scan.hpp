#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "locc/certify.hpp"
#include "locc/measures.hpp"
#include "locc/states.hpp"

namespace locc {

/// Records within this distance of the 4x - y = 3/4 boundary are flagged
/// and excluded from region-agreement assertions.
inline constexpr double kBoundaryBand = 1e-6;

struct ScanRecord {
  double theta1, theta2;  // radians, in [0, pi/4]
  double a, b, c, d;      // cos/sin of the thetas (real, canonical)
  double x, y;            // |ab|^2, |cd|^2
  double en_rho_numeric, en_rho_closed;
  double en_eta_numeric, en_eta_closed;
  bool cond3, cond4;
  VerdictKind verdict_three, verdict_four;
  std::string case_label;
  bool eta_pair12;     // eta triple is built on the {A1,A2} pair
  bool boundary_band;  // within kBoundaryBand of the governing 3/4 boundary
};

/// Uniform (theta1, theta2) grid over [0, pi/4]^2 with inclusive
/// endpoints; the pi/4 endpoint uses exact 1/sqrt2 amplitudes so the
/// Bell corner is hit without trig rounding. Evaluation order is fixed
/// and the output is sorted by (theta1, theta2).
inline std::vector<ScanRecord> sweep_grid(int n, const std::vector<int>& triple) {
  if (n < 2) throw std::invalid_argument("sweep_grid: need n >= 2");
  const double quarter_pi = std::atan(1.0);
  auto axis_point = [&](int k, double& theta, double& cs, double& sn) {
    theta = quarter_pi * k / (n - 1);
    if (k == 0) {
      cs = 1.0;
      sn = 0.0;
    } else if (k == n - 1) {
      cs = kSqrtHalf;
      sn = kSqrtHalf;
    } else {
      cs = std::cos(theta);
      sn = std::sin(theta);
    }
  };

  const bool pair12 = std::count(triple.begin(), triple.end(), 1) &&
                      std::count(triple.begin(), triple.end(), 2);

  std::vector<ScanRecord> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ScanRecord r;
      axis_point(i, r.theta1, r.a, r.b);
      axis_point(j, r.theta2, r.c, r.d);
      const FamilyParams p{r.a, r.b, r.c, r.d};
      r.x = std::norm(p.a * p.b);
      r.y = std::norm(p.c * p.d);
      r.en_rho_closed = en_rho_closed_form(p);
      r.en_eta_closed = en_eta_closed_form(p, triple);
      r.cond3 = condition3(p);
      r.cond4 = condition4(p);
      const Verdict v4 = certify_four(p);
      const Verdict v3 = certify_three(p, triple);
      r.en_rho_numeric = v4.en_value;
      r.en_eta_numeric = v3.en_value;
      r.verdict_four = v4.kind;
      r.verdict_three = v3.kind;
      r.case_label = v3.case_label.value_or("general");
      r.eta_pair12 = pair12;
      const double margin = pair12 ? 4.0 * r.x - r.y - 0.75 : 4.0 * r.y - r.x - 0.75;
      r.boundary_band = std::abs(margin) <= kBoundaryBand;
      out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end(), [](const ScanRecord& l, const ScanRecord& r) {
    return l.theta1 != r.theta1 ? l.theta1 < r.theta1 : l.theta2 < r.theta2;
  });
  return out;
}

struct CrossValidationReport {
  std::size_t record_count = 0;
  double max_rho_deviation = 0.0;
  double max_eta_deviation = 0.0;
  std::size_t corrected_branch_count = 0;  // records with 4x < y
  std::size_t boundary_band_count = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Compare numeric E_N against the closed forms over a record set and
/// re-check the certifier soundness and region-equivalence invariants.
inline CrossValidationReport cross_validate(const std::vector<ScanRecord>& records) {
  if (records.empty()) throw std::invalid_argument("cross_validate: no records");
  CrossValidationReport rep;
  rep.record_count = records.size();
  for (const ScanRecord& r : records) {
    const double drho = std::abs(r.en_rho_numeric - r.en_rho_closed);
    const double deta = std::abs(r.en_eta_numeric - r.en_eta_closed);
    rep.max_rho_deviation = std::max(rep.max_rho_deviation, drho);
    rep.max_eta_deviation = std::max(rep.max_eta_deviation, deta);
    if (4.0 * r.x < r.y) ++rep.corrected_branch_count;
    if (r.boundary_band) ++rep.boundary_band_count;
    auto at = [&](const char* what) {
      return std::string(what) + " at theta1=" + std::to_string(r.theta1) +
             " theta2=" + std::to_string(r.theta2);
    };
    if (drho > 1e-9) rep.violations.push_back(at("rho closed-form deviation > 1e-9"));
    if (deta > 1e-9) rep.violations.push_back(at("eta closed-form deviation > 1e-9"));
    if (r.verdict_three == VerdictKind::CertifiedIndistinguishable &&
        r.en_eta_numeric >= 1.0 - kCertEps)
      rep.violations.push_back(at("unsound three-state certification"));
    if (r.verdict_four == VerdictKind::CertifiedIndistinguishable &&
        r.en_rho_numeric >= 1.0 - kCertEps)
      rep.violations.push_back(at("unsound four-state certification"));
    const bool governing = r.eta_pair12 ? r.cond3 : r.cond4;
    if (!r.boundary_band &&
        governing != (r.verdict_three == VerdictKind::CertifiedIndistinguishable))
      rep.violations.push_back(at("inequality-region / certification mismatch"));
  }
  return rep;
}

}  // namespace locc
