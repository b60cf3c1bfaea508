#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "locc/eigen.hpp"
#include "locc/matrix.hpp"
#include "locc/states.hpp"

namespace locc {

/// Eigenvalues in [-eps_neg, 0) count as zero: Jacobi noise floor is
/// ~1e-13 and every genuine negative eigenvalue in scope is > 1e-4 in
/// magnitude.
inline constexpr double kNegEigenvalueEps = 1e-10;

struct EnResult {
  double en;          // bits
  double negativity;  // |sum of negative eigenvalues of the PT|
  std::vector<double> neg_eigenvalues;
  std::string method;  // "numeric" or "closedForm"
};

namespace detail {

inline void require_density(const Matrix& m, const char* who) {
  if (!is_hermitian(m)) throw std::invalid_argument(std::string(who) + ": not Hermitian");
  if (std::abs(trace(m).real() - 1.0) > 1e-9 || std::abs(trace(m).imag()) > 1e-9)
    throw std::invalid_argument(std::string(who) + ": trace != 1");
  const Spectrum sp = hermitian_eigenvalues(m);
  if (sp.eigenvalues.front() < -1e-9)
    throw std::invalid_argument(std::string(who) + ": not positive semidefinite");
}

}  // namespace detail

/// N(m) across the given subset: absolute value of the sum of the
/// negative eigenvalues of the partial transpose.
inline double negativity(const Matrix& m, const std::vector<char>& labels,
                         const std::vector<char>& subset) {
  detail::require_density(m, "negativity");
  const Spectrum sp = hermitian_eigenvalues(partial_transpose(m, labels, subset));
  double neg = 0.0;
  for (double l : sp.eigenvalues)
    if (l < -kNegEigenvalueEps) neg -= l;
  return neg;
}

/// E_N(m) = log2 of the trace norm of the partial transpose; also checks
/// the identity E_N = log2(1 + 2N) against the same spectrum.
inline EnResult log_negativity(const Matrix& m, const std::vector<char>& labels,
                               const std::vector<char>& subset) {
  detail::require_density(m, "log_negativity");
  const Spectrum sp = hermitian_eigenvalues(partial_transpose(m, labels, subset));
  double tnorm = 0.0;
  double neg = 0.0;
  std::vector<double> negs;
  for (double l : sp.eigenvalues) {
    tnorm += std::abs(l);
    if (l < -kNegEigenvalueEps) {
      neg -= l;
      negs.push_back(l);
    }
  }
  EnResult r;
  r.en = std::log2(tnorm);
  r.negativity = neg;
  r.neg_eigenvalues = std::move(negs);
  r.method = "numeric";
  if (std::abs(r.en - std::log2(1.0 + 2.0 * r.negativity)) > 1e-9)
    throw std::runtime_error("log_negativity: E_N = log2(1+2N) identity violated");
  return r;
}

namespace detail {

inline void require_canonical(const FamilyParams& p, const char* who) {
  p.validate();
  if (!p.is_canonical())
    throw std::invalid_argument(std::string(who) + ": parameters must satisfy |a|>=|b|, |c|>=|d|");
}

/// x = |ab|^2 and y = |cd|^2 with roles swapped for triples built on the
/// {A3, A4} pair.
inline std::pair<double, double> xy_for_triple(const FamilyParams& p,
                                               const std::vector<int>& triple) {
  std::vector<int> t = triple;
  std::sort(t.begin(), t.end());
  const double xab = std::norm(p.a * p.b);
  const double ycd = std::norm(p.c * p.d);
  const bool pair12 = std::find(t.begin(), t.end(), 1) != t.end() &&
                      std::find(t.begin(), t.end(), 2) != t.end();
  const bool pair34 = std::find(t.begin(), t.end(), 3) != t.end() &&
                      std::find(t.begin(), t.end(), 4) != t.end();
  if (t.size() != 3 || t.front() < 1 || t.back() > 4 || (!pair12 && !pair34))
    throw std::invalid_argument("triple must be 3 distinct indices in 1..4");
  return pair12 ? std::make_pair(xab, ycd) : std::make_pair(ycd, xab);
}

}  // namespace detail

/// E_N of rho across AC:BD in closed form: log2(|a|^2 + |c|^2).
inline double en_rho_closed_form(const FamilyParams& p) {
  detail::require_canonical(p, "en_rho_closed_form");
  return std::log2(std::norm(p.a) + std::norm(p.c));
}

/// E_N of eta across AC:BD in closed form. With x = |ab|^2, y = |cd|^2
/// (roles per triple):
///   4x >= y:  log2{(1/3)(sqrt(1+16x-4y) + 2 sqrt(1-4x+y)) + 1}
///   4x <  y:  log2{4/3 + (2/3) sqrt(1-4x+y)}
/// The second branch is required for the first expression's square root
/// argument regime where the partial transpose picks up a different
/// negative-eigenvalue pattern; the numeric path is always authoritative
/// and this accessor is validated against it.
inline double en_eta_closed_form(const FamilyParams& p, const std::vector<int>& triple) {
  detail::require_canonical(p, "en_eta_closed_form");
  const auto [x, y] = detail::xy_for_triple(p, triple);
  const double s2 = std::sqrt(std::max(0.0, 1.0 - 4.0 * x + y));
  if (4.0 * x >= y) {
    const double s1 = std::sqrt(1.0 + 16.0 * x - 4.0 * y);
    return std::log2((s1 + 2.0 * s2) / 3.0 + 1.0);
  }
  return std::log2(4.0 / 3.0 + (2.0 / 3.0) * s2);
}

/// Rounding guard for the strict 3/4 comparisons: with 1/sqrt2 stored as
/// a double the Bell point evaluates to 3/4 + 2e-16 instead of exactly
/// 3/4, and the boundary must stay outside the region.
inline constexpr double kConditionGuard = 1e-12;

/// 4|ab|^2 - |cd|^2 > 3/4, strict.
inline bool condition3(const FamilyParams& p) {
  detail::require_canonical(p, "condition3");
  return 4.0 * std::norm(p.a * p.b) - std::norm(p.c * p.d) > 0.75 + kConditionGuard;
}

/// 4|cd|^2 - |ab|^2 > 3/4, strict.
inline bool condition4(const FamilyParams& p) {
  detail::require_canonical(p, "condition4");
  return 4.0 * std::norm(p.c * p.d) - std::norm(p.a * p.b) > 0.75 + kConditionGuard;
}

}  // namespace locc
