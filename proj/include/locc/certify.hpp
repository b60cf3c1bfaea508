#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "locc/measures.hpp"
#include "locc/states.hpp"

namespace locc {

/// Strict-inequality margin for "E_N strictly less than unity".
inline constexpr double kCertEps = 1e-9;

/// Modulus tolerance when matching the special-case patterns
/// (|ab| = 1/2, product pair, Bell corner).
inline constexpr double kCaseTol = 1e-9;

/// Width of the trivial (1,0,1,0) corner for the four-state certifier;
/// wide enough that E_N < 1 - kCertEps already holds just outside it.
inline constexpr double kTrivialCornerTol = 1e-4;

enum class VerdictKind {
  CertifiedIndistinguishable,
  TriviallyDistinguishable,
  KnownIndistinguishableByCitation,
  Inconclusive,
};

inline std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::CertifiedIndistinguishable: return "certified_indistinguishable";
    case VerdictKind::TriviallyDistinguishable: return "trivially_distinguishable";
    case VerdictKind::KnownIndistinguishableByCitation: return "known_indistinguishable_by_citation";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

struct Verdict {
  VerdictKind kind;
  double en_value;
  Cut cut;
  std::string rationale;
  std::optional<std::string> case_label;
};

namespace detail {

struct TripleView {
  bool pair12;          // pair {A1,A2}; otherwise pair {A3,A4}
  double pair_modulus;  // |ab| for pair {1,2}, |cd| for pair {3,4}
  double third_modulus; // the other product modulus
};

inline TripleView triple_view(const FamilyParams& p, const std::vector<int>& triple) {
  const auto [x, y] = xy_for_triple(p, triple);  // validates the triple
  std::vector<int> t = triple;
  const bool pair12 = std::count(t.begin(), t.end(), 1) && std::count(t.begin(), t.end(), 2);
  return TripleView{pair12, std::sqrt(x), std::sqrt(y)};
}

inline bool near(double v, double target, double tol = kCaseTol) {
  return std::abs(v - target) <= tol;
}

/// The pair states are exactly the Bell states (real 1/sqrt2 amplitudes,
/// no phases). Used only to pick between otherwise modulus-identical
/// case labels.
inline bool exactly_bell(Complex u, Complex v) {
  return std::abs(u - Complex(kSqrtHalf, 0.0)) <= kCaseTol &&
         std::abs(v - Complex(kSqrtHalf, 0.0)) <= kCaseTol;
}

}  // namespace detail

/// Certify the full four-state family: E_N of rho across AC:BD below 1
/// rules out deterministic single-copy LOCC discrimination.
inline Verdict certify_four(const FamilyParams& raw) {
  const FamilyParams p = raw.canonicalized();
  const EnResult r = log_negativity(build_rho(p), four_party_labels(), Cut::ac_bd().left);
  Verdict v;
  v.en_value = r.en;
  v.cut = Cut::ac_bd();
  if (r.en < 1.0 - kCertEps) {
    v.kind = VerdictKind::CertifiedIndistinguishable;
    v.rationale =
        "E_N(rho) < 1 across AC:BD, so distillable entanglement is below the 1 ebit "
        "that deterministic LOCC discrimination of the four states would provide.";
  } else if (std::abs(p.b) <= kTrivialCornerTol && std::abs(p.d) <= kTrivialCornerTol) {
    v.kind = VerdictKind::TriviallyDistinguishable;
    v.rationale =
        "The four states are |00>, |11>, |01>, |10> up to phases; local computational-basis "
        "measurements identify the state.";
  } else {
    v.kind = VerdictKind::Inconclusive;
    v.rationale = "E_N(rho) >= 1 and the state set is not the trivial product quadruple.";
  }
  return v;
}

/// Case labels of the three-state taxonomy, by pattern on the product
/// moduli (with an exact-Bell refinement where moduli alone cannot
/// separate two presentations of the same parameter set).
inline std::string classify_case(const FamilyParams& raw, const std::vector<int>& triple) {
  const FamilyParams p = raw.canonicalized();
  p.validate();
  const detail::TripleView t = detail::triple_view(p, triple);
  const bool pair_bell_exact =
      t.pair12 ? detail::exactly_bell(p.a, p.b) : detail::exactly_bell(p.c, p.d);
  const bool third_bell_exact =
      t.pair12 ? detail::exactly_bell(p.c, p.d) : detail::exactly_bell(p.a, p.b);
  const bool pair_half = detail::near(t.pair_modulus, 0.5);
  const bool third_half = detail::near(t.third_modulus, 0.5);
  const bool pair_zero = detail::near(t.pair_modulus, 0.0);

  if (t.pair12) {
    if (pair_bell_exact) return third_half ? "1.1.b" : "1.1.a";
    if (pair_zero && third_bell_exact) return "2.1.a";
    if (pair_half && third_bell_exact) return "2.1.b";
  } else {
    if (pair_bell_exact) return "1.2";
    if (pair_zero && third_bell_exact) return "2.2.a";
    if (pair_half && third_bell_exact) return "2.2.b";
  }
  return "general";
}

/// Certify a three-state subfamily via eta. Falls back to the case
/// table when the E_N bound is not conclusive: a vanishing pair product
/// makes the triple a computational-basis-distinguishable set, and the
/// all-Bell-moduli point is settled in the literature by a relative
/// entropy bound this library does not rederive.
inline Verdict certify_three(const FamilyParams& raw, const std::vector<int>& triple) {
  const FamilyParams p = raw.canonicalized();
  const EnResult r = log_negativity(build_eta(p, triple), four_party_labels(), Cut::ac_bd().left);
  const detail::TripleView t = detail::triple_view(p, triple);
  Verdict v;
  v.en_value = r.en;
  v.cut = Cut::ac_bd();
  v.case_label = classify_case(p, triple);
  if (r.en < 1.0 - kCertEps) {
    v.kind = VerdictKind::CertifiedIndistinguishable;
    v.rationale =
        "E_N(eta) < 1 across AC:BD, so distillable entanglement is below the 1 ebit "
        "that deterministic LOCC discrimination of the three states would provide.";
  } else if (detail::near(t.pair_modulus, 0.0)) {
    v.kind = VerdictKind::TriviallyDistinguishable;
    v.rationale =
        "The paired states are computational basis states; local measurements "
        "distinguish all three with certainty.";
  } else if (detail::near(t.pair_modulus, 0.5) && detail::near(t.third_modulus, 0.5)) {
    v.kind = VerdictKind::KnownIndistinguishableByCitation;
    v.rationale =
        "All three states are Bell states up to phases; indistinguishability is known "
        "from the relative-entropy bound argument, outside this certifier's reach.";
  } else {
    v.kind = VerdictKind::Inconclusive;
    v.rationale = "E_N(eta) >= 1 and no special-case pattern applies.";
  }
  return v;
}

}  // namespace locc
