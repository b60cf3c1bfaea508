#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "locc/matrix.hpp"

namespace locc {

inline constexpr double kSqrtHalf = 0.70710678118654752440;

/// Amplitudes (a, b, c, d) of the four-state family
///   A1 = a|00> + b|11>,  A2 = conj(b)|00> - conj(a)|11>,
///   A3 = c|01> + d|10>,  A4 = conj(d)|01> - conj(c)|10>.
struct FamilyParams {
  Complex a, b, c, d;

  void validate(double tol = 1e-12) const {
    auto finite = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
    if (!finite(a) || !finite(b) || !finite(c) || !finite(d))
      throw std::invalid_argument("FamilyParams: non-finite amplitude");
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > tol)
      throw std::invalid_argument("FamilyParams: |a|^2 + |b|^2 != 1");
    if (std::abs(std::norm(c) + std::norm(d) - 1.0) > tol)
      throw std::invalid_argument("FamilyParams: |c|^2 + |d|^2 != 1");
  }

  bool is_canonical(double tol = 1e-12) const {
    return std::abs(a) >= std::abs(b) - tol && std::abs(c) >= std::abs(d) - tol;
  }

  /// Enforce |a| >= |b| and |c| >= |d| by swapping the roles of A1/A2
  /// (resp. A3/A4): (a,b) <- (conj(b), -conj(a)). Same state set.
  FamilyParams canonicalized() const {
    FamilyParams p = *this;
    if (std::abs(p.a) < std::abs(p.b)) {
      const Complex na = std::conj(p.b), nb = -std::conj(p.a);
      p.a = na;
      p.b = nb;
    }
    if (std::abs(p.c) < std::abs(p.d)) {
      const Complex nc = std::conj(p.d), nd = -std::conj(p.c);
      p.c = nc;
      p.d = nd;
    }
    return p;
  }

  bool was_swapped() const {
    return std::abs(a) < std::abs(b) || std::abs(c) < std::abs(d);
  }
};

/// Normalized pure state over labeled qubits; labels[0] is the most
/// significant bit of the basis index.
struct PureState {
  std::vector<char> labels;
  std::vector<Complex> amplitudes;

  PureState(std::vector<char> lbls, std::vector<Complex> amps)
      : labels(std::move(lbls)), amplitudes(std::move(amps)) {
    if (labels.empty()) throw std::invalid_argument("PureState: no qubits");
    if (amplitudes.size() != (std::size_t{1} << labels.size()))
      throw std::invalid_argument("PureState: amplitude count != 2^numQubits");
    double n2 = 0.0;
    for (const Complex& z : amplitudes) n2 += std::norm(z);
    if (std::abs(n2 - 1.0) > 1e-12)
      throw std::invalid_argument("PureState: not normalized");
  }

  std::size_t num_qubits() const { return labels.size(); }
};

/// Bipartition of a label set.
struct Cut {
  std::vector<char> left;
  std::vector<char> right;

  static Cut ac_bd() { return Cut{{'A', 'C'}, {'B', 'D'}}; }

  std::string name() const {
    std::string s(left.begin(), left.end());
    s += ':';
    s.append(right.begin(), right.end());
    return s;
  }
};

struct Ensemble {
  std::vector<std::pair<double, PureState>> members;

  void validate() const {
    if (members.empty()) throw std::invalid_argument("Ensemble: empty");
    double wsum = 0.0;
    for (const auto& [w, s] : members) {
      if (!(w > 0.0)) throw std::invalid_argument("Ensemble: non-positive weight");
      if (s.labels != members.front().second.labels)
        throw std::invalid_argument("Ensemble: mismatched qubit labels");
      wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-12)
      throw std::invalid_argument("Ensemble: weights do not sum to 1");
  }
};

/// |B_i>, i in 1..4: (|00>+|11>)/sqrt2, (|00>-|11>)/sqrt2,
/// (|01>+|10>)/sqrt2, (|01>-|10>)/sqrt2.
inline PureState bell_state(int i, std::vector<char> labels = {'C', 'D'}) {
  const double h = kSqrtHalf;
  switch (i) {
    case 1: return PureState(std::move(labels), {h, 0, 0, h});
    case 2: return PureState(std::move(labels), {h, 0, 0, -h});
    case 3: return PureState(std::move(labels), {0, h, h, 0});
    case 4: return PureState(std::move(labels), {0, h, -h, 0});
    default: throw std::invalid_argument("bell_state: index must be 1..4");
  }
}

inline PureState a_state(int i, const FamilyParams& p, std::vector<char> labels = {'A', 'B'}) {
  p.validate();
  switch (i) {
    case 1: return PureState(std::move(labels), {p.a, 0, 0, p.b});
    case 2: return PureState(std::move(labels), {std::conj(p.b), 0, 0, -std::conj(p.a)});
    case 3: return PureState(std::move(labels), {0, p.c, p.d, 0});
    case 4: return PureState(std::move(labels), {0, std::conj(p.d), -std::conj(p.c), 0});
    default: throw std::invalid_argument("a_state: index must be 1..4");
  }
}

/// Rank-1 projector |s><s|.
inline Matrix projector(const PureState& s) {
  const std::size_t n = s.amplitudes.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = s.amplitudes[i] * std::conj(s.amplitudes[j]);
  return out;
}

/// Product state on concatenated labels (left labels stay more significant).
inline PureState tensor(const PureState& left, const PureState& right) {
  for (char l : left.labels)
    if (std::find(right.labels.begin(), right.labels.end(), l) != right.labels.end())
      throw std::invalid_argument("tensor: label collision");
  std::vector<char> labels = left.labels;
  labels.insert(labels.end(), right.labels.begin(), right.labels.end());
  const std::size_t nr = right.amplitudes.size();
  std::vector<Complex> amps(left.amplitudes.size() * nr);
  for (std::size_t i = 0; i < left.amplitudes.size(); ++i)
    for (std::size_t j = 0; j < nr; ++j)
      amps[i * nr + j] = left.amplitudes[i] * right.amplitudes[j];
  return PureState(std::move(labels), std::move(amps));
}

/// Convex mixture of projectors: sum_i w_i |s_i><s_i|.
inline Matrix mix_ensemble(const Ensemble& e) {
  e.validate();
  const std::size_t n = e.members.front().second.amplitudes.size();
  Matrix out(n);
  for (const auto& [w, s] : e.members) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += w * s.amplitudes[i] * std::conj(s.amplitudes[j]);
  }
  return out;
}

namespace detail {

/// Bitmask of the given labels within the ordered label list
/// (labels.front() maps to the most significant bit).
inline std::size_t subset_mask(const std::vector<char>& labels, const std::vector<char>& subset) {
  std::size_t mask = 0;
  for (char s : subset) {
    const auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end())
      throw std::invalid_argument(std::string("partial transpose: unknown qubit label '") + s + "'");
    mask |= std::size_t{1} << (labels.size() - 1 - static_cast<std::size_t>(it - labels.begin()));
  }
  return mask;
}

}  // namespace detail

/// Partial transpose over the qubits in `subset`: the subset bits of the
/// row and column indices are exchanged. Pure entry permutation, so it
/// preserves Hermiticity, trace and Frobenius norm.
inline Matrix partial_transpose(const Matrix& m, const std::vector<char>& labels,
                                const std::vector<char>& subset) {
  if (m.dim() != (std::size_t{1} << labels.size()))
    throw std::invalid_argument("partial_transpose: dim != 2^numQubits");
  const std::size_t mask = detail::subset_mask(labels, subset);
  const std::size_t n = m.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ip = (i & ~mask) | (j & mask);
      const std::size_t jp = (j & ~mask) | (i & mask);
      out(ip, jp) = m(i, j);
    }
  return out;
}

inline const std::vector<char>& four_party_labels() {
  static const std::vector<char> labels = {'A', 'B', 'C', 'D'};
  return labels;
}

/// rho = (1/4) sum_{i=1..4} P[|A_i>_AB |B_i>_CD], a 16x16 density matrix
/// in A,B,C,D qubit order (A most significant).
inline Matrix build_rho(const FamilyParams& p) {
  p.validate();
  Ensemble e;
  for (int i = 1; i <= 4; ++i)
    e.members.emplace_back(0.25, tensor(a_state(i, p, {'A', 'B'}), bell_state(i, {'C', 'D'})));
  return mix_ensemble(e);
}

/// eta = (1/3) sum_{i in triple} P[|A_i>_AB |B_i>_CD], keeping the
/// index pairing of A_i with B_i.
inline Matrix build_eta(const FamilyParams& p, const std::vector<int>& triple) {
  p.validate();
  std::vector<int> t = triple;
  std::sort(t.begin(), t.end());
  if (t.size() != 3 || std::unique(t.begin(), t.end()) != t.end() || t.front() < 1 || t.back() > 4)
    throw std::invalid_argument("build_eta: triple must be 3 distinct indices in 1..4");
  Ensemble e;
  for (int i : t)
    e.members.emplace_back(1.0 / 3.0, tensor(a_state(i, p, {'A', 'B'}), bell_state(i, {'C', 'D'})));
  return mix_ensemble(e);
}

}  // namespace locc
