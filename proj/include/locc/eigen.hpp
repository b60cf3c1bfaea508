#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "locc/matrix.hpp"

namespace locc {

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  double reconstruction_error;      // Frobenius norm of V diag(l) V^dag - m
};

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi with complex 2x2
/// rotations. Deterministic: fixed sweep order, no pivot search.
/// Converged when the off-diagonal Frobenius norm drops below
/// 1e-13 * frobeniusNorm(m); errors out after 100 sweeps.
inline Spectrum hermitian_eigenvalues(const Matrix& m) {
  if (!is_hermitian(m))
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
  const std::size_t n = m.dim();
  Matrix a = m;
  Matrix v = Matrix::identity(n);
  const double norm = frobenius_norm(m);
  const double thresh = 1e-13 * norm;

  int sweep = 0;
  while (detail::off_diagonal_norm(a) > thresh) {
    if (++sweep > 100)
      throw std::runtime_error("hermitian_eigenvalues: no convergence in 100 sweeps");
    for (std::size_t p = 0; p < n - 1; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Phase factor turning the 2x2 subproblem real symmetric.
        const Complex u = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // G = [[c, s],[-s*conj(u), c*conj(u)]] acting on columns (p,q);
        // A <- G^dag A G, V <- V G.
        const Complex gqp = -s * std::conj(u);
        const Complex gqq = c * std::conj(u);
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip + gqp * aiq;
          a(i, q) = s * aip + gqq * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj + std::conj(gqp) * aqj;
          a(q, j) = s * apj + std::conj(gqq) * aqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip + gqp * viq;
          v(i, q) = s * vip + gqq * viq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  Spectrum sp;
  sp.eigenvalues.resize(n);
  for (std::size_t k = 0; k < n; ++k) sp.eigenvalues[k] = a(order[k], order[k]).real();

  // Reconstruction residual V diag(l) V^dag against the input.
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex r{};
      for (std::size_t k = 0; k < n; ++k)
        r += v(i, k) * a(k, k).real() * std::conj(v(j, k));
      err += std::norm(r - m(i, j));
    }
  sp.reconstruction_error = std::sqrt(err);
  return sp;
}

/// Sum of |eigenvalue| over the spectrum; equals Tr[(m^dag m)^(1/2)] for
/// Hermitian m.
inline double trace_norm_hermitian(const Matrix& m) {
  if (!is_hermitian(m))
    throw std::invalid_argument("trace_norm_hermitian: matrix is not Hermitian");
  const Spectrum sp = hermitian_eigenvalues(m);
  double s = 0.0;
  for (double l : sp.eigenvalues) s += std::abs(l);
  return s;
}

}  // namespace locc
