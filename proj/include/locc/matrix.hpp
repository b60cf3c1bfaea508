#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace locc {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Values are immutable by
/// convention: every operation returns a new matrix.
class Matrix {
 public:
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) throw std::invalid_argument("Matrix: dim must be >= 1");
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  const std::vector<Complex>& data() const { return data_; }

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

inline Matrix mat_mul(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.dim() != rhs.dim())
    throw std::invalid_argument("mat_mul: dimension mismatch");
  const std::size_t n = lhs.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

inline Matrix adjoint(const Matrix& m) {
  const std::size_t n = m.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

/// Tensor product; block (i,j) of the result is lhs(i,j) * rhs.
inline Matrix kron(const Matrix& lhs, const Matrix& rhs) {
  const std::size_t nl = lhs.dim(), nr = rhs.dim();
  Matrix out(nl * nr);
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nl; ++j) {
      const Complex a = lhs(i, j);
      if (a == Complex{}) continue;
      for (std::size_t k = 0; k < nr; ++k)
        for (std::size_t l = 0; l < nr; ++l)
          out(i * nr + k, j * nr + l) = a * rhs(k, l);
    }
  return out;
}

inline Complex trace(const Matrix& m) {
  Complex t{};
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

inline double frobenius_norm(const Matrix& m) {
  double s = 0.0;
  for (const Complex& z : m.data()) s += std::norm(z);
  return std::sqrt(s);
}

inline bool is_hermitian(const Matrix& m, double tol = 1e-12) {
  const double scale = std::max(1.0, frobenius_norm(m));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol * scale) return false;
  return true;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator+: dimension mismatch");
  Matrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator-: dimension mismatch");
  Matrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

inline Matrix operator*(Complex s, const Matrix& m) {
  Matrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = s * m(i, j);
  return out;
}

inline Matrix operator*(double s, const Matrix& m) { return Complex(s, 0.0) * m; }

}  // namespace locc
