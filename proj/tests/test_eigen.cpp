#include <cstring>

#include <catch2/catch_amalgamated.hpp>

#include "locc/eigen.hpp"
#include "locc/matrix.hpp"
#include "oracles.hpp"

using locc::Complex;
using locc::Matrix;
using locc::Spectrum;

TEST_CASE("eigenvalues of I4 and sigma_x") {
  const Spectrum id = locc::hermitian_eigenvalues(Matrix::identity(4));
  REQUIRE(id.eigenvalues.size() == 4);
  for (double l : id.eigenvalues) CHECK(l == Catch::Approx(1.0).margin(1e-14));

  Matrix sx(2);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  const Spectrum sp = locc::hermitian_eigenvalues(sx);
  CHECK(sp.eigenvalues[0] == Catch::Approx(-1.0).margin(1e-13));
  CHECK(sp.eigenvalues[1] == Catch::Approx(1.0).margin(1e-13));
}

TEST_CASE("non-Hermitian input is rejected, never symmetrized") {
  Matrix m(2);
  m(0, 1) = 1.0;  // m(1,0) left zero
  CHECK_THROWS_AS(locc::hermitian_eigenvalues(m), std::invalid_argument);
  CHECK_THROWS_AS(locc::trace_norm_hermitian(m), std::invalid_argument);
}

TEST_CASE("3x3 eigenvalues agree with characteristic-polynomial bisection") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix h = rng.random_hermitian(3);
    const Spectrum sp = locc::hermitian_eigenvalues(h);
    const std::vector<double> ref = oracle::char_poly_eigenvalues(h);
    REQUIRE(sp.eigenvalues.size() == 3);
    for (int k = 0; k < 3; ++k)
      CHECK(sp.eigenvalues[k] == Catch::Approx(ref[k]).margin(1e-9));
  }
}

TEST_CASE("reconstruction error and trace consistency") {
  oracle::Rng rng(22);
  for (std::size_t n : {2u, 5u, 16u}) {
    const Matrix h = rng.random_hermitian(n);
    const Spectrum sp = locc::hermitian_eigenvalues(h);
    CHECK(sp.reconstruction_error <= 1e-10 * std::max(1.0, locc::frobenius_norm(h)));
    double sum = 0.0;
    for (double l : sp.eigenvalues) sum += l;
    CHECK(sum == Catch::Approx(locc::trace(h).real()).margin(1e-10));
    CHECK(std::is_sorted(sp.eigenvalues.begin(), sp.eigenvalues.end()));
  }
}

TEST_CASE("eigensolver is bitwise deterministic") {
  oracle::Rng rng(23);
  const Matrix h = rng.random_hermitian(16);
  const Spectrum a = locc::hermitian_eigenvalues(h);
  const Spectrum b = locc::hermitian_eigenvalues(h);
  REQUIRE(a.eigenvalues.size() == b.eigenvalues.size());
  CHECK(std::memcmp(a.eigenvalues.data(), b.eigenvalues.data(),
                    a.eigenvalues.size() * sizeof(double)) == 0);
  CHECK(a.reconstruction_error == b.reconstruction_error);
}

TEST_CASE("trace norm basics") {
  Matrix sz(2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  CHECK(locc::trace_norm_hermitian(sz) == Catch::Approx(2.0).margin(1e-13));

  oracle::Rng rng(24);
  const Matrix rho = rng.random_density_matrix({'A', 'B'});
  CHECK(locc::trace_norm_hermitian(rho) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("trace-1 Hermitian identity: trace norm = 1 + 2|negative part|") {
  oracle::Rng rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix h = rng.random_hermitian(4);
    // Shift the diagonal so the trace is exactly 1.
    const double shift = (1.0 - locc::trace(h).real()) / 4.0;
    for (std::size_t i = 0; i < 4; ++i) h(i, i) += shift;
    const Spectrum sp = locc::hermitian_eigenvalues(h);
    double neg = 0.0;
    for (double l : sp.eigenvalues)
      if (l < 0.0) neg -= l;
    CHECK(locc::trace_norm_hermitian(h) == Catch::Approx(1.0 + 2.0 * neg).margin(1e-10));
  }
}

TEST_CASE("trace norm dominates |trace|") {
  oracle::Rng rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix h = rng.random_hermitian(4);
    CHECK(locc::trace_norm_hermitian(h) >= std::abs(locc::trace(h).real()) - 1e-12);
  }
}
