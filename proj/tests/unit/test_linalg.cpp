#include <doctest.h>

#include <numbers>
#include <vector>

#include "support.hpp"
#include "wpd/error.hpp"
#include "wpd/rng.hpp"
#include "wpd/states.hpp"

using namespace wpd;
using wpd::test::max_abs_diff;
using wpd::test::max_abs_entry;
using wpd::test::oracle_eigenvalues;

namespace {

Matrix random_hermitian(std::size_t n, std::uint64_t seed, double scale = 1.0) {
  Rng rng(seed);
  const auto k = static_cast<Eigen::Index>(n);
  Matrix g(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) g(i, j) = scale * rng.complex_normal();
  return 0.5 * (g + g.adjoint());
}

void check_eig(const Matrix& a) {
  const auto es = hermitian_eig(a);
  const auto n = a.rows();
  REQUIRE(es.values.size() == n);
  for (Eigen::Index i = 1; i < n; ++i) CHECK(es.values(i - 1) >= es.values(i));
  const double scale = std::max(1.0, a.norm());
  const Matrix recon = es.vectors * es.values.cast<cplx>().asDiagonal() * es.vectors.adjoint();
  CHECK(max_abs_entry(recon - a) < 1e-10 * scale);
  CHECK(max_abs_entry(es.vectors.adjoint() * es.vectors - Matrix::Identity(n, n)) < 1e-10);
  std::vector<double> got(es.values.data(), es.values.data() + n);
  CHECK(max_abs_diff(got, oracle_eigenvalues(a)) < 1e-10 * scale);
}

}  // namespace

TEST_CASE("hermitian_eig on small fixed matrices") {
  auto id = hermitian_eig(Matrix::Identity(3, 3));
  CHECK(id.values(0) == doctest::Approx(1.0));
  CHECK(id.values(2) == doctest::Approx(1.0));

  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.3;
  d(1, 1) = 0.7;
  auto dd = hermitian_eig(d);
  CHECK(dd.values(0) == doctest::Approx(0.7));
  CHECK(dd.values(1) == doctest::Approx(0.3));

  auto sx = hermitian_eig(pauli_x());
  CHECK(sx.values(0) == doctest::Approx(1.0));
  CHECK(sx.values(1) == doctest::Approx(-1.0));
  check_eig(pauli_y());
}

TEST_CASE("hermitian_eig agrees with the reference solver") {
  for (std::size_t n = 1; n <= 16; ++n) {
    for (std::uint64_t s = 0; s < 5; ++s) check_eig(random_hermitian(n, 100 * n + s));
  }
  check_eig(random_hermitian(8, 7, 1e6));
  check_eig(random_hermitian(8, 8, 1e-6));
}

TEST_CASE("hermitian_eig with degenerate spectra") {
  const Matrix u = random_unitary(6, 42);
  RealVector lam(6);
  lam << 0.4, 0.4, 0.1, 0.1, 0.0, 0.0;
  const Matrix a = u * lam.cast<cplx>().asDiagonal() * u.adjoint();
  check_eig(a);
  const auto es = hermitian_eig(a);
  CHECK(es.values(0) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(std::abs(es.values(5)) < 1e-12);
}

TEST_CASE("hermitian_eig rejects bad input") {
  Matrix a = Matrix::Zero(2, 3);
  CHECK_THROWS_AS(hermitian_eig(a), Error);
  Matrix b = pauli_x();
  b(0, 1) = 2.0;
  try {
    hermitian_eig(b);
    FAIL("expected NonHermitian");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonHermitian);
  }
  CHECK_THROWS_AS(hermitian_eig(Matrix(0, 0)), Error);
}

TEST_CASE("DensityMatrix construction and validation") {
  const double p[] = {0.25, 0.75};
  const auto rho = DensityMatrix::diagonal(p);
  CHECK(rho.dim() == 2);
  CHECK(rho.spectrum().eigenvalues[0] == doctest::Approx(0.75));
  CHECK(rho.is_diagonal());

  Matrix bad_trace = Matrix::Identity(2, 2);
  try {
    DensityMatrix::from_matrix(bad_trace);
    FAIL("expected BadTrace");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadTrace);
  }

  Matrix negative = Matrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  try {
    DensityMatrix::from_matrix(negative);
    FAIL("expected NotPositive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositive);
  }

  Matrix skew = Matrix::Identity(2, 2) * 0.5;
  skew(0, 1) = cplx(0.1, 0.0);
  skew(1, 0) = cplx(0.3, 0.0);
  try {
    DensityMatrix::from_matrix(skew);
    FAIL("expected NonHermitian");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonHermitian);
  }

  // Tiny negative roundoff is tolerated and clamped in the spectrum.
  Matrix near = Matrix::Zero(2, 2);
  near(0, 0) = 1.0 + 5e-13;
  near(1, 1) = -5e-13;
  const auto ok = DensityMatrix::from_matrix(near);
  CHECK(ok.spectrum().eigenvalues[1] >= 0.0);

  Eigen::VectorXcd psi(3);
  psi << cplx(1, 0), cplx(0, 1), cplx(1, 1);
  const auto pure = DensityMatrix::pure(psi);
  CHECK(pure.spectrum().eigenvalues[0] == doctest::Approx(1.0));
  CHECK(std::abs(pure.matrix().trace() - cplx(1.0)) < 1e-14);
}

TEST_CASE("dephase") {
  const double p[] = {0.2, 0.3, 0.5};
  const auto d = DensityMatrix::diagonal(p);
  CHECK(max_abs_entry(dephase(d).matrix() - d.matrix()) == 0.0);

  const auto mc = named_state("maximally-coherent", 2);
  CHECK(max_abs_entry(mc.matrix() - Matrix::Constant(2, 2, 0.5)) < 1e-15);
  CHECK(max_abs_entry(dephase(mc).matrix() - 0.5 * Matrix::Identity(2, 2)) < 1e-15);

  const auto b = dephase(bloch_qubit(0.3, 0.2, 0.4));
  CHECK(b(0, 0).real() == doctest::Approx(0.7));
  CHECK(b(1, 1).real() == doctest::Approx(0.3));
  CHECK(b.is_diagonal());
}

TEST_CASE("tensor products") {
  CHECK(max_abs_entry(tensor(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) -
                      Matrix::Identity(4, 4)) == 0.0);
  const double a[] = {1.0, 0.0};
  const double b[] = {0.0, 1.0};
  const auto ab = tensor(DensityMatrix::diagonal(a), DensityMatrix::diagonal(b));
  const auto entries = ab.diagonal_entries();
  CHECK(entries == std::vector<double>{0.0, 1.0, 0.0, 0.0});

  const auto rho = random_mixed(3, 5);
  const auto mixed = DensityMatrix::from_matrix(Matrix::Identity(2, 2) / 2.0);
  const auto t = tensor(rho, mixed);
  std::vector<double> expected;
  for (double l : oracle_eigenvalues(rho.matrix())) {
    expected.push_back(l / 2);
    expected.push_back(l / 2);
  }
  CHECK(max_abs_diff(t.spectrum().eigenvalues, expected) < 1e-12);
}

TEST_CASE("partial trace") {
  const auto ra = random_mixed(2, 11);
  const auto rb = random_mixed(3, 12);
  const auto prod = tensor(ra, rb);
  CHECK(max_abs_entry(partial_trace(prod, 2, 3, Subsystem::A).matrix() - ra.matrix()) < 1e-14);
  CHECK(max_abs_entry(partial_trace(prod, 2, 3, Subsystem::B).matrix() - rb.matrix()) < 1e-14);

  const auto bell = named_state("bell", 4, 0);
  CHECK(max_abs_entry(partial_trace(bell, 2, 2, Subsystem::A).matrix() -
                      0.5 * Matrix::Identity(2, 2)) < 1e-15);

  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto psi = random_pure(6, 900 + s);
    auto sa = partial_trace(psi, 2, 3, Subsystem::A).spectrum().eigenvalues;
    auto sb = partial_trace(psi, 2, 3, Subsystem::B).spectrum().eigenvalues;
    sa.resize(3, 0.0);
    CHECK(max_abs_diff(sa, sb) < 1e-12);
  }

  CHECK_THROWS_AS(partial_trace(prod, 2, 2, Subsystem::A), Error);
}

TEST_CASE("direct sum and Hilbert-Schmidt inner product") {
  const Matrix a = Matrix::Identity(2, 2);
  const Matrix b = pauli_x();
  const Matrix s = direct_sum(a, b);
  CHECK(s.rows() == 4);
  CHECK(s(2, 3) == cplx(1.0));
  CHECK(s(0, 2) == cplx(0.0));
  CHECK(std::abs(hs_inner(pauli_x(), pauli_x()) - cplx(2.0)) < 1e-15);
  CHECK(std::abs(hs_inner(pauli_x(), pauli_y())) < 1e-15);
}

TEST_CASE("operator bases") {
  const auto mu = operator_basis(2, BasisKind::MatrixUnits);
  REQUIRE(mu.elements.size() == 4);
  CHECK(mu.elements[1](0, 1) == cplx(1.0));
  CHECK(mu.elements[2](1, 0) == cplx(1.0));

  const auto h = operator_basis(2, BasisKind::Hermitian);
  REQUIRE(h.elements.size() == 4);
  const double r = 1.0 / std::numbers::sqrt2;
  CHECK(max_abs_entry(h.elements[0] - r * Matrix::Identity(2, 2)) < 1e-15);
  CHECK(max_abs_entry(h.elements[1] - r * pauli_x()) < 1e-15);
  CHECK(max_abs_entry(h.elements[2] - r * pauli_y()) < 1e-15);
  CHECK(max_abs_entry(h.elements[3] - r * pauli_z()) < 1e-15);

  for (std::size_t n = 2; n <= 6; ++n) {
    for (auto kind : {BasisKind::MatrixUnits, BasisKind::Hermitian}) {
      const auto basis = operator_basis(n, kind);
      const auto k = basis.elements.size();
      REQUIRE(k == n * n);
      Matrix gram(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
              hs_inner(basis.elements[i], basis.elements[j]);
      CHECK(max_abs_entry(gram - Matrix::Identity(gram.rows(), gram.cols())) < 1e-14);
      if (kind == BasisKind::Hermitian) {
        for (const auto& x : basis.elements) CHECK(max_abs_entry(x - x.adjoint()) == 0.0);
      }
    }
  }
}

TEST_CASE("permutation matrices") {
  const std::size_t perm[] = {2, 0, 1};
  const Matrix p = permutation_matrix(perm);
  CHECK(max_abs_entry(p * p.adjoint() - Matrix::Identity(3, 3)) == 0.0);
  const double d[] = {0.5, 0.3, 0.2};
  const Matrix moved = p * DensityMatrix::diagonal(d).matrix() * p.adjoint();
  CHECK(std::abs(moved.trace() - cplx(1.0)) < 1e-15);
}
