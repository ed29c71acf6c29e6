#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace wpd {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kHermitianInput = 1e-10;  // hermitian_eig precondition
inline constexpr double kDensity = 1e-12;         // DensityMatrix invariants
inline constexpr double kJacobiOffNorm = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
}  // namespace tol

/// Eigen-decomposition of a Hermitian matrix, eigenvalues sorted descending
/// (ties keep their diagonal order). Columns of `vectors` are eigenvectors.
struct EigenSystem {
  RealVector values;
  Matrix vectors;
};

/// Cyclic complex Jacobi. Throws NonHermitian if |M - M^H| exceeds 1e-10
/// entrywise, NoConvergence if the off-diagonal Frobenius norm is still
/// above 1e-12 (relative to max(1, |M|_F)) after 100 sweeps.
EigenSystem hermitian_eig(const Matrix& m);

/// Spectrum of a density matrix: nonnegative eigenvalues summing to one.
struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;

  std::size_t dim() const { return eigenvalues.size(); }
};

/// Validated n x n density matrix. Immutable; the spectrum is computed once at
/// construction. Eigenvalues in [-1e-12, 0) are clamped to zero and the
/// spectrum renormalized, in which case the stored entries are rebuilt from
/// the clamped spectrum.
class DensityMatrix {
 public:
  /// Throws NonHermitian, BadTrace or NotPositive.
  static DensityMatrix from_matrix(const Matrix& m);

  /// Diagonal state with the given probabilities (must be >= 0, sum 1).
  static DensityMatrix diagonal(std::span<const double> probabilities);

  /// |psi><psi| for a (not necessarily normalized) nonzero vector.
  static DensityMatrix pure(const Eigen::VectorXcd& psi);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  const Spectrum& spectrum() const { return spectrum_; }
  cplx operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  /// Diagonal entries (real parts) in basis order.
  std::vector<double> diagonal_entries() const;

  bool is_diagonal(double tolerance = 0.0) const;

 private:
  DensityMatrix(Matrix entries, Spectrum spectrum)
      : entries_(std::move(entries)), spectrum_(std::move(spectrum)) {}

  Matrix entries_;
  Spectrum spectrum_;
};

/// Full dephasing in the computational basis: keeps the diagonal, zeroes the rest.
DensityMatrix dephase(const DensityMatrix& rho);

/// Kronecker product A (x) B.
Matrix tensor(const Matrix& a, const Matrix& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

enum class Subsystem { A, B };

/// Reduced state of a bipartite rho on C^dA (x) C^dB.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);

/// Direct sum A (+) B as a block-diagonal matrix.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Hilbert-Schmidt inner product tr(X^H Y).
cplx hs_inner(const Matrix& x, const Matrix& y);

enum class BasisKind { MatrixUnits, Hermitian };

/// Hilbert-Schmidt orthonormal basis of M_n(C), n^2 elements.
///
/// MatrixUnits: |i><j| in row-major (i, j) order.
/// Hermitian: I/sqrt(n), then for each j < k the symmetric and antisymmetric
/// generalized Gell-Mann matrices, then the n-1 diagonal ones; all scaled to
/// unit HS norm. For n = 2 this is {I, s1, s2, s3}/sqrt(2).
struct OperatorBasis {
  std::size_t dim = 0;
  BasisKind kind = BasisKind::MatrixUnits;
  std::vector<Matrix> elements;
};

OperatorBasis operator_basis(std::size_t n, BasisKind kind = BasisKind::MatrixUnits);

/// Permutation matrix sending |i> to |perm[i]>.
Matrix permutation_matrix(std::span<const std::size_t> perm);

/// Pauli matrices.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

}  // namespace wpd
