#include "wpd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wpd/error.hpp"

namespace wpd {

namespace {

double hermitian_defect(const Matrix& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " expects a nonempty square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// One Jacobi rotation annihilating a(p, q); accumulates into v.
void rotate(Matrix& a, Matrix& v, Eigen::Index p, Eigen::Index q) {
  const cplx apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const cplx phase = apq / r;
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx s_phase = s * phase;
  const cplx s_conj = s * std::conj(phase);

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = c * akp - s_conj * akq;
    a(k, q) = s_phase * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = c * apk - s_phase * aqk;
    a(q, k) = s_conj * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = c * vkp - s_conj * vkq;
    v(k, q) = s_phase * vkp + c * vkq;
  }
}

}  // namespace

EigenSystem hermitian_eig(const Matrix& m) {
  require_square(m, "hermitian_eig");
  if (const double defect = hermitian_defect(m); !(defect <= tol::kHermitianInput)) {
    throw Error(ErrorCode::NonHermitian,
                "matrix differs from its adjoint by " + std::to_string(defect));
  }
  const Eigen::Index n = m.rows();
  Matrix a = 0.5 * (m + m.adjoint());
  Matrix v = Matrix::Identity(n, n);
  const double threshold = tol::kJacobiOffNorm * std::max(1.0, a.norm());

  bool converged = false;
  for (int sweep = 0; sweep <= tol::kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < threshold) {
      converged = true;
      break;
    }
    if (sweep == tol::kJacobiMaxSweeps) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "off-diagonal norm " + std::to_string(off_diagonal_norm(a)) + " after " +
                    std::to_string(tol::kJacobiMaxSweeps) + " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigenSystem out{RealVector(n), Matrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src).real();
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

DensityMatrix DensityMatrix::from_matrix(const Matrix& m) {
  require_square(m, "DensityMatrix");
  if (const double defect = hermitian_defect(m); !(defect <= tol::kDensity)) {
    throw Error(ErrorCode::NonHermitian,
                "density matrix differs from its adjoint by " + std::to_string(defect));
  }
  Matrix h = 0.5 * (m + m.adjoint());
  const double trace = h.trace().real();
  if (!(std::abs(trace - 1.0) <= tol::kDensity)) {
    throw Error(ErrorCode::BadTrace, "trace is " + std::to_string(trace));
  }

  EigenSystem eig = hermitian_eig(h);
  const Eigen::Index n = h.rows();
  Spectrum spectrum{std::vector<double>(static_cast<std::size_t>(n)), std::move(eig.vectors)};
  double sum = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    double lambda = eig.values(k);
    if (lambda < -tol::kDensity) {
      throw Error(ErrorCode::NotPositive, "eigenvalue " + std::to_string(lambda));
    }
    lambda = std::max(lambda, 0.0);
    spectrum.eigenvalues[static_cast<std::size_t>(k)] = lambda;
    sum += lambda;
  }
  for (double& lambda : spectrum.eigenvalues) lambda /= sum;
  return DensityMatrix(std::move(h), std::move(spectrum));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probabilities) {
  const auto n = static_cast<Eigen::Index>(probabilities.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = probabilities[static_cast<std::size_t>(i)];
  return from_matrix(m);
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw Error(ErrorCode::BadParameters, "zero state vector");
  const Eigen::VectorXcd unit = psi / norm;
  return from_matrix(unit * unit.adjoint());
}

std::vector<double> DensityMatrix::diagonal_entries() const {
  std::vector<double> out(dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)(i, i).real();
  return out;
}

bool DensityMatrix::is_diagonal(double tolerance) const {
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      if (i != j && std::abs(entries_(i, j)) > tolerance) return false;
    }
  }
  return true;
}

DensityMatrix dephase(const DensityMatrix& rho) {
  const auto diag = rho.diagonal_entries();
  return DensityMatrix::diagonal(diag);
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::from_matrix(tensor(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
  if (dim_a == 0 || dim_b == 0 || dim_a * dim_b != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "partial_trace: " + std::to_string(dim_a) + "x" + std::to_string(dim_b) +
                    " does not factor dimension " + std::to_string(rho.dim()));
  }
  const auto da = static_cast<Eigen::Index>(dim_a);
  const auto db = static_cast<Eigen::Index>(dim_b);
  const Matrix& m = rho.matrix();
  if (keep == Subsystem::A) {
    Matrix out = Matrix::Zero(da, da);
    for (Eigen::Index a = 0; a < da; ++a)
      for (Eigen::Index a2 = 0; a2 < da; ++a2)
        for (Eigen::Index b = 0; b < db; ++b) out(a, a2) += m(a * db + b, a2 * db + b);
    return DensityMatrix::from_matrix(out);
  }
  Matrix out = Matrix::Zero(db, db);
  for (Eigen::Index b = 0; b < db; ++b)
    for (Eigen::Index b2 = 0; b2 < db; ++b2)
      for (Eigen::Index a = 0; a < da; ++a) out(b, b2) += m(a * db + b, a * db + b2);
  return DensityMatrix::from_matrix(out);
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

cplx hs_inner(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "hs_inner: shape mismatch");
  }
  return (x.adjoint() * y).trace();
}

OperatorBasis operator_basis(std::size_t n, BasisKind kind) {
  if (n < 2) throw Error(ErrorCode::BadParameters, "operator_basis needs n >= 2");
  const auto d = static_cast<Eigen::Index>(n);
  OperatorBasis basis{n, kind, {}};
  basis.elements.reserve(n * n);

  if (kind == BasisKind::MatrixUnits) {
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        Matrix e = Matrix::Zero(d, d);
        e(i, j) = 1.0;
        basis.elements.push_back(std::move(e));
      }
    }
    return basis;
  }

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  basis.elements.push_back(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(n)));
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = j + 1; k < d; ++k) {
      Matrix sym = Matrix::Zero(d, d);
      sym(j, k) = inv_sqrt2;
      sym(k, j) = inv_sqrt2;
      basis.elements.push_back(std::move(sym));
      Matrix anti = Matrix::Zero(d, d);
      anti(j, k) = cplx(0.0, -inv_sqrt2);
      anti(k, j) = cplx(0.0, inv_sqrt2);
      basis.elements.push_back(std::move(anti));
    }
  }
  for (Eigen::Index l = 1; l < d; ++l) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
    Matrix diag = Matrix::Zero(d, d);
    for (Eigen::Index k = 0; k < l; ++k) diag(k, k) = scale;
    diag(l, l) = -static_cast<double>(l) * scale;
    basis.elements.push_back(std::move(diag));
  }
  return basis;
}

Matrix permutation_matrix(std::span<const std::size_t> perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto target = perm[static_cast<std::size_t>(i)];
    if (target >= perm.size()) throw Error(ErrorCode::BadParameters, "not a permutation");
    p(static_cast<Eigen::Index>(target), i) = 1.0;
  }
  return p;
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace wpd
