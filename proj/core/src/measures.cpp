#include "wpd/measures.hpp"

#include <cmath>
#include <string>

#include "wpd/error.hpp"

namespace wpd {

namespace {

constexpr double kPositive = 1e-15;

double dim_of(const DensityMatrix& rho) {
  if (rho.dim() < 2) throw Error(ErrorCode::DimensionMismatch, "measures need n >= 2");
  return static_cast<double>(rho.dim());
}

double diagonal_trace_mean(const DensityMatrix& rho, const MonotoneFunction& f) {
  const auto diag = rho.diagonal_entries();
  return trace_mean(f, diag);
}

double spectral_trace_mean(const DensityMatrix& rho, const MonotoneFunction& f) {
  return trace_mean(f, rho.spectrum().eigenvalues);
}

Matrix to_eigenbasis(const DensityMatrix& rho, const Matrix& x, const char* what) {
  if (x.rows() != static_cast<Eigen::Index>(rho.dim()) || x.cols() != x.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": operator is " + std::to_string(x.rows()) + "x" +
                    std::to_string(x.cols()) + ", state has dimension " +
                    std::to_string(rho.dim()));
  }
  const Matrix& u = rho.spectrum().eigenvectors;
  return u.adjoint() * x * u;
}

// Skew information in the eigenbasis, given the already rotated operator.
double skew_in_eigenbasis(const std::vector<double>& lambda, const Matrix& ht,
                          const MonotoneFunction& f) {
  const auto n = static_cast<Eigen::Index>(lambda.size());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double li = lambda[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;  // weight (l + l)/2 - m(l, l) is exactly zero
      const double lj = lambda[static_cast<std::size_t>(j)];
      const double weight = 0.5 * (li + lj) - mean_m(f, li, lj);
      sum += weight * std::norm(ht(i, j));
    }
  }
  return sum;
}

}  // namespace

double predictability(const DensityMatrix& rho, const MonotoneFunction& f) {
  const double n = dim_of(rho);
  return (n - diagonal_trace_mean(rho, f)) / (n - 1.0);
}

double visibility(const DensityMatrix& rho, const MonotoneFunction& f) {
  const double n = dim_of(rho);
  return (diagonal_trace_mean(rho, f) - spectral_trace_mean(rho, f)) / (n - 1.0);
}

double average_coherence(const DensityMatrix& rho, const MonotoneFunction& f) {
  const double n = dim_of(rho);
  return (n - spectral_trace_mean(rho, f)) / (n + 1.0);
}

double f_entropy(const DensityMatrix& rho, const MonotoneFunction& f) {
  dim_of(rho);
  return spectral_trace_mean(rho, f) - 1.0;
}

double skew_information(const DensityMatrix& rho, const Matrix& h, const MonotoneFunction& f) {
  const Matrix ht = to_eigenbasis(rho, h, "skew_information");
  return skew_in_eigenbasis(rho.spectrum().eigenvalues, ht, f);
}

double skew_information_commutator(const DensityMatrix& rho, const Matrix& h,
                                   const MonotoneFunction& f) {
  const Matrix ht = to_eigenbasis(rho, h, "skew_information_commutator");
  const Matrix& r = rho.matrix();
  const Matrix commutator = cplx(0.0, 1.0) * (r * h - h * r);
  const Matrix kt = to_eigenbasis(rho, commutator, "skew_information_commutator");
  const auto& lambda = rho.spectrum().eigenvalues;
  const auto n = static_cast<Eigen::Index>(lambda.size());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double li = lambda[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const double lj = lambda[static_cast<std::size_t>(j)];
      const bool pi = li > kPositive;
      const bool pj = lj > kPositive;
      if (pi && pj) {
        sum += 0.5 * f.at_zero() * mc_function(f, li, lj) * std::norm(kt(i, j));
      } else if (pi || pj) {
        sum += 0.5 * (pi ? li : lj) * std::norm(ht(i, j));
      }
    }
  }
  return sum;
}

double skew_information_sum(const DensityMatrix& rho, const MonotoneFunction& f,
                            const OperatorBasis& basis) {
  if (basis.dim != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "basis dimension " + std::to_string(basis.dim) +
                                                  " vs state dimension " +
                                                  std::to_string(rho.dim()));
  }
  double sum = 0.0;
  for (const Matrix& x : basis.elements) sum += skew_information(rho, x, f);
  return sum;
}

double quasientropy(const DensityMatrix& rho, const Matrix& a,
                    const std::function<double(double)>& g) {
  const Matrix at = to_eigenbasis(rho, a, "quasientropy");
  const auto& lambda = rho.spectrum().eigenvalues;
  const auto n = static_cast<Eigen::Index>(lambda.size());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double li = lambda[static_cast<std::size_t>(i)];
    if (li <= kPositive) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double lj = lambda[static_cast<std::size_t>(j)];
      if (lj <= kPositive) continue;
      sum += g(li / lj) * lj * std::norm(at(i, j));
    }
  }
  return sum;
}

double unified_entropy(const DensityMatrix& rho, double r, double s) {
  if (r == 1.0 || s == 0.0 || !std::isfinite(r) || !std::isfinite(s)) {
    throw Error(ErrorCode::BadParameters, "unified entropy needs r != 1, s != 0");
  }
  double power_trace = 0.0;
  for (double lambda : rho.spectrum().eigenvalues) {
    if (lambda > kPositive) power_trace += std::pow(lambda, r);
  }
  return (std::pow(power_trace, s) - 1.0) / ((1.0 - r) * s);
}

double sharma_mittal(const DensityMatrix& rho, double q, double r) {
  if (!(q > 0.0) || q == 1.0 || r == 1.0 || !std::isfinite(q) || !std::isfinite(r)) {
    throw Error(ErrorCode::BadParameters, "Sharma-Mittal entropy needs q > 0, q != 1, r != 1");
  }
  double power_sum = 0.0;
  for (double lambda : rho.spectrum().eigenvalues) {
    if (lambda > kPositive) power_sum += std::pow(lambda, q);
  }
  return (std::pow(power_sum, (1.0 - r) / (1.0 - q)) - 1.0) / (1.0 - r);
}

double h_phi_entropy(const DensityMatrix& rho, const MonotoneFunction& f) {
  const double n = dim_of(rho);
  return (spectral_trace_mean(rho, f) - 1.0) / (n - 1.0);
}

DualityReport duality_report(const DensityMatrix& rho, const MonotoneFunction& f) {
  const double n = dim_of(rho);
  const double t_diag = diagonal_trace_mean(rho, f);
  const double t_spec = spectral_trace_mean(rho, f);
  DualityReport report;
  report.dim = rho.dim();
  report.f_name = f.name();
  report.predictability = (n - t_diag) / (n - 1.0);
  report.visibility = (t_diag - t_spec) / (n - 1.0);
  report.coherence = (n - t_spec) / (n + 1.0);
  report.entropy = t_spec - 1.0;
  const double pv = report.predictability + report.visibility;
  report.residual_theorem1 = std::abs(pv - (n + 1.0) / (n - 1.0) * report.coherence);
  report.residual_theorem2 = std::abs(pv + report.entropy / (n - 1.0) - 1.0);
  return report;
}

}  // namespace wpd
