#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "wpd/linalg.hpp"

namespace wpd::test {

// Reference eigenvalues from Eigen's own solver, sorted descending.
inline std::vector<double> oracle_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> v(solver.eigenvalues().data(),
                        solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return a.size() == b.size() ? worst : INFINITY;
}

inline double max_abs_entry(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Oracle measures written straight from the spectral definitions, with the
// mean supplied as a plain lambda rather than through f_hat.
struct OracleMeasures {
  double P, V, C, S;
};

inline double oracle_trace_mean(const std::vector<double>& lam,
                                const std::function<double(double, double)>& mean) {
  double t = 0.0;
  for (double x : lam)
    for (double y : lam) t += (x <= 0.0 || y <= 0.0) ? 0.0 : mean(x, y);
  return t;
}

inline OracleMeasures oracle_measures(const Matrix& rho,
                                      const std::function<double(double, double)>& mean) {
  const auto n = static_cast<double>(rho.rows());
  std::vector<double> diag(static_cast<std::size_t>(rho.rows()));
  for (Eigen::Index i = 0; i < rho.rows(); ++i) diag[static_cast<std::size_t>(i)] = rho(i, i).real();
  auto spec = oracle_eigenvalues(rho);
  for (double& x : spec) x = std::max(x, 0.0);
  const double td = oracle_trace_mean(diag, mean);
  const double ts = oracle_trace_mean(spec, mean);
  return {(n - td) / (n - 1.0), (td - ts) / (n - 1.0), (n - ts) / (n + 1.0), ts - 1.0};
}

inline double wy_mean(double x, double y) { return std::sqrt(x * y); }
inline double sld_mean(double x, double y) { return 2.0 * x * y / (x + y); }

}  // namespace wpd::test
