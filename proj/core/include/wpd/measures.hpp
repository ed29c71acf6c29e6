#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "wpd/linalg.hpp"
#include "wpd/monotone.hpp"

namespace wpd {

// All measures below are computed from spectra: the diagonal of rho (the
// spectrum of its dephasing) and the eigenvalues of rho itself. n >= 2.

/// (n - T(diag rho)) / (n - 1), where T is trace_mean.
double predictability(const DensityMatrix& rho, const MonotoneFunction& f);

/// (T(diag rho) - T(spec rho)) / (n - 1).
double visibility(const DensityMatrix& rho, const MonotoneFunction& f);

/// (n - T(spec rho)) / (n + 1).
double average_coherence(const DensityMatrix& rho, const MonotoneFunction& f);

/// Quantum f entropy T(spec rho) - 1, in [0, n - 1].
double f_entropy(const DensityMatrix& rho, const MonotoneFunction& f);

/// Metric-adjusted skew information, evaluated in the eigenbasis of rho as
/// sum_{ij} ((l_i + l_j)/2 - m(l_i, l_j)) |(U^H H U)_ij|^2. H need not be Hermitian.
double skew_information(const DensityMatrix& rho, const Matrix& h, const MonotoneFunction& f);

/// The same quantity via the commutator and the Morozova-Chentsov kernel:
/// (f(0)/2) sum_{ij} c_f(l_i, l_j) |(U^H i[rho, H] U)_ij|^2 over pairs of
/// positive eigenvalues. Pairs with one zero eigenvalue l_j = 0 contribute
/// (l_i/2)|H~_ij|^2 (their limit); pairs of zeros contribute nothing.
double skew_information_commutator(const DensityMatrix& rho, const Matrix& h,
                                   const MonotoneFunction& f);

/// sum_alpha I_f(rho, X_alpha) over an orthonormal operator basis.
double skew_information_sum(const DensityMatrix& rho, const MonotoneFunction& f,
                            const OperatorBasis& basis);

/// Petz quasientropy <A rho^1/2, g(Delta)(A rho^1/2)> with Delta(X) = rho X rho^-1,
/// i.e. sum_{ij} g(l_i/l_j) l_j |(U^H A U)_ij|^2 over pairs with l_i, l_j > 0.
double quasientropy(const DensityMatrix& rho, const Matrix& a,
                    const std::function<double(double)>& g);

/// Unified-(r, s) entropy ((tr rho^r)^s - 1)/((1 - r) s); r != 1, s != 0.
/// tr rho^r runs over the support of rho.
double unified_entropy(const DensityMatrix& rho, double r, double s);

/// Sharma-Mittal entropy ((sum l^q)^((1-r)/(1-q)) - 1)/(1 - r); q > 0, q != 1, r != 1.
double sharma_mittal(const DensityMatrix& rho, double q, double r);

/// (h, phi) entropy with h(x) = (x - 1)/(n - 1) and phi the trace mean: S_f/(n - 1).
double h_phi_entropy(const DensityMatrix& rho, const MonotoneFunction& f);

struct DualityReport {
  std::size_t dim = 0;
  std::string f_name;
  double predictability = 0.0;
  double visibility = 0.0;
  double coherence = 0.0;
  double entropy = 0.0;
  double residual_theorem1 = 0.0;  // |P + V - (n+1)/(n-1) C|
  double residual_theorem2 = 0.0;  // |P + V + S/(n-1) - 1|
};

DualityReport duality_report(const DensityMatrix& rho, const MonotoneFunction& f);

}  // namespace wpd
