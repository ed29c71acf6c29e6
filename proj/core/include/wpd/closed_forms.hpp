#pragma once

#include <string_view>

#include "wpd/linalg.hpp"
#include "wpd/monotone.hpp"

// Closed-form expressions for special cases, written independently of the
// generic trace-mean path so the two can be checked against each other.
namespace wpd::closed_form {

struct Measures {
  double predictability = 0.0;
  double visibility = 0.0;
  double coherence = 0.0;
  double entropy = 0.0;
};

/// Wigner-Yanase specializations in terms of tr sqrt(rho^d) and tr sqrt(rho).
double wy_predictability(const DensityMatrix& rho);
double wy_visibility(const DensityMatrix& rho);
double wy_coherence(const DensityMatrix& rho);

/// Qubit tabulation for f = "WY" or "SLD" in terms of the Bloch radius r and
/// its third component r3 (|r3| <= r <= 1). Coherence is filled from r alone.
Measures qubit_table(std::string_view f_name, double r, double r3);

/// Qubit measures for an arbitrary f, via the ratios (1 - r)/(1 + r) and
/// (1 - r3)/(1 + r3). The expressions depend on r3 only through |r3| (by the
/// symmetry of f), so |r3| is used to stay finite at r3 = -1.
Measures qubit_general(const MonotoneFunction& f, double r, double r3);

/// Two-qudit Werner state on C^n (x) C^n under WY, as a function of the
/// flip-operator weight m and the symmetric-subspace weight p. For the
/// state actually built from m, p = (1 + m)/2; other (p, m) pairs are
/// evaluated verbatim.
Measures werner_wy(int n, double p, double m);

}  // namespace wpd::closed_form
