#include "wpd/closed_forms.hpp"

#include <cmath>
#include <string>

#include "wpd/error.hpp"

namespace wpd::closed_form {

namespace {

// Values at or below 1e-15 are read as zero, matching the support convention
// of mean_m; otherwise sqrt would lift eigensolver roundoff (~1e-16) to 1e-8.
double sum_sqrt(const std::vector<double>& values) {
  double s = 0.0;
  for (double v : values) {
    if (v > 1e-15) s += std::sqrt(v);
  }
  return s;
}

}  // namespace

double wy_predictability(const DensityMatrix& rho) {
  const double n = static_cast<double>(rho.dim());
  const double d = sum_sqrt(rho.diagonal_entries());
  return (n - d * d) / (n - 1.0);
}

double wy_visibility(const DensityMatrix& rho) {
  const double n = static_cast<double>(rho.dim());
  const double d = sum_sqrt(rho.diagonal_entries());
  const double s = sum_sqrt(rho.spectrum().eigenvalues);
  return (d * d - s * s) / (n - 1.0);
}

double wy_coherence(const DensityMatrix& rho) {
  const double n = static_cast<double>(rho.dim());
  const double s = sum_sqrt(rho.spectrum().eigenvalues);
  return (n - s * s) / (n + 1.0);
}

Measures qubit_table(std::string_view f_name, double r, double r3) {
  Measures out;
  if (f_name == "WY") {
    const double a = std::sqrt(std::max(0.0, 1.0 - r3 * r3));
    const double b = std::sqrt(std::max(0.0, 1.0 - r * r));
    out.predictability = 1.0 - a;
    out.visibility = a - b;
    out.entropy = b;
  } else if (f_name == "SLD") {
    out.predictability = r3 * r3;
    out.visibility = r * r - r3 * r3;
    out.entropy = 1.0 - r * r;
  } else {
    throw Error(ErrorCode::UnknownFunction, "no qubit table for '" + std::string(f_name) + "'");
  }
  out.coherence = (1.0 - out.entropy) / 3.0;
  return out;
}

Measures qubit_general(const MonotoneFunction& f, double r, double r3) {
  const auto term = [&f](double x) {
    x = std::abs(x);
    return 2.0 * x * x * f.at_zero() / ((1.0 + x) * f((1.0 - x) / (1.0 + x)));
  };
  const double full = term(r);
  const double diag = term(r3);
  Measures out;
  out.coherence = full / 3.0;
  out.visibility = full - diag;
  out.predictability = diag;
  out.entropy = 1.0 - full;
  return out;
}

Measures werner_wy(int n, double p, double m) {
  if (n < 2) throw Error(ErrorCode::BadParameters, "Werner needs n >= 2");
  const double nn = static_cast<double>(n);
  const double n2 = nn * nn;
  const double spec = std::sqrt(p * (n2 + nn)) + std::sqrt((1.0 - p) * (n2 - nn));
  const double spec2 = spec * spec;
  const double diag = std::sqrt((nn - 1.0) * (nn - m)) + std::sqrt(m + 1.0);
  const double diag2 = diag * diag;
  Measures out;
  out.coherence = (2.0 * n2 - spec2) / (2.0 * (n2 + 1.0));
  out.visibility = nn * diag2 / ((nn + 1.0) * (n2 - 1.0)) - spec2 / (2.0 * (n2 - 1.0));
  out.predictability = nn / (n2 - 1.0) * (nn - diag2 / (nn + 1.0));
  out.entropy = 0.5 * spec2 - 1.0;
  return out;
}

}  // namespace wpd::closed_form
