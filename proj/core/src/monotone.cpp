#include "wpd/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wpd/error.hpp"

namespace wpd {

namespace {

constexpr double kZeroCutoff = 1e-15;
constexpr int kScreenPoints = 61;  // 10^-6 .. 10^6 in steps of 10^0.2

[[noreturn]] void reject(const std::string& name, const std::string& why) {
  throw Error(ErrorCode::InvalidFunction, "'" + name + "' " + why);
}

}  // namespace

MonotoneFunction MonotoneFunction::make(std::string name, Evaluator eval, double at_zero) {
  if (!eval) reject(name, "has no evaluator");
  if (!(at_zero > 0.0) || !std::isfinite(at_zero)) reject(name, "is not regular: f(0) <= 0");
  if (!(std::abs(eval(1.0) - 1.0) <= 1e-12)) reject(name, "is not normalized: f(1) != 1");

  double previous = 0.0;
  for (int k = 0; k < kScreenPoints; ++k) {
    const double x = std::pow(10.0, -6.0 + 12.0 * k / (kScreenPoints - 1));
    const double fx = eval(x);
    if (!(fx > 0.0) || !std::isfinite(fx)) reject(name, "is not positive and finite on (0, inf)");
    const double mirrored = x * eval(1.0 / x);
    if (!(std::abs(fx - mirrored) <= 1e-10 * std::max(1.0, fx))) {
      reject(name, "is not symmetric: f(x) != x f(1/x) at x = " + std::to_string(x));
    }
    if (k > 0 && fx < previous - 1e-12 * std::max(1.0, previous)) {
      reject(name, "is decreasing near x = " + std::to_string(x));
    }
    previous = fx;
  }
  return MonotoneFunction(std::move(name), std::move(eval), at_zero);
}

MonotoneFunction wigner_yanase() {
  return MonotoneFunction::make(
      "WY",
      [](double x) {
        const double h = 0.5 * (1.0 + std::sqrt(x));
        return h * h;
      },
      0.25);
}

MonotoneFunction sld() {
  return MonotoneFunction::make("SLD", [](double x) { return 0.5 * (1.0 + x); }, 0.5);
}

MonotoneFunction wigner_yanase_dyson(double a) {
  if (!(a > 0.0 && a < 1.0)) throw Error(ErrorCode::BadParameters, "WYD needs 0 < a < 1");
  auto eval = [a](double x) {
    if (x == 1.0) return 1.0;
    const double log_x = std::log(x);
    const double num = a * (1.0 - a) * (x - 1.0) * (x - 1.0);
    return num / (std::expm1(a * log_x) * std::expm1((1.0 - a) * log_x));
  };
  return MonotoneFunction::make("WYD(" + std::to_string(a) + ")", eval, a * (1.0 - a));
}

MonotoneFunction builtin(std::string_view name) {
  if (name == "WY") return wigner_yanase();
  if (name == "SLD") return sld();
  throw Error(ErrorCode::UnknownFunction, "no built-in function named '" + std::string(name) + "'");
}

FunctionRegistry::FunctionRegistry() {
  add(wigner_yanase());
  add(sld());
}

void FunctionRegistry::add(MonotoneFunction f) {
  const std::string key = f.name();
  functions_.insert_or_assign(key, std::move(f));
}

MonotoneFunction FunctionRegistry::get(std::string_view name) const {
  if (auto it = functions_.find(name); it != functions_.end()) return it->second;
  throw Error(ErrorCode::UnknownFunction, "no function registered as '" + std::string(name) + "'");
}

bool FunctionRegistry::contains(std::string_view name) const {
  return functions_.find(name) != functions_.end();
}

std::vector<std::string> FunctionRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [key, f] : functions_) out.push_back(key);
  return out;
}

double f_hat(const MonotoneFunction& f, double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::DomainError, "f_hat needs x > 0");
  if (x == 1.0) return 1.0;
  return 0.5 * ((x + 1.0) - (x - 1.0) * (x - 1.0) * f.at_zero() / f(x));
}

double mean_m(const MonotoneFunction& f, double x, double y) {
  if (x <= kZeroCutoff || y <= kZeroCutoff) return 0.0;
  if (x == y) return x;
  // Evaluate with the ratio in (0, 1) so that m is exactly symmetric.
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  const double d = hi - lo;
  return 0.5 * (lo + hi) - 0.5 * f.at_zero() * d * d / (hi * f(lo / hi));
}

double mc_function(const MonotoneFunction& f, double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw Error(ErrorCode::DomainError, "c_f needs x, y > 0");
  return 1.0 / (y * f(x / y));
}

double trace_mean(const MonotoneFunction& f, std::span<const double> spectrum) {
  if (spectrum.empty()) throw Error(ErrorCode::BadSpectrum, "empty spectrum");
  double total = 0.0;
  for (double lambda : spectrum) {
    if (!(lambda >= -1e-12) || !std::isfinite(lambda)) {
      throw Error(ErrorCode::BadSpectrum, "negative or non-finite entry " + std::to_string(lambda));
    }
    total += lambda;
  }
  if (!(std::abs(total - 1.0) <= 1e-9)) {
    throw Error(ErrorCode::BadSpectrum, "entries sum to " + std::to_string(total));
  }
  double sum = 0.0;
  for (double li : spectrum) {
    for (double lj : spectrum) sum += mean_m(f, li, lj);
  }
  return sum;
}

}  // namespace wpd
