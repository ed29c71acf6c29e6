#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wpd {

/// A symmetric, normalized, regular operator monotone function f on (0, inf).
///
/// Operator monotonicity itself cannot be checked numerically. `make` only
/// screens the scalar consequences on a log-spaced grid over [1e-6, 1e6]:
/// f(1) = 1, f(x) = x f(1/x), f nondecreasing, f(0) > 0. Supplying a function
/// that is genuinely operator monotone is the caller's obligation.
class MonotoneFunction {
 public:
  using Evaluator = std::function<double(double)>;

  /// Throws InvalidFunction if any screen fails.
  static MonotoneFunction make(std::string name, Evaluator eval, double at_zero);

  const std::string& name() const { return *name_; }
  double operator()(double x) const { return (*eval_)(x); }
  double at_zero() const { return at_zero_; }

 private:
  MonotoneFunction(std::string name, Evaluator eval, double at_zero)
      : name_(std::make_shared<const std::string>(std::move(name))),
        eval_(std::make_shared<const Evaluator>(std::move(eval))),
        at_zero_(at_zero) {}

  std::shared_ptr<const std::string> name_;
  std::shared_ptr<const Evaluator> eval_;
  double at_zero_;
};

/// Wigner-Yanase, f(x) = ((1 + sqrt x)/2)^2, f(0) = 1/4.
MonotoneFunction wigner_yanase();
/// Symmetric logarithmic derivative, f(x) = (1 + x)/2, f(0) = 1/2.
MonotoneFunction sld();
/// Wigner-Yanase-Dyson family, f(x) = a(1-a)(x-1)^2 / ((x^a - 1)(x^(1-a) - 1)),
/// 0 < a < 1; a = 1/2 reproduces WY. Not a built-in CLI name.
MonotoneFunction wigner_yanase_dyson(double a);

/// "WY" or "SLD"; throws UnknownFunction otherwise.
MonotoneFunction builtin(std::string_view name);

/// Name -> function lookup, seeded with the built-ins. Extra functions can be
/// registered programmatically; each registry is an independent value.
class FunctionRegistry {
 public:
  FunctionRegistry();

  void add(MonotoneFunction f);
  MonotoneFunction get(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, MonotoneFunction, std::less<>> functions_;
};

/// f^(x) = ((x + 1) - (x - 1)^2 f(0)/f(x)) / 2. DomainError for x <= 0.
double f_hat(const MonotoneFunction& f, double x);

/// Mean m(x, y) = y f^(x/y). Symmetric, m(x, x) = x, and zero whenever either
/// argument is at or below 1e-15 (the y -> 0 limit).
double mean_m(const MonotoneFunction& f, double x, double y);

/// Morozova-Chentsov function c_f(x, y) = 1/(y f(x/y)). DomainError unless x, y > 0.
double mc_function(const MonotoneFunction& f, double x, double y);

/// sum_{i,j} m(lambda_i, lambda_j) over all ordered pairs. The spectrum must be
/// nonnegative (entries down to -1e-12 are read as zero) and sum to 1 within
/// 1e-9, else BadSpectrum. Result lies in [1, n].
double trace_mean(const MonotoneFunction& f, std::span<const double> spectrum);

}  // namespace wpd
