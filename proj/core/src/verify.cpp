#include "wpd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>
#include <string_view>

#include "wpd/closed_forms.hpp"
#include "wpd/error.hpp"
#include "wpd/measures.hpp"
#include "wpd/rng.hpp"
#include "wpd/states.hpp"

namespace wpd {

// ---------------------------------------------------------------------------
// Config and report plumbing

void SuiteConfig::validate() const {
  if (dims.empty()) throw Error(ErrorCode::BadConfig, "no dimensions given");
  for (auto n : dims) {
    if (n < 2) throw Error(ErrorCode::BadConfig, "dimensions must be >= 2");
  }
  if (samples_per_dim < 1) throw Error(ErrorCode::BadConfig, "need at least one sample");
  if (f_names.empty()) throw Error(ErrorCode::BadConfig, "no functions given");
  if (!(tolerance_identity > 0.0) || !(tolerance_inequality_slack > 0.0)) {
    throw Error(ErrorCode::BadConfig, "tolerances must be positive");
  }
}

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  std::size_t total = 0;
  for (const auto& r : records) total += r.failures;
  return total;
}

const CheckRecord* SuiteReport::find(const std::string& name) const {
  for (const auto& r : records) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

void SuiteReport::append(SuiteReport other) {
  records.insert(records.end(), std::make_move_iterator(other.records.begin()),
                 std::make_move_iterator(other.records.end()));
}

void SuiteReport::sort() {
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : report.records) {
    checks.push_back({{"name", r.name},
                      {"anchor", r.anchor},
                      {"cases", r.cases},
                      {"failures", r.failures},
                      {"worst_residual", std::isfinite(r.worst_residual)
                                             ? nlohmann::json(r.worst_residual)
                                             : nlohmann::json(nullptr)},
                      {"worst_case", r.worst_case},
                      {"passed", r.passed()}});
  }
  return {{"passed", report.passed()}, {"failures", report.failures()}, {"checks", checks}};
}

std::string to_table(const SuiteReport& report) {
  std::size_t width = 5;
  for (const auto& r : report.records) width = std::max(width, r.name.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "check"
      << "  result  " << std::right << std::setw(7) << "cases" << std::setw(9) << "failures"
      << "  " << std::setw(12) << "worst" << "  relation\n";
  for (const auto& r : report.records) {
    out << std::left << std::setw(static_cast<int>(width)) << r.name << "  "
        << (r.passed() ? "PASS  " : "FAIL  ") << "  " << std::right << std::setw(7) << r.cases
        << std::setw(9) << r.failures << "  " << std::setw(12) << std::setprecision(3)
        << std::scientific << r.worst_residual << std::defaultfloat << "  " << r.anchor;
    if (!r.passed()) out << "  [worst at " << r.worst_case << "]";
    out << '\n';
  }
  out << (report.passed() ? "OVERALL PASS" : "OVERALL FAIL") << " (" << report.records.size()
      << " checks, " << report.failures() << " failing cases)\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Per-state checks

double check_triality(const DensityMatrix& rho, const MonotoneFunction& f) {
  return duality_report(rho, f).residual_theorem2;
}

double check_theorem1(const DensityMatrix& rho, const MonotoneFunction& f) {
  return duality_report(rho, f).residual_theorem1;
}

CorollaryResult check_corollary(const DensityMatrix& rho, const MonotoneFunction& f,
                                double slack) {
  const auto r = duality_report(rho, f);
  const double margin = 1.0 - (r.predictability + r.visibility);
  return {margin >= -slack, margin};
}

namespace {

enum class Worst { Max, Min };

// Accumulates one CheckRecord. Each case reports a residual and a verdict;
// library errors raised while evaluating a case count as failures.
class Check {
 public:
  Check(std::string name, std::string anchor, Worst worst = Worst::Max)
      : worst_(worst) {
    record_.name = std::move(name);
    record_.anchor = std::move(anchor);
    record_.worst_residual = worst == Worst::Max ? 0.0 : std::numeric_limits<double>::infinity();
  }

  void observe(double residual, bool ok, const std::string& where) {
    ++record_.cases;
    if (!ok) ++record_.failures;
    const bool is_worse = std::isnan(residual) ||
                          (worst_ == Worst::Max ? residual > record_.worst_residual
                                                : residual < record_.worst_residual);
    if (!std::isnan(record_.worst_residual) && (is_worse || record_.cases == 1)) {
      record_.worst_residual = residual;
      record_.worst_case = where;
    }
  }

  // residual <= tolerance
  void within(double residual, double tolerance, const std::string& where) {
    observe(residual, residual <= tolerance, where);
  }

  template <class Fn>
  void guard(const std::string& where, Fn&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      observe(std::numeric_limits<double>::infinity(), false, where + " (" + e.what() + ")");
    }
  }

  CheckRecord done() && {
    if (record_.cases == 0) record_.worst_residual = 0.0;
    return std::move(record_);
  }

 private:
  CheckRecord record_;
  Worst worst_;
};

std::uint64_t stream_id(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Per-(check, dimension, sample) seeds so that every check sees its own stream.
struct Seeds {
  std::uint64_t base;
  std::uint64_t operator()(std::string_view stream, std::size_t n, std::size_t k) const {
    return mix_seed(base, stream_id(stream), (static_cast<std::uint64_t>(n) << 32) | k);
  }
};

std::string spec_text(StateKind kind, std::size_t n, std::uint64_t seed) {
  StateSpec s;
  s.kind = kind;
  s.dim = n;
  s.seed = seed;
  return to_string(s);
}

std::string tagged(std::string_view base, const MonotoneFunction& f) {
  return std::string(base) + "[" + f.name() + "]";
}

std::vector<std::size_t> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform() * static_cast<double>(i));
    std::swap(perm[i - 1], perm[std::min(j, i - 1)]);
  }
  return perm;
}

DensityMatrix conjugate(const DensityMatrix& rho, const Matrix& u) {
  return DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double lambda) {
  return DensityMatrix::from_matrix((1.0 - lambda) * a.matrix() + lambda * b.matrix());
}

double max_offdiagonal(const DensityMatrix& rho) {
  double worst = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j)
      if (i != j) worst = std::max(worst, std::abs(rho(i, j)));
  return worst;
}

double max_diag_deviation(const DensityMatrix& rho) {
  const double uniform = 1.0 / static_cast<double>(rho.dim());
  double worst = 0.0;
  for (double d : rho.diagonal_entries()) worst = std::max(worst, std::abs(d - uniform));
  return worst;
}

constexpr double kSeparation = 1e-6;  // measure must clear this ...
constexpr double kViolation = 1e-3;   // ... once the defining condition is off by this much
constexpr double kTight = 1e-10;      // tolerance for closed forms and invariances

// The ensembles used for convexity: a random state paired with either another
// random state or a random pure one, so both interior and boundary pairs occur.
std::pair<DensityMatrix, DensityMatrix> random_pair(const Seeds& seeds, std::string_view stream,
                                                    std::size_t n, std::size_t k,
                                                    std::string& where) {
  const auto s1 = seeds(stream, n, 2 * k);
  const auto s2 = seeds(stream, n, 2 * k + 1);
  const bool second_pure = (k % 2) == 1;
  where = spec_text(StateKind::RandomMixed, n, s1) + " & " +
          spec_text(second_pure ? StateKind::RandomPure : StateKind::RandomMixed, n, s2);
  return {random_mixed(n, s1), second_pure ? random_pure(n, s2) : random_mixed(n, s2)};
}

using Measure = double (*)(const DensityMatrix&, const MonotoneFunction&);

void convexity(Check& check, Measure measure, const MonotoneFunction& f,
               const SuiteConfig& config, const Seeds& seeds, std::string_view stream,
               bool concave) {
  for (auto n : config.dims) {
    for (std::size_t k = 0; k < config.samples_per_dim; ++k) {
      std::string where;
      check.guard("dim " + std::to_string(n), [&] {
        auto [a, b] = random_pair(seeds, stream, n, k, where);
        const double va = measure(a, f);
        const double vb = measure(b, f);
        for (int step = 0; step <= 10; ++step) {
          const double lambda = step / 10.0;
          const double mixed = measure(mix(a, b, lambda), f);
          const double chord = (1.0 - lambda) * va + lambda * vb;
          const double excess = concave ? chord - mixed : mixed - chord;
          check.observe(excess, excess <= config.tolerance_inequality_slack,
                        where + " lambda=" + std::to_string(lambda));
        }
      });
    }
  }
}

void permutation_invariance(Check& check, Measure measure, const MonotoneFunction& f,
                            const SuiteConfig& config, const Seeds& seeds,
                            std::string_view stream) {
  const double tol = std::min(config.tolerance_identity, kTight);
  for (auto n : config.dims) {
    for (std::size_t k = 0; k < config.samples_per_dim; ++k) {
      const auto seed = seeds(stream, n, k);
      const std::string where = spec_text(StateKind::RandomMixed, n, seed);
      check.guard(where, [&] {
        const auto rho = random_mixed(n, seed);
        const auto perm = random_permutation(n, seeds(stream, n, k + (1u << 20)));
        const auto permuted = conjugate(rho, permutation_matrix(perm));
        check.within(std::abs(measure(permuted, f) - measure(rho, f)), tol, where);
      });
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Predictability axioms

SuiteReport check_predictability_axioms(const MonotoneFunction& f, const SuiteConfig& config) {
  config.validate();
  const Seeds seeds{config.seed};
  const double tol = config.tolerance_identity;
  SuiteReport report;

  Check certain(tagged("predictability.1a.certain", f), "rho_ii = 1 for some i => P = 1");
  Check uncertain(tagged("predictability.1a.converse", f),
                  "max rho_ii < 1 - 1e-3 => P < 1 - 1e-6", Worst::Max);
  Check uniform(tagged("predictability.2a.uniform", f), "rho_ii = 1/n for all i => P = 0");
  Check nonuniform(tagged("predictability.2a.converse", f),
                   "max |rho_ii - 1/n| > 1e-3 => P > 1e-6", Worst::Min);
  for (auto n : config.dims) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::string where = "named:basis,dim=" + std::to_string(n) + ",index=" +
                                std::to_string(i);
      certain.guard(where, [&] {
        certain.within(std::abs(predictability(named_state("basis", n, i), f) - 1.0), tol, where);
      });
    }
    const std::string mm = "named:maximally-mixed,dim=" + std::to_string(n);
    uniform.guard(mm, [&] {
      uniform.within(std::abs(predictability(named_state("maximally-mixed", n), f)), tol, mm);
    });
    for (std::size_t k = 0; k < config.samples_per_dim; ++k) {
      const auto seed = seeds("predictability.uniform", n, k);
      const std::string where = "random maximally coherent dim=" + std::to_string(n) +
                                " seed=" + std::to_string(seed);
      uniform.guard(where, [&] {
        uniform.within(std::abs(predictability(random_maximally_coherent(n, seed), f)), tol,
                       where);
      });

      const auto rseed = seeds("predictability.converse", n, k);
      const std::string rwhere = spec_text(StateKind::RandomMixed, n, rseed);
      uncertain.guard(rwhere, [&] {
        const auto rho = random_mixed(n, rseed);
        const auto diag = rho.diagonal_entries();
        const double p = predictability(rho, f);
        if (*std::max_element(diag.begin(), diag.end()) < 1.0 - kViolation) {
          uncertain.observe(p, p < 1.0 - kSeparation, rwhere);
        }
        if (max_diag_deviation(rho) > kViolation) {
          nonuniform.observe(p, p > kSeparation, rwhere);
        }
      });
    }
  }
  report.records.push_back(std::move(certain).done());
  report.records.push_back(std::move(uncertain).done());
  report.records.push_back(std::move(uniform).done());
  report.records.push_back(std::move(nonuniform).done());

  Check perm(tagged("predictability.3a.permutation", f), "P(Q rho Q^T) = P(rho), Q permutation");
  permutation_invariance(perm, &predictability, f, config, seeds, "predictability.permutation");
  report.records.push_back(std::move(perm).done());

  Check convex(tagged("predictability.4a.convexity", f),
               "P((1-l) rho1 + l rho2) <= (1-l) P(rho1) + l P(rho2)");
  convexity(convex, &predictability, f, config, seeds, "predictability.convexity", false);
  report.records.push_back(std::move(convex).done());
  return report;
}

// ---------------------------------------------------------------------------
// Visibility axioms

namespace {

double cross_block_sum(const MonotoneFunction& f, const std::vector<double>& a, double pa,
                       const std::vector<double>& b, double pb) {
  double sum = 0.0;
  for (double x : a)
    for (double y : b) sum += mean_m(f, pa * x, pb * y);
  return sum;
}

}  // namespace

SuiteReport check_visibility_axioms(const MonotoneFunction& f, const SuiteConfig& config) {
  config.validate();
  const Seeds seeds{config.seed};
  const double tol = config.tolerance_identity;
  SuiteReport report;

  Check incoherent(tagged("visibility.1b.incoherent", f), "rho = rho^d => V = 0");
  Check coherent(tagged("visibility.1b.converse", f),
                 "max |rho_ij| (i != j) > 1e-3 => V > 1e-6", Worst::Min);
  Check maximal(tagged("visibility.2b.maximal", f),
                "rho = sum_jk e^{i(t_j - t_k)} |j><k| / n => V = 1");
  Check submaximal(tagged("visibility.2b.converse", f),
                   "rho not pure with uniform diagonal => V < 1 - 1e-6");
  Check dephasing(tagged("measurement.dephasing", f),
                  "P(rho^d) = P(rho) exactly and V(rho^d) = 0");

  for (auto n : config.dims) {
    for (std::size_t k = 0; k < config.samples_per_dim; ++k) {
      const auto seed = seeds("visibility.random", n, k);
      const std::string where = spec_text(StateKind::RandomMixed, n, seed);
      incoherent.guard(where, [&] {
        const auto rho = random_mixed(n, seed);
        const auto deph = dephase(rho);
        incoherent.within(std::abs(visibility(deph, f)), tol, "dephased " + where);
        const bool same_p = predictability(deph, f) == predictability(rho, f);
        const double v = std::abs(visibility(deph, f));
        dephasing.observe(same_p ? v : std::numeric_limits<double>::infinity(),
                          same_p && v <= tol, where);
        const double v_rho = visibility(rho, f);
        if (max_offdiagonal(rho) > kViolation) {
          coherent.observe(v_rho, v_rho > kSeparation, where);
        }
        submaximal.observe(v_rho, v_rho < 1.0 - kSeparation, where);
      });

      const auto cseed = seeds("visibility.maximal", n, k);
      const std::string cwhere = "random maximally coherent dim=" + std::to_string(n) +
                                 " seed=" + std::to_string(cseed);
      maximal.guard(cwhere, [&] {
        maximal.within(std::abs(visibility(random_maximally_coherent(n, cseed), f) - 1.0), tol,
                       cwhere);
      });

      const auto pseed = seeds("visibility.pure", n, k);
      const std::string pwhere = spec_text(StateKind::RandomPure, n, pseed);
      submaximal.guard(pwhere, [&] {
        const auto rho = random_pure(n, pseed);
        if (max_diag_deviation(rho) > kViolation) {
          const double v = visibility(rho, f);
          submaximal.observe(v, v < 1.0 - kSeparation, pwhere);
        }
      });
    }
  }
  report.records.push_back(std::move(incoherent).done());
  report.records.push_back(std::move(coherent).done());
  report.records.push_back(std::move(maximal).done());
  report.records.push_back(std::move(submaximal).done());
  report.records.push_back(std::move(dephasing).done());

  Check perm(tagged("visibility.3b.permutation", f), "V(Q rho Q^T) = V(rho), Q permutation");
  permutation_invariance(perm, &visibility, f, config, seeds, "visibility.permutation");
  report.records.push_back(std::move(perm).done());

  Check convex(tagged("visibility.4b.convexity", f),
               "V((1-l) rho1 + l rho2) <= (1-l) V(rho1) + l V(rho2)");
  convexity(convex, &visibility, f, config, seeds, "visibility.convexity", false);
  report.records.push_back(std::move(convex).done());

  // Direct sum p1 rho1 (+) p2 rho2 of two n-dimensional states. The first
  // record is the relation as usually stated, which keeps only the pairs of
  // eigenvalues inside each block; the second adds the cross-block pairs that
  // the trace of m(L, R) also contains.
  Check direct(tagged("visibility.direct_sum", f),
               "V(p1 rho1 (+) p2 rho2) = (n-1)/(2n-1) (p1 V(rho1) + p2 V(rho2))");
  Check cross(tagged("visibility.direct_sum_with_cross_terms", f),
              "(2n-1) V(p1 rho1 (+) p2 rho2) = (n-1)(p1 V1 + p2 V2) + 2 [X(diag) - X(spec)], "
              "X = sum_ik m(p1 a_i, p2 b_k)");
  for (auto n : config.dims) {
    const double nn = static_cast<double>(n);
    for (std::size_t k = 0; k < config.samples_per_dim; ++k) {
      const auto s1 = seeds("visibility.direct_sum", n, 3 * k);
      const auto s2 = seeds("visibility.direct_sum", n, 3 * k + 1);
      const double p1 = Rng(seeds("visibility.direct_sum", n, 3 * k + 2)).uniform();
      const double p2 = 1.0 - p1;
      const std::string where = spec_text(StateKind::RandomMixed, n, s1) + " (+) " +
                                spec_text(StateKind::RandomMixed, n, s2) +
                                " p1=" + std::to_string(p1);
      direct.guard(where, [&] {
        const auto r1 = random_mixed(n, s1);
        const auto r2 = random_mixed(n, s2);
        const auto block =
            DensityMatrix::from_matrix(direct_sum(p1 * r1.matrix(), p2 * r2.matrix()));
        const double v_block = visibility(block, f);
        const double v1 = visibility(r1, f);
        const double v2 = visibility(r2, f);
        direct.within(std::abs(v_block - (nn - 1.0) / (2.0 * nn - 1.0) * (p1 * v1 + p2 * v2)),
                      tol, where);
        const double x_diag =
            cross_block_sum(f, r1.diagonal_entries(), p1, r2.diagonal_entries(), p2);
        const double x_spec = cross_block_sum(f, r1.spectrum().eigenvalues, p1,
                                              r2.spectrum().eigenvalues, p2);
        const double rhs = (nn - 1.0) * (p1 * v1 + p2 * v2) + 2.0 * (x_diag - x_spec);
        cross.within(std::abs((2.0 * nn - 1.0) * v_block - rhs), tol, where);
      });
    }
  }
  report.records.push_back(std::move(direct).done());
  report.records.push_back(std::move(cross).done());
  return report;
}

// ---------------------------------------------------------------------------
// Entropy properties

SuiteReport check_entropy_properties(const MonotoneFunction& f, const SuiteConfig& config) {
  config.validate();
  const Seeds seeds{config.seed};
  const double tol = config.tolerance_identity;
  const double slack = config.tolerance_inequality_slack;
  SuiteReport report;

  Check nonneg(tagged("entropy.i.nonnegative", f), "S_f(rho) >= 0", Worst::Min);
  Check pure_zero(tagged("entropy.i.pure", f), "rho pure => S_f = 0");
  Check mixed_pos(tagged("entropy.i.converse", f), "tr rho^2 < 1 - 1e-3 => S_f > 1e-6",
                  Worst::Min);
  Check maximum(tagged("entropy.ii.maximum", f), "S_f(I/n) = n - 1");
  Check below_max(tagged("entropy.ii.converse", f),
                  "max |rho - I/n| > 1e-3 => S_f < n - 1 - 1e-6", Worst::Min);
  Check unitary(tagged("entropy.v.unitary", f), "S_f(U rho U^H) = S_f(rho)");
  Check tensor_id(tagged("entropy.vi.tensor", f),
                  "S_f(rho (x) I/n) = S_f(I/n (x) rho) = n S_f(rho) + S_f(I/n)");

  for (auto n : config.dims) {
    const double nn = static_cast<double>(n);
    const std::string mm = "named:maximally-mixed,dim=" + std::to_string(n);
    maximum.guard(mm, [&] {
      maximum.within(std::abs(f_entropy(named_state("maximally-mixed", n), f) - (nn - 1.0)),
                     tol, mm);
    });
    const auto mixed_state = named_state("maximally-mixed", n);
    const double s_mixed = f_entropy(mixed_state, f);

    for (std::size_t k = 0; k < config.samples_per_dim; ++k) {
      const auto seed = seeds("entropy.random", n, k);
      const std::string where = spec_text(StateKind::RandomMixed, n, seed);
      nonneg.guard(where, [&] {
        const auto rho = random_mixed(n, seed);
        const double s = f_entropy(rho, f);
        nonneg.observe(s, s >= -slack, where);
        const double purity = (rho.matrix() * rho.matrix()).trace().real();
        if (purity < 1.0 - kViolation) mixed_pos.observe(s, s > kSeparation, where);
        const double dist = (rho.matrix() - mixed_state.matrix()).cwiseAbs().maxCoeff();
        if (dist > kViolation) {
          const double gap = (nn - 1.0) - s;
          below_max.observe(gap, gap > kSeparation, where);
        }

        const auto u = random_unitary(n, seeds("entropy.unitary", n, k));
        unitary.within(std::abs(f_entropy(conjugate(rho, u), f) - s), tol, where);

        const double expected = nn * s + s_mixed;
        const double left = f_entropy(tensor(rho, mixed_state), f);
        const double right = f_entropy(tensor(mixed_state, rho), f);
        tensor_id.within(std::max(std::abs(left - expected), std::abs(right - expected)), tol,
                         where);
      });

      const auto pseed = seeds("entropy.pure", n, k);
      const std::string pwhere = spec_text(StateKind::RandomPure, n, pseed);
      pure_zero.guard(pwhere, [&] {
        pure_zero.within(std::abs(f_entropy(random_pure(n, pseed), f)), tol, pwhere);
      });
    }
  }

  Check marginals(tagged("entropy.iii.marginals", f),
                  "|psi> on AB pure => S_f(tr_B psi) = S_f(tr_A psi)");
  for (auto n : config.dims) {
    for (auto [da, db] : {std::pair<std::size_t, std::size_t>{2, n}, {n, 3}}) {
      for (std::size_t k = 0; k < config.samples_per_dim; ++k) {
        const auto seed = seeds("entropy.marginals", da * 100 + db, k);
        const std::string where = spec_text(StateKind::RandomPure, da * db, seed) + " as " +
                                  std::to_string(da) + "x" + std::to_string(db);
        marginals.guard(where, [&] {
          const auto psi = random_pure(da * db, seed);
          const auto ra = partial_trace(psi, da, db, Subsystem::A);
          const auto rb = partial_trace(psi, da, db, Subsystem::B);
          marginals.within(std::abs(f_entropy(ra, f) - f_entropy(rb, f)), tol, where);
        });
      }
    }
  }

  Check concave(tagged("entropy.iv.concavity", f),
                "S_f((1-l) rho1 + l rho2) >= (1-l) S_f(rho1) + l S_f(rho2)");
  convexity(concave, &f_entropy, f, config, seeds, "entropy.concavity", true);

  Check cq(tagged("entropy.vii.classical_quantum", f),
           "S_f(sum_j p_j |j><j| (x) rho_j) >= sum_j p_j S_f(rho_j)");
  for (auto n : config.dims) {
    for (std::size_t k = 0; k < config.samples_per_dim; ++k) {
      const std::size_t parts = 2 + k % 2;
      const auto base = seeds("entropy.cq", n, k);
      const std::string where = "dim=" + std::to_string(n) + " parts=" + std::to_string(parts) +
                                " seed=" + std::to_string(base);
      cq.guard(where, [&] {
        Rng rng(base);
        std::vector<double> p(parts);
        double total = 0.0;
        for (double& x : p) total += (x = rng.uniform() + 1e-3);
        const auto dn = static_cast<Eigen::Index>(n);
        const auto dp = static_cast<Eigen::Index>(parts);
        Matrix joint = Matrix::Zero(dn * dp, dn * dp);
        double lower = 0.0;
        for (std::size_t j = 0; j < parts; ++j) {
          p[j] /= total;
          const auto rho_j = (j % 2 == 0) ? random_mixed(n, mix_seed(base, j))
                                          : random_pure(n, mix_seed(base, j));
          joint.block(static_cast<Eigen::Index>(j) * dn, static_cast<Eigen::Index>(j) * dn, dn,
                      dn) = p[j] * rho_j.matrix();
          lower += p[j] * f_entropy(rho_j, f);
        }
        const double excess = lower - f_entropy(DensityMatrix::from_matrix(joint), f);
        cq.observe(excess, excess <= slack, where);
      });
    }
  }

  for (auto* c : {&nonneg, &pure_zero, &mixed_pos, &maximum, &below_max, &marginals, &concave,
                  &unitary, &tensor_id, &cq}) {
    report.records.push_back(std::move(*c).done());
  }
  return report;
}

// ---------------------------------------------------------------------------
// Identities among P, V, C, S and their skew-information forms

SuiteReport check_relations(const MonotoneFunction& f, const SuiteConfig& config) {
  config.validate();
  const Seeds seeds{config.seed};
  const double tol = config.tolerance_identity;
  const double tight = std::min(tol, kTight);
  SuiteReport report;
  const bool is_wy = f.name() == "WY";

  Check triality(tagged("theorem.triality", f), "P + V + S_f/(n-1) = 1");
  Check coherence(tagged("theorem.coherence", f), "P + V = (n+1)/(n-1) C_f");
  Check bound(tagged("corollary.bound", f), "P + V <= 1");
  Check margin(tagged("corollary.margin", f), "1 - (P + V) = S_f/(n-1)");
  Check h_phi(tagged("bridge.h_phi", f), "P + V + H_(h,phi) = 1, h(x) = (x-1)/(n-1)");
  Check skew_sum(tagged("skew.basis_sum", f), "sum_a I_f(rho, X_a) = (n-1)(P + V) = n - T");
  Check basis_free(tagged("skew.basis_independence", f),
                   "sum_a I_f(rho, X_a) equal for matrix-unit and Hermitian bases");
  Check commutator(tagged("skew.commutator_form", f),
                   "(f(0)/2) tr(i[rho,H] c_f(L,R) i[rho,H]) = tr(rho H^2) - tr(H m(L,R) H)");
  Check quasi(tagged("quasi.reconstruction", f), "sum_a S^{X_a}_{f^}(rho|rho) - 1 = S_f");
  Check quasi_rel(tagged("quasi.relation", f),
                  "P + V + (1/(n-1)) sum_a S^{X_a}_{f^}(rho|rho) = n/(n-1)");
  Check wy(tagged("wy.closed_forms", f),
           "P, V, C equal (n - (tr sqrt rho^d)^2)/(n-1), ((tr sqrt rho^d)^2 - (tr sqrt rho)^2)/"
           "(n-1), (n - (tr sqrt rho)^2)/(n+1)");
  Check unified(tagged("bridge.unified_qubit", f), "qubits: P + V + S_{1/2}^2 = 1");
  Check sharma(tagged("bridge.sharma_mittal_qubit", f), "qubits: S_{1/2}^2 = H_{1/2,0}");

  const auto g = [&f](double x) { return f_hat(f, x); };

  for (auto n : config.dims) {
    const double nn = static_cast<double>(n);
    const auto units = operator_basis(n, BasisKind::MatrixUnits);
    const auto herm = operator_basis(n, BasisKind::Hermitian);

    std::vector<std::pair<std::string, std::function<DensityMatrix()>>> states;
    for (std::size_t k = 0; k < config.samples_per_dim; ++k) {
      const auto seed = seeds("relations.random", n, k);
      states.emplace_back(spec_text(StateKind::RandomMixed, n, seed),
                          [n, seed] { return random_mixed(n, seed); });
    }
    for (std::size_t k = 0; k < std::max<std::size_t>(1, config.samples_per_dim / 4); ++k) {
      const auto seed = seeds("relations.pure", n, k);
      states.emplace_back(spec_text(StateKind::RandomPure, n, seed),
                          [n, seed] { return random_pure(n, seed); });
    }
    states.emplace_back("named:maximally-mixed,dim=" + std::to_string(n),
                        [n] { return named_state("maximally-mixed", n); });
    states.emplace_back("named:basis,dim=" + std::to_string(n),
                        [n] { return named_state("basis", n); });

    std::size_t index = 0;
    for (const auto& [where, make] : states) {
      const bool full_rank_sample = index++ < config.samples_per_dim;
      triality.guard(where, [&] {
        const auto rho = make();
        const auto r = duality_report(rho, f);
        const double pv = r.predictability + r.visibility;
        triality.within(r.residual_theorem2, tol, where);
        coherence.within(r.residual_theorem1, tol, where);
        const auto cor = check_corollary(rho, f, config.tolerance_inequality_slack);
        bound.observe(-cor.margin, cor.ok, where);
        margin.within(std::abs(cor.margin - r.entropy / (nn - 1.0)), tol, where);
        h_phi.within(std::abs(pv + h_phi_entropy(rho, f) - 1.0), tol, where);

        const double sum_units = skew_information_sum(rho, f, units);
        const double sum_herm = skew_information_sum(rho, f, herm);
        skew_sum.within(std::max(std::abs(sum_units - (nn - 1.0) * pv),
                                 std::abs(sum_herm - (nn - 1.0) * pv)),
                        tol, where);
        basis_free.within(std::abs(sum_units - sum_herm), tight, where);

        if (full_rank_sample) {
          double q = 0.0;
          for (const auto& x : units.elements) q += quasientropy(rho, x, g);
          quasi.within(std::abs(q - 1.0 - r.entropy), tol, where);
          quasi_rel.within(std::abs(pv + q / (nn - 1.0) - nn / (nn - 1.0)), tol, where);

          // Random Hermitian and non-Hermitian observables.
          Rng rng(mix_seed(stream_id(where), 17));
          Matrix h(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
          for (Eigen::Index i = 0; i < h.rows(); ++i)
            for (Eigen::Index j = 0; j < h.cols(); ++j) h(i, j) = rng.complex_normal();
          const Matrix herm_h = 0.5 * (h + h.adjoint());
          commutator.within(std::max(std::abs(skew_information(rho, herm_h, f) -
                                              skew_information_commutator(rho, herm_h, f)),
                                     std::abs(skew_information(rho, h, f) -
                                              skew_information_commutator(rho, h, f))),
                            tol, where);
        }

        if (is_wy) {
          wy.within(std::max({std::abs(r.predictability - closed_form::wy_predictability(rho)),
                              std::abs(r.visibility - closed_form::wy_visibility(rho)),
                              std::abs(r.coherence - closed_form::wy_coherence(rho))}),
                    tight, where);
        }
        if (n == 2) {
          const double s12 = unified_entropy(rho, 0.5, 2.0);
          if (is_wy) unified.within(std::abs(pv + s12 - 1.0), tol, where);
          sharma.within(std::abs(s12 - sharma_mittal(rho, 0.5, 0.0)), tight, where);
        }
      });
    }
  }

  for (auto* c : {&triality, &coherence, &bound, &margin, &h_phi, &skew_sum, &basis_free,
                  &commutator, &quasi, &quasi_rel}) {
    report.records.push_back(std::move(*c).done());
  }
  if (is_wy) report.records.push_back(std::move(wy).done());
  const bool has_qubits =
      std::find(config.dims.begin(), config.dims.end(), std::size_t{2}) != config.dims.end();
  if (has_qubits) {
    if (is_wy) report.records.push_back(std::move(unified).done());
    report.records.push_back(std::move(sharma).done());
  }
  return report;
}

// ---------------------------------------------------------------------------
// Closed-form golden tables

SuiteReport check_closed_forms(const SuiteConfig& config, const FunctionRegistry& registry) {
  config.validate();
  const double tight = std::min(config.tolerance_identity, kTight);
  SuiteReport report;

  constexpr int kGrid = 50;
  Check table(std::string("table.qubit_closed_forms"),
              "WY: P = 1 - sqrt(1-r3^2), V = sqrt(1-r3^2) - sqrt(1-r^2), S = sqrt(1-r^2); "
              "SLD: P = r3^2, V = r^2 - r3^2, S = 1 - r^2");
  std::vector<Check> general;
  std::vector<MonotoneFunction> fs;
  for (const auto& name : config.f_names) {
    fs.push_back(registry.get(name));
    general.emplace_back("example.qubit_general[" + name + "]",
                         "P = 2 r3^2 f(0)/((1+r3) f((1-r3)/(1+r3))), V, C, S likewise in r");
  }
  const auto wy = wigner_yanase();
  const auto sl = sld();

  for (int i = 0; i < kGrid; ++i) {
    const double r = static_cast<double>(i) / (kGrid - 1);
    for (int j = 0; j < kGrid; ++j) {
      const double r3 = r * (-1.0 + 2.0 * j / (kGrid - 1));
      const double r1 = std::sqrt(std::max(0.0, r * r - r3 * r3));
      std::ostringstream where;
      where.precision(17);
      where << "bloch:" << r1 << ",0," << r3;
      table.guard(where.str(), [&] {
        const auto rho = bloch_qubit(r1, 0.0, r3);
        double worst = 0.0;
        for (const auto* f : {&wy, &sl}) {
          const auto closed = closed_form::qubit_table(f->name(), r, r3);
          const auto rep = duality_report(rho, *f);
          worst = std::max({worst, std::abs(rep.predictability - closed.predictability),
                            std::abs(rep.visibility - closed.visibility),
                            std::abs(rep.entropy - closed.entropy)});
        }
        table.within(worst, tight, where.str());
        for (std::size_t k = 0; k < fs.size(); ++k) {
          const auto closed = closed_form::qubit_general(fs[k], r, r3);
          const auto rep = duality_report(rho, fs[k]);
          general[k].within(std::max({std::abs(rep.predictability - closed.predictability),
                                      std::abs(rep.visibility - closed.visibility),
                                      std::abs(rep.coherence - closed.coherence),
                                      std::abs(rep.entropy - closed.entropy)}),
                            tight, where.str());
        }
      });
    }
  }
  report.records.push_back(std::move(table).done());
  for (auto& c : general) report.records.push_back(std::move(c).done());

  Check werner_forms(std::string("example.werner_wy"),
                     "Werner WY P, V, C, S match the closed forms in (n, m, p = (1+m)/2)");
  Check werner_data(std::string("example.werner_spectrum"),
                    "spec W = {2p/(n^2+n), 2(1-p)/(n^2-n)}, diag W = {(m+1)/(n^2+n), "
                    "(n-m)/(n^3-n)}");
  for (int n = 2; n <= 4; ++n) {
    for (int step = 0; step <= 10; ++step) {
      const double m = step / 10.0;
      const std::string where = "werner:n=" + std::to_string(n) + ",m=" + std::to_string(m);
      werner_forms.guard(where, [&] {
        const auto data = werner(n, m);
        const auto rep = duality_report(data.state, wy);
        const auto closed = closed_form::werner_wy(n, data.p, m);
        werner_forms.within(std::max({std::abs(rep.predictability - closed.predictability),
                                      std::abs(rep.visibility - closed.visibility),
                                      std::abs(rep.coherence - closed.coherence),
                                      std::abs(rep.entropy - closed.entropy),
                                      rep.residual_theorem2}),
                            config.tolerance_identity, where);

        std::vector<double> expected_spec;
        const auto sym = static_cast<std::size_t>((n * n + n) / 2);
        const auto asym = static_cast<std::size_t>((n * n - n) / 2);
        expected_spec.insert(expected_spec.end(), sym, data.lambda_sym);
        expected_spec.insert(expected_spec.end(), asym, data.lambda_asym);
        std::sort(expected_spec.begin(), expected_spec.end(), std::greater<>());
        double worst = 0.0;
        const auto& got = data.state.spectrum().eigenvalues;
        for (std::size_t k = 0; k < got.size(); ++k) {
          worst = std::max(worst, std::abs(got[k] - expected_spec[k]));
        }
        for (int mu = 0; mu < n; ++mu) {
          for (int nu = 0; nu < n; ++nu) {
            const auto idx = static_cast<std::size_t>(mu * n + nu);
            const double want = mu == nu ? data.mu1 : data.mu2;
            worst = std::max(worst, std::abs(data.state(idx, idx).real() - want));
          }
        }
        werner_data.within(worst, tight, where);
      });
    }
  }
  report.records.push_back(std::move(werner_forms).done());
  report.records.push_back(std::move(werner_data).done());
  return report;
}

SuiteReport run_suite(const SuiteConfig& config, const FunctionRegistry& registry) {
  config.validate();
  SuiteReport report;
  for (const auto& name : config.f_names) {
    const auto f = registry.get(name);
    report.append(check_relations(f, config));
    report.append(check_predictability_axioms(f, config));
    report.append(check_visibility_axioms(f, config));
    report.append(check_entropy_properties(f, config));
  }
  report.append(check_closed_forms(config, registry));
  report.sort();
  return report;
}

SuiteReport run_suite(const SuiteConfig& config) { return run_suite(config, FunctionRegistry{}); }

}  // namespace wpd
