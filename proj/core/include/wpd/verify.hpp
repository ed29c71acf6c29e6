#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wpd/linalg.hpp"
#include "wpd/monotone.hpp"

namespace wpd {

struct SuiteConfig {
  std::vector<std::size_t> dims{2, 3, 4, 5, 6};
  std::size_t samples_per_dim = 200;
  std::uint64_t seed = 1;
  std::vector<std::string> f_names{"WY", "SLD"};
  double tolerance_identity = 1e-9;
  double tolerance_inequality_slack = 1e-9;

  /// BadConfig unless dims nonempty and all >= 2, samples >= 1, tolerances > 0,
  /// and at least one function name.
  void validate() const;
};

/// One verified relation. `anchor` states the relation in formula form;
/// `worst_residual` is the largest deviation seen (for separation checks, the
/// value closest to the forbidden side).
struct CheckRecord {
  std::string name;
  std::string anchor;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double worst_residual = 0.0;
  std::string worst_case;

  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::vector<CheckRecord> records;

  bool passed() const;
  std::size_t failures() const;
  const CheckRecord* find(const std::string& name) const;
  void append(SuiteReport other);
  /// Records ordered by name.
  void sort();
};

nlohmann::json to_json(const SuiteReport& report);
/// Fixed-width table, one line per record, followed by an overall verdict.
std::string to_table(const SuiteReport& report);

/// |P + V + S/(n-1) - 1|.
double check_triality(const DensityMatrix& rho, const MonotoneFunction& f);
/// |P + V - (n+1)/(n-1) C|.
double check_theorem1(const DensityMatrix& rho, const MonotoneFunction& f);

struct CorollaryResult {
  bool ok = false;
  double margin = 0.0;  // 1 - (P + V)
};
CorollaryResult check_corollary(const DensityMatrix& rho, const MonotoneFunction& f,
                                double slack = 1e-9);

/// Certain/uncertain path axioms in both directions, permutation invariance
/// and sampled convexity of P.
SuiteReport check_predictability_axioms(const MonotoneFunction& f, const SuiteConfig& config);

/// V = 0 on incoherent states (and > 1e-6 once an off-diagonal entry exceeds
/// 1e-3), V = 1 exactly on maximally coherent pure states, permutation
/// invariance, sampled convexity, and the direct-sum relation.
SuiteReport check_visibility_axioms(const MonotoneFunction& f, const SuiteConfig& config);

/// Nonnegativity/purity, maximum at I/n, equal entropies of bipartite pure
/// marginals, concavity, unitary invariance, S(rho (x) I/n) = n S(rho) + S(I/n),
/// and the classical-quantum lower bound.
SuiteReport check_entropy_properties(const MonotoneFunction& f, const SuiteConfig& config);

/// P/V/C/S identities, skew-information basis sums, quasientropy relations,
/// WY closed forms and the qubit entropy bridges for one f.
SuiteReport check_relations(const MonotoneFunction& f, const SuiteConfig& config);

/// Closed-form golden tables: qubit (r, r3) grid and the Werner family.
SuiteReport check_closed_forms(const SuiteConfig& config,
                               const FunctionRegistry& registry = FunctionRegistry{});

/// Everything above for each configured function, sorted by record name.
SuiteReport run_suite(const SuiteConfig& config);
SuiteReport run_suite(const SuiteConfig& config, const FunctionRegistry& registry);

}  // namespace wpd
