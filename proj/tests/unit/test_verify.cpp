#include <doctest.h>

#include <algorithm>

#include "wpd/error.hpp"
#include "wpd/measures.hpp"
#include "wpd/states.hpp"
#include "wpd/verify.hpp"

using namespace wpd;

namespace {

SuiteConfig small_config() {
  SuiteConfig c;
  c.dims = {2, 3};
  c.samples_per_dim = 10;
  return c;
}

}  // namespace

TEST_CASE("per-state checks") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& f : {wigner_yanase(), sld()}) {
      const auto pure = random_pure(n, n);
      const auto mixed = named_state("maximally-mixed", n);
      CHECK(check_triality(pure, f) < 1e-12);
      CHECK(check_triality(mixed, f) < 1e-12);
      CHECK(check_theorem1(pure, f) < 1e-12);
      CHECK(check_theorem1(mixed, f) < 1e-12);
      CHECK(std::abs(check_corollary(pure, f).margin) < 1e-12);
      CHECK(check_corollary(mixed, f).margin == doctest::Approx(1.0));
      CHECK(check_corollary(mixed, f).ok);
    }
  }
  CHECK(check_theorem1(random_mixed(5, 1), sld()) < 1e-9);
  const auto r3 = random_mixed(3, 2);
  CHECK(std::abs(check_corollary(r3, wigner_yanase()).margin -
                 f_entropy(r3, wigner_yanase()) / 2) < 1e-9);
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 1000; ++s)
    worst = std::max(worst, check_triality(random_mixed(2, s), wigner_yanase()));
  CHECK(worst < 1e-9);
}

TEST_CASE("suite configuration validation") {
  SuiteConfig c;
  CHECK_NOTHROW(c.validate());
  c.dims.clear();
  try {
    c.validate();
    FAIL("expected BadConfig");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadConfig);
  }
  SuiteConfig d;
  d.dims = {1};
  CHECK_THROWS_AS(d.validate(), Error);
  SuiteConfig e;
  e.samples_per_dim = 0;
  CHECK_THROWS_AS(e.validate(), Error);
  SuiteConfig g;
  g.f_names = {"nope"};
  CHECK_THROWS_AS(run_suite(g), Error);
}

TEST_CASE("axiom suites on a small configuration") {
  const auto c = small_config();
  const auto p = check_predictability_axioms(wigner_yanase(), c);
  CHECK(p.passed());
  const auto e = check_entropy_properties(sld(), c);
  CHECK(e.passed());
  const auto r = check_relations(wigner_yanase(), c);
  CHECK(r.passed());
  const auto cf = check_closed_forms(c);
  CHECK(cf.passed());
  for (const auto* rep : {&p, &e, &r, &cf})
    for (const auto& rec : rep->records) {
      CHECK_FALSE(rec.anchor.empty());
      CHECK(rec.cases > 0);
    }
}

TEST_CASE("visibility suite reports the direct-sum identity as stated") {
  const auto v = check_visibility_axioms(wigner_yanase(), small_config());
  const auto* literal = v.find("visibility.direct_sum[WY]");
  const auto* corrected = v.find("visibility.direct_sum_with_cross_terms[WY]");
  REQUIRE(literal != nullptr);
  REQUIRE(corrected != nullptr);
  CHECK(corrected->passed());
  CHECK_FALSE(literal->passed());
  CHECK(literal->worst_residual > 1e-3);
}

TEST_CASE("suite reports are deterministic and sorted") {
  const auto c = small_config();
  const auto a = run_suite(c);
  const auto b = run_suite(c);
  CHECK(to_json(a) == to_json(b));
  CHECK(std::is_sorted(a.records.begin(), a.records.end(),
                       [](const auto& x, const auto& y) { return x.name < y.name; }));

  auto other = c;
  other.seed = 99;
  const auto o = run_suite(other);
  REQUIRE(o.records.size() == a.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CAPTURE(a.records[i].name);
    CHECK(a.records[i].name == o.records[i].name);
    CHECK(a.records[i].passed() == o.records[i].passed());
  }

  std::size_t failing = 0;
  for (const auto& rec : a.records) failing += rec.failures;
  CHECK(a.failures() == failing);
  CHECK(a.passed() == (failing == 0));

  const auto j = to_json(a);
  CHECK(j["passed"] == a.passed());
  CHECK(j["checks"].size() == a.records.size());
  CHECK(to_table(a).find("theorem.triality[WY]") != std::string::npos);
}

TEST_CASE("identity tolerance below the floating point floor") {
  auto c = small_config();
  c.tolerance_identity = 1e-18;
  const auto r = run_suite(c);
  CHECK_FALSE(r.passed());
  const auto* coh = r.find("quasi.reconstruction[SLD]");
  REQUIRE(coh != nullptr);
  CHECK_FALSE(coh->passed());
  CHECK(coh->worst_residual > 0.0);
  CHECK_FALSE(coh->worst_case.empty());
}

TEST_CASE("custom registered function") {
  FunctionRegistry reg;
  const auto wyd = wigner_yanase_dyson(0.3);
  reg.add(wyd);
  auto c = small_config();
  c.f_names = {wyd.name()};
  const auto r = run_suite(c, reg);
  const auto* tri = r.find("theorem.triality[" + wyd.name() + "]");
  REQUIRE(tri != nullptr);
  CHECK(tri->passed());
}
