#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "wpd/closed_forms.hpp"
#include "wpd/measures.hpp"
#include "wpd/states.hpp"

using namespace wpd;
using doctest::Approx;

TEST_CASE("WY closed forms through square roots") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      for (const auto& rho : {random_mixed(n, 20 * n + s), random_pure(n, 30 * n + s)}) {
        const auto r = duality_report(rho, wigner_yanase());
        CHECK(std::abs(closed_form::wy_predictability(rho) - r.predictability) < 1e-10);
        CHECK(std::abs(closed_form::wy_visibility(rho) - r.visibility) < 1e-10);
        CHECK(std::abs(closed_form::wy_coherence(rho) - r.coherence) < 1e-10);
      }
    }
  }
}

TEST_CASE("qubit table spot values") {
  const auto wy = closed_form::qubit_table("WY", 0.5, 0.4);
  CHECK(wy.predictability == Approx(1 - std::sqrt(0.84)).epsilon(1e-14));
  CHECK(wy.predictability == Approx(0.0834849).epsilon(1e-6));
  CHECK(wy.entropy == Approx(std::sqrt(0.75)));
  const auto s = closed_form::qubit_table("SLD", 0.8, 0.8);
  CHECK(s.predictability == Approx(0.64));
  CHECK(std::abs(s.visibility) < 1e-15);
  const auto corner = closed_form::qubit_table("WY", 1.0, 1.0);
  CHECK(corner.predictability == Approx(1.0));
}

TEST_CASE("qubit closed forms against the generic path") {
  for (int i = 0; i <= 20; ++i) {
    const double r = i / 20.0;
    for (int j = 0; j <= 20; ++j) {
      const double r3 = r * (-1.0 + j / 10.0);
      const double r1 = std::sqrt(std::max(0.0, r * r - r3 * r3));
      const auto rho = bloch_qubit(r1, 0.0, r3);
      for (const auto& f : {wigner_yanase(), sld()}) {
        const auto g = duality_report(rho, f);
        const auto t = closed_form::qubit_table(f.name(), r, r3);
        const auto e = closed_form::qubit_general(f, r, r3);
        for (const auto& c : {t, e}) {
          CHECK(std::abs(c.predictability - g.predictability) < 1e-10);
          CHECK(std::abs(c.visibility - g.visibility) < 1e-10);
          CHECK(std::abs(c.entropy - g.entropy) < 1e-10);
        }
        CHECK(std::abs(e.coherence - g.coherence) < 1e-10);
      }
    }
  }
}

TEST_CASE("qubit closed forms for a registered function") {
  const auto f = wigner_yanase_dyson(0.3);
  const auto rho = bloch_qubit(0.2, 0.1, -0.5);
  const double r = std::sqrt(0.04 + 0.01 + 0.25);
  const auto g = duality_report(rho, f);
  const auto e = closed_form::qubit_general(f, r, -0.5);
  CHECK(e.predictability == Approx(g.predictability).epsilon(1e-10));
  CHECK(e.visibility == Approx(g.visibility).epsilon(1e-10));
  CHECK(e.entropy == Approx(g.entropy).epsilon(1e-10));
}

TEST_CASE("Werner closed forms") {
  const auto spot = closed_form::werner_wy(2, 1.0, 1.0);
  CHECK(spot.predictability == Approx(0.0381270).epsilon(1e-6));
  CHECK(spot.visibility == Approx(0.2952060).epsilon(1e-6));
  CHECK(spot.entropy == Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(spot.predictability + spot.visibility + spot.entropy / 3 - 1) < 1e-9);

  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k <= 10; ++k) {
      const double m = k / 10.0;
      const auto w = werner(n, m);
      const auto c = closed_form::werner_wy(n, w.p, m);
      const auto g = duality_report(w.state, wigner_yanase());
      CHECK(std::abs(c.predictability - g.predictability) < 1e-9);
      CHECK(std::abs(c.visibility - g.visibility) < 1e-9);
      CHECK(std::abs(c.entropy - g.entropy) < 1e-9);
    }
  }

  // Decoupled (p, m) pairs are evaluated verbatim; the triality sum still holds.
  for (int n = 2; n <= 4; ++n)
    for (int i = 0; i <= 10; ++i)
      for (int j = 0; j <= 10; ++j) {
        const auto c = closed_form::werner_wy(n, 0.05 * i, 0.1 * j);
        const double paths = n * n;
        CHECK(std::abs(c.predictability + c.visibility + c.entropy / (paths - 1) - 1) < 1e-12);
      }
}
