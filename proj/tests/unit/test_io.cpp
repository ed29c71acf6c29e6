#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "wpd/error.hpp"
#include "wpd/io.hpp"
#include "wpd/states.hpp"

using namespace wpd;
using wpd::test::max_abs_entry;

TEST_CASE("density matrix JSON round trip") {
  const auto rho = random_mixed(3, 21);
  const auto j = density_to_json(rho);
  CHECK(j["n"] == 3);
  CHECK(j["re"].size() == 3);
  CHECK(max_abs_entry(density_from_json(j).matrix() - rho.matrix()) == 0.0);

  const auto path = std::filesystem::temp_directory_path() / "wpd_io_roundtrip.json";
  save_density_matrix(rho, path);
  CHECK(max_abs_entry(load_density_matrix(path).matrix() - rho.matrix()) == 0.0);
  const auto via_spec = build_state(parse_state_spec("file:" + path.string()));
  CHECK(max_abs_entry(via_spec.matrix() - rho.matrix()) == 0.0);
  std::filesystem::remove(path);
}

TEST_CASE("density matrix JSON with an explicit imaginary part") {
  const auto j = nlohmann::json::parse(
      R"({"n": 2, "re": [[0.5, 0.0], [0.0, 0.5]], "im": [[0.0, -0.5], [0.5, 0.0]]})");
  const auto rho = density_from_json(j);
  CHECK(rho.spectrum().eigenvalues[0] == doctest::Approx(1.0));
  CHECK(rho(0, 1) == cplx(0.0, -0.5));
}

TEST_CASE("malformed density matrix JSON") {
  for (const char* text : {R"({"re": [[1]]})", R"({"n": 2, "re": [[1, 0]]})",
                           R"({"n": 2, "re": [[1, 0], [0, 1]]})",
                           R"({"n": 1, "re": [["x"]]})",
                           R"({"n": 2, "re": [[0.5, 0.5], [0.5, 0.5]]})"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(density_from_json(nlohmann::json::parse(text)), Error);
  }
  CHECK_THROWS_AS(load_density_matrix("/nonexistent/wpd.json"), Error);
  const auto path = std::filesystem::temp_directory_path() / "wpd_io_garbage.json";
  std::ofstream(path) << "{ not json";
  try {
    load_density_matrix(path);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  std::filesystem::remove(path);
}

TEST_CASE("report JSON") {
  const auto r = duality_report(bloch_qubit(0.1, 0.2, 0.3), wigner_yanase());
  const auto j = to_json(r);
  CHECK(j["dim"] == 2);
  CHECK(j["f"] == "WY");
  CHECK(j["P"].get<double>() == r.predictability);
  CHECK(j["V"].get<double>() == r.visibility);
  CHECK(j["C"].get<double>() == r.coherence);
  CHECK(j["S"].get<double>() == r.entropy);
  CHECK(j.contains("residual_theorem1"));
  CHECK(j.contains("residual_theorem2"));
}
