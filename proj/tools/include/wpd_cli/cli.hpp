#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wpd/monotone.hpp"
#include "wpd/states.hpp"
#include "wpd/verify.hpp"

namespace wpd::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kPass = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kNumericalError = 3,
};

inline constexpr const char* kVersion = "0.1.0";

/// Measures for one state: {"state", "dim", "f", "P", "V", "C", "S", residuals}.
nlohmann::json measure(const StateSpec& spec, const MonotoneFunction& f);

enum class Figure { Fig0, Fig1, Fig2, Fig3 };

/// Throws Error(UnknownName) for anything but fig0..fig3.
Figure parse_figure(const std::string& id);

struct FigureOptions {
  std::uint64_t seed = 1;
  std::string f_name = "WY";
  std::size_t samples = 1000;  // fig1 points; fig0 random cloud size
  std::size_t dim = 4;         // fig0 only
  double m = 0.5;              // fig2, figure-reproduction mode only
  bool physical = false;       // fig2/fig3: sweep m and derive p = (1 + m)/2
};

/// Writes the CSV dataset (with a leading '#' provenance line) to `out`.
void write_figure(Figure figure, const FigureOptions& options, std::ostream& out);

/// Qubit closed forms next to generic values on a 50 x 50 (r, r3) grid.
/// Returns the largest |closed - numeric| seen.
double write_table1(std::ostream& out);

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wpd::cli
