#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "wpd/linalg.hpp"
#include "wpd/measures.hpp"

namespace wpd {

// Density-matrix file format:
//   {"n": 2, "re": [[0.5, 0.5], [0.5, 0.5]], "im": [[0, 0], [0, 0]]}
// "re" and "im" are n x n, row-major. Loading applies the DensityMatrix
// invariants (Hermitian, unit trace, PSD within 1e-12).

/// ParseError for structural problems; DensityMatrix errors for invalid states.
DensityMatrix density_from_json(const nlohmann::json& j);
nlohmann::json density_to_json(const DensityMatrix& rho);

DensityMatrix load_density_matrix(const std::filesystem::path& path);
void save_density_matrix(const DensityMatrix& rho, const std::filesystem::path& path);

nlohmann::json to_json(const DualityReport& report);

}  // namespace wpd
