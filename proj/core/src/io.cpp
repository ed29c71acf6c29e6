#include "wpd/io.hpp"

#include <fstream>
#include <string>

#include "wpd/error.hpp"

namespace wpd {

namespace {

Eigen::MatrixXd read_block(const nlohmann::json& j, const char* field, std::size_t n) {
  if (!j.contains(field) || !j[field].is_array() || j[field].size() != n) {
    throw Error(ErrorCode::ParseError,
                std::string("field '") + field + "' must be an array of " + std::to_string(n) +
                    " rows");
  }
  Eigen::MatrixXd out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = j[field][i];
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorCode::ParseError, std::string("row ") + std::to_string(i) + " of '" +
                                             field + "' must have " + std::to_string(n) +
                                             " numbers");
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!row[k].is_number()) {
        throw Error(ErrorCode::ParseError, std::string("non-numeric entry in '") + field + "'");
      }
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = row[k].get<double>();
    }
  }
  return out;
}

}  // namespace

DensityMatrix density_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "expected an object with integer field 'n'");
  }
  const auto n_signed = j["n"].get<long long>();
  if (n_signed < 1) throw Error(ErrorCode::ParseError, "'n' must be positive");
  const auto n = static_cast<std::size_t>(n_signed);
  const Eigen::MatrixXd re = read_block(j, "re", n);
  const Eigen::MatrixXd im = read_block(j, "im", n);
  Matrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return DensityMatrix::from_matrix(m);
}

nlohmann::json density_to_json(const DensityMatrix& rho) {
  const auto n = rho.dim();
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (std::size_t k = 0; k < n; ++k) {
      re_row.push_back(rho(i, k).real());
      im_row.push_back(rho(i, k).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

DensityMatrix load_density_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return density_from_json(j);
}

void save_density_matrix(const DensityMatrix& rho, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path.string() + "'");
  out << density_to_json(rho).dump(2) << '\n';
}

nlohmann::json to_json(const DualityReport& report) {
  return {{"dim", report.dim},
          {"f", report.f_name},
          {"P", report.predictability},
          {"V", report.visibility},
          {"C", report.coherence},
          {"S", report.entropy},
          {"residual_theorem1", report.residual_theorem1},
          {"residual_theorem2", report.residual_theorem2}};
}

}  // namespace wpd
