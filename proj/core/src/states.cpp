#include "wpd/states.hpp"

#include <charconv>
#include <numbers>
#include <cmath>
#include <sstream>

#include "wpd/error.hpp"
#include "wpd/io.hpp"
#include "wpd/rng.hpp"

namespace wpd {

namespace {

void require_dim(std::size_t dim) {
  if (dim < 2) throw Error(ErrorCode::BadParameters, "dimension must be >= 2");
}

Matrix ginibre(std::size_t dim, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix g(d, d);
  // Row-major fill so the stream order is easy to reproduce elsewhere.
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  return g;
}

}  // namespace

DensityMatrix bloch_qubit(double r1, double r2, double r3) {
  const double r2sum = r1 * r1 + r2 * r2 + r3 * r3;
  if (!(r2sum <= 1.0 + 1e-12)) {
    throw Error(ErrorCode::BlochOutOfBall, "|r|^2 = " + std::to_string(r2sum));
  }
  Matrix m(2, 2);
  m << 0.5 * (1.0 + r3), cplx(0.5 * r1, -0.5 * r2), cplx(0.5 * r1, 0.5 * r2), 0.5 * (1.0 - r3);
  return DensityMatrix::from_matrix(m);
}

WernerData werner(int n, double m) {
  if (n < 2 || !(m >= 0.0 && m <= 1.0)) {
    throw Error(ErrorCode::BadParameters, "Werner needs n >= 2 and m in [0, 1]");
  }
  const double nn = static_cast<double>(n);
  const double denom = nn * nn * nn - nn;
  const double a = (nn - m) / denom;
  const double b = (nn * m - 1.0) / denom;
  const Eigen::Index d = static_cast<Eigen::Index>(n) * n;
  Matrix w = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) w(i, i) += a;
  // F |mu nu> = |nu mu>
  for (Eigen::Index mu = 0; mu < n; ++mu)
    for (Eigen::Index nu = 0; nu < n; ++nu) w(nu * n + mu, mu * n + nu) += b;

  const double p = 0.5 * (1.0 + m);
  return WernerData{DensityMatrix::from_matrix(w),
                    n,
                    m,
                    p,
                    2.0 * p / (nn * nn + nn),
                    2.0 * (1.0 - p) / (nn * nn - nn),
                    (m + 1.0) / (nn * nn + nn),
                    (nn - m) / denom};
}

DensityMatrix random_mixed(std::size_t dim, std::uint64_t seed) {
  require_dim(dim);
  Rng rng(seed);
  const Matrix g = ginibre(dim, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::from_matrix(0.5 * (rho + rho.adjoint()));
}

DensityMatrix random_pure(std::size_t dim, std::uint64_t seed) {
  require_dim(dim);
  Rng rng(seed);
  Eigen::VectorXcd psi(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = rng.complex_normal();
  return DensityMatrix::pure(psi);
}

Matrix random_unitary(std::size_t dim, std::uint64_t seed) {
  require_dim(dim);
  Rng rng(seed);
  const Matrix g = ginibre(dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const cplx diag = r(k, k);
    if (std::abs(diag) > 0.0) q.col(k) *= diag / std::abs(diag);
  }
  return q;
}

DensityMatrix random_maximally_coherent(std::size_t dim, std::uint64_t seed) {
  require_dim(dim);
  Rng rng(seed);
  std::vector<double> phases(dim);
  for (double& t : phases) t = 2.0 * std::numbers::pi * rng.uniform();
  return named_state("maximally-coherent", dim, 0, phases);
}

DensityMatrix named_state(std::string_view name, std::size_t dim, std::size_t index,
                          std::span<const double> phases) {
  const auto d = static_cast<Eigen::Index>(dim);
  if (name == "maximally-mixed") {
    require_dim(dim);
    return DensityMatrix::from_matrix(Matrix::Identity(d, d) / static_cast<double>(dim));
  }
  if (name == "maximally-coherent") {
    require_dim(dim);
    if (!phases.empty() && phases.size() != dim) {
      throw Error(ErrorCode::BadParameters, "need one phase per basis state");
    }
    Eigen::VectorXcd psi(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      const double t = phases.empty() ? 0.0 : phases[static_cast<std::size_t>(j)];
      psi(j) = std::polar(1.0 / std::sqrt(static_cast<double>(dim)), t);
    }
    return DensityMatrix::from_matrix(psi * psi.adjoint());
  }
  if (name == "basis") {
    require_dim(dim);
    if (index >= dim) throw Error(ErrorCode::BadParameters, "basis index out of range");
    Matrix m = Matrix::Zero(d, d);
    m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
    return DensityMatrix::from_matrix(m);
  }
  if (name == "bell") {
    if (dim != 4) throw Error(ErrorCode::BadParameters, "Bell states live in dimension 4");
    if (index > 3) throw Error(ErrorCode::BadParameters, "Bell index must be 0..3");
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
    const double sign = (index % 2 == 0) ? 1.0 : -1.0;
    if (index < 2) {
      psi(0) = 1.0;
      psi(3) = sign;
    } else {
      psi(1) = 1.0;
      psi(2) = sign;
    }
    return DensityMatrix::pure(psi);
  }
  throw Error(ErrorCode::UnknownName, "no named state '" + std::string(name) + "'");
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_uint(std::string_view text) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::ParseError, "not a nonnegative integer: '" + std::string(text) + "'");
  }
  return value;
}

struct KeyValue {
  std::string_view key;
  std::string_view value;
};

KeyValue key_value(std::string_view item) {
  const auto eq = item.find('=');
  if (eq == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "expected key=value, got '" + std::string(item) + "'");
  }
  return {item.substr(0, eq), item.substr(eq + 1)};
}

[[noreturn]] void unknown_key(std::string_view key, std::string_view kind) {
  throw Error(ErrorCode::ParseError,
              "unknown parameter '" + std::string(key) + "' for " + std::string(kind));
}

}  // namespace

StateSpec parse_state_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "state spec must look like kind:params");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  StateSpec spec;

  if (kind == "file") {
    if (body.empty()) throw Error(ErrorCode::ParseError, "file: needs a path");
    spec.kind = StateKind::File;
    spec.path = std::string(body);
    return spec;
  }

  const auto items = split(body, ',');
  if (kind == "bloch") {
    if (items.size() != 3) throw Error(ErrorCode::ParseError, "bloch needs r1,r2,r3");
    spec.kind = StateKind::Bloch;
    for (std::size_t i = 0; i < 3; ++i) spec.bloch[i] = parse_double(items[i]);
    return spec;
  }
  if (kind == "werner") {
    spec.kind = StateKind::Werner;
    bool have_n = false, have_m = false;
    for (auto item : items) {
      const auto [key, value] = key_value(item);
      if (key == "n") {
        spec.werner_n = static_cast<int>(parse_uint(value));
        have_n = true;
      } else if (key == "m") {
        spec.werner_m = parse_double(value);
        have_m = true;
      } else {
        unknown_key(key, kind);
      }
    }
    if (!have_n || !have_m) throw Error(ErrorCode::ParseError, "werner needs n=..,m=..");
    return spec;
  }
  if (kind == "random" || kind == "random-mixed" || kind == "random-pure") {
    spec.kind = kind == "random-pure" ? StateKind::RandomPure : StateKind::RandomMixed;
    bool have_dim = false;
    for (auto item : items) {
      if (item == "pure") {
        spec.kind = StateKind::RandomPure;
        continue;
      }
      if (item == "mixed") {
        spec.kind = StateKind::RandomMixed;
        continue;
      }
      const auto [key, value] = key_value(item);
      if (key == "dim") {
        spec.dim = parse_uint(value);
        have_dim = true;
      } else if (key == "seed") {
        spec.seed = parse_uint(value);
      } else {
        unknown_key(key, kind);
      }
    }
    if (!have_dim) throw Error(ErrorCode::ParseError, "random needs dim=..");
    return spec;
  }
  if (kind == "named") {
    if (items.empty() || items.front().empty()) {
      throw Error(ErrorCode::ParseError, "named: needs a state name");
    }
    spec.kind = StateKind::Named;
    spec.name = std::string(items.front());
    spec.dim = spec.name == "bell" ? 4 : 2;
    for (std::size_t i = 1; i < items.size(); ++i) {
      const auto [key, value] = key_value(items[i]);
      if (key == "dim") {
        spec.dim = parse_uint(value);
      } else if (key == "index") {
        spec.index = parse_uint(value);
      } else if (key == "phases") {
        for (auto t : split(value, ';')) spec.phases.push_back(parse_double(t));
      } else {
        unknown_key(key, kind);
      }
    }
    return spec;
  }
  throw Error(ErrorCode::ParseError, "unknown state kind '" + std::string(kind) + "'");
}

std::string to_string(const StateSpec& spec) {
  std::ostringstream out;
  out.precision(17);
  switch (spec.kind) {
    case StateKind::Bloch:
      out << "bloch:" << spec.bloch[0] << ',' << spec.bloch[1] << ',' << spec.bloch[2];
      break;
    case StateKind::Werner:
      out << "werner:n=" << spec.werner_n << ",m=" << spec.werner_m;
      break;
    case StateKind::RandomMixed:
      out << "random:dim=" << spec.dim << ",seed=" << spec.seed;
      break;
    case StateKind::RandomPure:
      out << "random-pure:dim=" << spec.dim << ",seed=" << spec.seed;
      break;
    case StateKind::Named:
      out << "named:" << spec.name << ",dim=" << spec.dim;
      if (spec.index != 0) out << ",index=" << spec.index;
      if (!spec.phases.empty()) {
        out << ",phases=";
        for (std::size_t i = 0; i < spec.phases.size(); ++i) {
          out << (i ? ";" : "") << spec.phases[i];
        }
      }
      break;
    case StateKind::File:
      out << "file:" << spec.path;
      break;
  }
  return out.str();
}

DensityMatrix build_state(const StateSpec& spec) {
  switch (spec.kind) {
    case StateKind::Bloch:
      return bloch_qubit(spec.bloch[0], spec.bloch[1], spec.bloch[2]);
    case StateKind::Werner:
      return werner(spec.werner_n, spec.werner_m).state;
    case StateKind::RandomMixed:
      return random_mixed(spec.dim, spec.seed);
    case StateKind::RandomPure:
      return random_pure(spec.dim, spec.seed);
    case StateKind::Named:
      return named_state(spec.name, spec.dim, spec.index, spec.phases);
    case StateKind::File:
      return load_density_matrix(spec.path);
  }
  throw Error(ErrorCode::BadParameters, "unhandled state kind");
}

}  // namespace wpd
