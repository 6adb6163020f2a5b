#include "bjq/grid_io.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace bjq {

namespace {

using nlohmann::json;

json data_array(const Eigen::MatrixXcd& mat) {
  json data = json::array();
  for (Eigen::Index row = 0; row < mat.rows(); ++row)
    for (Eigen::Index col = 0; col < mat.cols(); ++col)
      data.push_back({mat(row, col).real(), mat(row, col).imag()});
  return data;
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FileFormatError("cannot open '" + path + "' for writing");
  out << j.dump() << "\n";
  if (!out) throw FileFormatError("write to '" + path + "' failed");
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FileFormatError("'" + path + "': " + e.what());
  }
  return j;
}

struct Loaded {
  GridSpec spec;
  std::vector<std::complex<double>> entries;
};

Loaded load_kind(const std::string& path, const std::string& kind, std::size_t count_per_n) {
  json j = read_file(path);
  try {
    if (j.at("kind").get<std::string>() != kind)
      throw FileFormatError("'" + path + "': expected kind \"" + kind + "\"");
    GridSpec spec;
    try {
      spec = GridSpec::make(j.at("N").get<int>(), j.at("L").get<double>(),
                            j.at("hbar").get<double>());
    } catch (const GridError& e) {
      throw FileFormatError("'" + path + "': " + e.what());
    }
    const json& data = j.at("data");
    std::size_t expected =
        static_cast<std::size_t>(spec.N) * (count_per_n == 1 ? 1 : spec.N);
    if (!data.is_array() || data.size() != expected)
      throw FileFormatError("'" + path + "': data must hold " +
                            std::to_string(expected) + " entries");
    Loaded out{spec, {}};
    out.entries.reserve(expected);
    for (const json& pair : data) {
      if (!pair.is_array() || pair.size() != 2)
        throw FileFormatError("'" + path + "': entries must be [re, im] pairs");
      double re = pair[0].get<double>();
      double im = pair[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        throw FileFormatError("'" + path + "': non-finite entry");
      out.entries.emplace_back(re, im);
    }
    return out;
  } catch (const json::exception& e) {
    throw FileFormatError("'" + path + "': " + e.what());
  }
}

Eigen::MatrixXcd to_matrix(const Loaded& loaded) {
  const int n = loaded.spec.N;
  Eigen::MatrixXcd mat(n, n);
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col)
      mat(row, col) = loaded.entries[static_cast<std::size_t>(row) * n + col];
  return mat;
}

json header(const char* kind, const GridSpec& spec) {
  return {{"kind", kind}, {"N", spec.N}, {"L", spec.L}, {"hbar", spec.hbar}};
}

}  // namespace

void save_operator(const std::string& path, const GridOperator& a) {
  json j = header("operator", a.spec);
  j["data"] = data_array(a.mat);
  write_file(path, j);
}

void save_state(const std::string& path, const GridState& psi) {
  json j = header("state", psi.spec);
  json data = json::array();
  for (Eigen::Index k = 0; k < psi.amp.size(); ++k)
    data.push_back({psi.amp(k).real(), psi.amp(k).imag()});
  j["data"] = data;
  write_file(path, j);
}

void save_psfunction(const std::string& path, const PhaseSpaceGridFunction& f) {
  json j = header("psfunction", f.spec);
  j["data"] = data_array(f.samples);
  write_file(path, j);
}

GridOperator load_operator(const std::string& path) {
  Loaded loaded = load_kind(path, "operator", 0);
  return {loaded.spec, to_matrix(loaded)};
}

GridState load_state(const std::string& path) {
  Loaded loaded = load_kind(path, "state", 1);
  Eigen::VectorXcd amp(loaded.spec.N);
  for (int k = 0; k < loaded.spec.N; ++k) amp(k) = loaded.entries[k];
  return {loaded.spec, std::move(amp)};
}

PhaseSpaceGridFunction load_psfunction(const std::string& path) {
  Loaded loaded = load_kind(path, "psfunction", 0);
  return {loaded.spec, to_matrix(loaded)};
}

}  // namespace bjq
