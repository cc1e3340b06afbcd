#include "ptqm/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ptqm::io {

namespace {

using nlohmann::json;

std::vector<double> poly_from(const json& j, const char* key) {
  std::vector<double> out;
  if (j.contains(key)) out = j.at(key).get<std::vector<double>>();
  return out;
}

}  // namespace

PotentialSpec potential_from_json_text(const std::string& text, const Grid& grid,
                                       const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw config_error(std::string("potential document: ") + e.what());
  }

  PotentialSpec spec;
  try {
    if (auto re = poly_from(j, "re_poly"); !re.empty()) spec.add_even_poly(re);
    if (auto im = poly_from(j, "im_poly"); !im.empty()) spec.add_odd_poly(im);
    if (j.contains("deltas")) {
      for (const auto& d : j.at("deltas")) {
        spec.add_delta_pair(complexd(d.value("strength_re", 0.0), d.value("strength_im", 0.0)),
                            d.at("location").get<double>());
      }
    }
    if (j.contains("re_tabulated"))
      spec.add_tabulated_even(
          read_tabulated_csv(base_dir / j.at("re_tabulated").get<std::string>(), grid));
    if (j.contains("im_tabulated"))
      spec.add_tabulated_odd(
          read_tabulated_csv(base_dir / j.at("im_tabulated").get<std::string>(), grid));
  } catch (const json::exception& e) {
    throw config_error(std::string("potential document: ") + e.what());
  }
  return spec;
}

std::string potential_to_json_text(const PotentialSpec& spec) {
  json j;
  j["schema_version"] = kSchemaVersion;
  if (!spec.re_poly.empty()) j["re_poly"] = spec.re_poly;
  if (!spec.im_poly.empty()) j["im_poly"] = spec.im_poly;
  if (!spec.deltas.empty()) {
    json arr = json::array();
    for (const auto& d : spec.deltas)
      arr.push_back({{"strength_re", d.strength.real()},
                     {"strength_im", d.strength.imag()},
                     {"location", d.location}});
    j["deltas"] = arr;
  }
  return j.dump(2);
}

std::string format_sig(double v) {
  std::ostringstream os;
  os.precision(kCsvDigits);
  os << v;
  return os.str();
}

void write_csv(const std::filesystem::path& path, const std::string& header_comment,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream f(path);
  if (!f) throw io_error("cannot open " + path.string() + " for writing");
  f << "# " << header_comment << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i)
    f << columns[i] << (i + 1 < columns.size() ? "," : "\n");
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      f << format_sig(row[i]) << (i + 1 < row.size() ? "," : "\n");
  }
  if (!f) throw io_error("write failed for " + path.string());
}

void write_dense_matrix(const std::filesystem::path& path, const cmat& m) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open " + path.string() + " for writing");
  const char magic[4] = {'P', 'T', 'M', '1'};
  f.write(magic, 4);
  const std::uint32_t dim = static_cast<std::uint32_t>(m.rows());
  f.write(reinterpret_cast<const char*>(&dim), sizeof dim);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const double re = m(i, j).real(), im = m(i, j).imag();
      f.write(reinterpret_cast<const char*>(&re), sizeof re);
      f.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
  if (!f) throw io_error("write failed for " + path.string());
}

cmat read_dense_matrix(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open " + path.string());
  char magic[4];
  f.read(magic, 4);
  if (!f || std::memcmp(magic, "PTM1", 4) != 0)
    throw io_error(path.string() + ": not a dense matrix blob");
  std::uint32_t dim = 0;
  f.read(reinterpret_cast<char*>(&dim), sizeof dim);
  if (!f || dim == 0) throw io_error(path.string() + ": bad dimension header");
  cmat m(dim, dim);
  for (std::uint32_t i = 0; i < dim; ++i)
    for (std::uint32_t j = 0; j < dim; ++j) {
      double re = 0.0, im = 0.0;
      f.read(reinterpret_cast<char*>(&re), sizeof re);
      f.read(reinterpret_cast<char*>(&im), sizeof im);
      m(i, j) = complexd(re, im);
    }
  if (!f) throw io_error(path.string() + ": truncated payload");
  return m;
}

std::vector<double> read_tabulated_csv(const std::filesystem::path& path, const Grid& grid) {
  std::ifstream f(path);
  if (!f) throw io_error("cannot open " + path.string());
  std::vector<double> values;
  values.reserve(grid.n);
  std::string line;
  int row = 0;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    // skip a textual header row
    if (line.find_first_not_of("0123456789+-.eE, \t") != std::string::npos) continue;
    std::istringstream ss(line);
    double x = 0.0, v = 0.0;
    char comma = 0;
    if (!(ss >> x >> comma >> v))
      throw io_error(path.string() + ": expected 'x,value' rows");
    if (row >= grid.n) throw invalid_potential("tabulated term length mismatch");
    if (std::abs(x - grid.node(row)) > 1e-9)
      throw invalid_potential("tabulated x column does not match the grid");
    values.push_back(v);
    ++row;
  }
  if (row != grid.n) throw invalid_potential("tabulated term length mismatch");
  return values;
}

}  // namespace ptqm::io
