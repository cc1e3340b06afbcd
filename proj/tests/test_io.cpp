#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "ptqm/io.hpp"

using namespace ptqm;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const fs::path p = fs::temp_directory_path() / "ptqm_io_test";
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("potential JSON: round trip of polynomials and deltas") {
  PotentialSpec spec;
  spec.add_even_poly({1.0, 0.0, 0.5});
  spec.add_odd_poly({0.0, 2.0});
  spec.add_delta_pair(complexd(1.0, 0.3), 1.0);

  const std::string text = io::potential_to_json_text(spec);
  const Grid g = Grid::make(5.0, 101);
  const PotentialSpec back = io::potential_from_json_text(text, g);

  CHECK(back.re_poly == spec.re_poly);
  CHECK(back.im_poly == spec.im_poly);
  REQUIRE(back.deltas.size() == 1);
  CHECK(back.deltas[0].strength == spec.deltas[0].strength);
  CHECK(back.deltas[0].location == spec.deltas[0].location);
}

TEST_CASE("potential JSON: malformed documents raise config_error") {
  const Grid g = Grid::make(1.0, 3);
  CHECK_THROWS_AS(io::potential_from_json_text("{not json", g), config_error);
  CHECK_THROWS_AS(io::potential_from_json_text(R"({"deltas":[{"strength_re":1.0}]})", g),
                  config_error);
}

TEST_CASE("tabulated CSV: grid-matched samples load; mismatches are rejected") {
  const Grid g = Grid::make(1.0, 5);
  const fs::path dir = temp_dir();

  const fs::path good = dir / "even.csv";
  {
    std::ofstream f(good);
    f << "x,value\n";
    for (int i = 0; i < g.n; ++i)
      f << io::format_sig(g.node(i)) << "," << io::format_sig(g.node(i) * g.node(i)) << "\n";
  }
  const auto v = io::read_tabulated_csv(good, g);
  REQUIRE(static_cast<int>(v.size()) == g.n);
  CHECK(v[0] == 1.0);
  CHECK(v[2] == 0.0);

  const fs::path short_file = dir / "short.csv";
  {
    std::ofstream f(short_file);
    f << "0,1\n";
  }
  CHECK_THROWS_AS(io::read_tabulated_csv(short_file, g), invalid_potential);

  const fs::path off_grid = dir / "off.csv";
  {
    std::ofstream f(off_grid);
    for (int i = 0; i < g.n; ++i) f << io::format_sig(g.node(i) + 0.1) << ",1\n";
  }
  CHECK_THROWS_AS(io::read_tabulated_csv(off_grid, g), invalid_potential);

  CHECK_THROWS_AS(io::read_tabulated_csv(dir / "missing.csv", g), io_error);
}

TEST_CASE("dense matrix blob: bit-exact round trip") {
  std::mt19937 rng(42);
  std::normal_distribution<double> dist;
  cmat m(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m(i, j) = complexd(dist(rng), dist(rng));

  const fs::path path = temp_dir() / "matrix.bin";
  io::write_dense_matrix(path, m);
  const cmat back = io::read_dense_matrix(path);
  REQUIRE(back.rows() == 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(back(i, j) == m(i, j));

  const fs::path garbage = temp_dir() / "garbage.bin";
  {
    std::ofstream f(garbage, std::ios::binary);
    f << "nope";
  }
  CHECK_THROWS_AS(io::read_dense_matrix(garbage), io_error);
}

TEST_CASE("CSV writer: deterministic payload below the header") {
  const std::vector<std::string> cols = {"a", "b"};
  const std::vector<std::vector<double>> rows = {{1.0, 2.0}, {0.1234567890123, 3.0}};
  const fs::path p1 = temp_dir() / "a.csv";
  const fs::path p2 = temp_dir() / "b.csv";
  io::write_csv(p1, "header one", cols, rows);
  io::write_csv(p2, "header two", cols, rows);

  const auto payload = [](const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream out;
    std::string line;
    while (std::getline(f, line))
      if (!line.empty() && line[0] != '#') out << line << "\n";
    return out.str();
  };
  CHECK(payload(p1) == payload(p2));
  CHECK(payload(p1).find("0.1234567890123") == std::string::npos);  // 12 digits kept
  CHECK(payload(p1).find("0.123456789012") != std::string::npos);
}
