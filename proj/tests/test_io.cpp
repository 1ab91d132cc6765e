#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include <nlohmann/json.hpp>

#include "radwig/error.hpp"
#include "radwig/io.hpp"
#include "radwig/wigner.hpp"

using namespace radwig;

TEST_CASE("axis specs") {
  const Grid1D g = io::parse_axis("-3:2:251");
  CHECK(g.min() == -3.0);
  CHECK(g.max() == 2.0);
  CHECK(g.size() == 251);
  CHECK(io::parse_axis("0:0:1").degenerate());
  CHECK(io::parse_axis("1e-3:2.5:2").min() == 1e-3);
  for (const char* bad : {"", "1:2", "1:2:3:4", "a:1:3", "0:1:0", "0:1:-2", "0:1:2.5", "1:0:5", "0:0:2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(io::parse_axis(bad), InputError);
  }
}

TEST_CASE("shortest round-trip doubles") {
  for (double x : {0.1, 1.0 / 3.0, -2.6698285086916294e-06, 1e-300, 0.0, 123456789.125}) {
    CHECK(std::stod(io::format_double(x)) == x);
  }
  CHECK(io::format_double(0.25) == "0.25");
}

namespace {
WignerGrid sample_grid() {
  WignerGrid w(Grid1D(-1.0, 1.0, 7), Grid1D(-2.0, 3.0, 5));
  for (std::size_t k = 0; k < w.values.size(); ++k) w.values[k] = std::sin(0.37 * k) / (k + 3.0);
  w.meta.l = 2;
  w.meta.route = "closed-form";
  w.meta.diagnostics["quadrature_error_max"] = 1.5e-13;
  return w;
}
}  // namespace

TEST_CASE("CSV round trip is exact") {
  const WignerGrid w = sample_grid();
  const std::string text = io::grid_to_csv(w);
  CHECK(text.rfind("gamma,delta,w\n", 0) == 0);
  const WignerGrid back = io::grid_from_csv(text);
  CHECK(back.gamma == w.gamma);
  CHECK(back.delta == w.delta);
  CHECK(back.values == w.values);
  CHECK(io::grid_to_csv(back) == text);
}

TEST_CASE("JSON round trip is exact") {
  const WignerGrid w = sample_grid();
  const WignerGrid back = io::grid_from_json(io::grid_to_json(w));
  CHECK(back.values == w.values);
  CHECK(back.gamma == w.gamma);
  CHECK(back.meta.l.value() == 2);
  CHECK(back.meta.route == "closed-form");
  CHECK(back.meta.diagnostics.at("quadrature_error_max") == 1.5e-13);
  const auto doc = nlohmann::json::parse(io::grid_to_json(w));
  CHECK(doc["w"].size() == 7);
  CHECK(doc["w"][0].size() == 5);
  CHECK(doc["meta"]["overlap_factor"].get<double>() == doctest::Approx(2 * 3.141592653589793));
}

TEST_CASE("single-cell grids round trip") {
  WignerGrid w(Grid1D(0.0, 0.0, 1), Grid1D(0.0, 0.0, 1));
  w.values[0] = 0.26803248203398844;
  CHECK(io::grid_from_csv(io::grid_to_csv(w)).values == w.values);
  CHECK(io::grid_from_json(io::grid_to_json(w)).values == w.values);
}

TEST_CASE("malformed grid files") {
  CHECK_THROWS_AS(io::grid_from_csv("x,y,z\n1,2,3\n"), InputError);
  CHECK_THROWS_AS(io::grid_from_csv("gamma,delta,w\n0,0,1\n0,1\n"), InputError);
  CHECK_THROWS_AS(io::grid_from_csv("gamma,delta,w\n0,0,1\n0,1,2\n1,0,3\n"), InputError);
  CHECK_THROWS_AS(io::grid_from_json("{}"), InputError);
  CHECK_THROWS_AS(io::grid_from_json("[1,2"), InputError);
}

TEST_CASE("files and scripts") {
  const auto dir = std::filesystem::temp_directory_path() / "radwig_io_test";
  std::filesystem::create_directories(dir);
  io::write_file(dir / "a.txt", "hello");
  CHECK(io::read_file(dir / "a.txt") == "hello");
  CHECK_FALSE(std::filesystem::exists(dir / "a.txt.tmp"));
  CHECK_THROWS_AS(io::read_file(dir / "missing.txt"), InputError);
  const std::string script = io::gnuplot_script(dir / "w_l1.csv", "W_1");
  CHECK(script.find("plot 'w_l1.csv' skip 1 using 1:2:3 with image") != std::string::npos);
  CHECK(script.find("set datafile separator ','") != std::string::npos);
  std::filesystem::remove_all(dir);
}
