#include <doctest.h>

#include <cmath>
#include <numbers>

#include "holoforge/field.hpp"
#include "holoforge/registry.hpp"
#include "support.hpp"

using namespace holoforge;
using testing::error_kind;

TEST_CASE("field rejects bad geometry and samples") {
  CHECK(error_kind([] { ComplexField2D(1, 4, 5.0, std::vector<Complex>(4)); }) ==
        ErrorKind::invalid_argument);
  CHECK(error_kind([] { ComplexField2D(2, 2, 0.0, std::vector<Complex>(4)); }) ==
        ErrorKind::invalid_argument);
  CHECK(error_kind([] { ComplexField2D(2, 2, -1.0, std::vector<Complex>(4)); }) ==
        ErrorKind::invalid_argument);
  CHECK(error_kind([] { ComplexField2D(2, 3, 5.0, std::vector<Complex>(4)); }) ==
        ErrorKind::shape_mismatch);
  std::vector<Complex> bad(4);
  bad[2] = {std::nan(""), 0.0};
  CHECK(error_kind([&] { ComplexField2D(2, 2, 5.0, bad); }) == ErrorKind::invalid_argument);
  bad[2] = {0.0, INFINITY};
  CHECK(error_kind([&] { ComplexField2D(2, 2, 5.0, bad); }) == ErrorKind::invalid_argument);
}

TEST_CASE("defaults are the 60x60 grid at 5 mm") {
  const auto z = ComplexField2D::zeros();
  CHECK(z.rows() == 60);
  CHECK(z.cols() == 60);
  CHECK(z.pitch_mm() == 5.0);
  for (auto v : z.data()) CHECK(v == Complex{});
}

TEST_CASE("amplitude and phase split and rebuild a field") {
  std::vector<Complex> d = {{1, 0}, {0, 2}, {-3, 0}, {0, -4}, {1, 1}, {-1, -1}};
  const ComplexField2D f(2, 3, 5.0, d);
  const auto a = amplitude(f);
  const auto p = phase(f);
  CHECK(a.at(0, 1) == doctest::Approx(2.0));
  CHECK(a.at(1, 2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(p.at(0, 0) == 0.0);
  CHECK(p.at(0, 1) == doctest::Approx(std::numbers::pi / 2));
  CHECK(p.at(0, 2) == doctest::Approx(std::numbers::pi));
  CHECK(p.at(1, 0) == doctest::Approx(-std::numbers::pi / 2));
  const auto g = field_from_amp_phase(a, p, 5.0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(std::abs(g.data()[i] - d[i]) < 1e-15);
  }
}

TEST_CASE("principal phase lies in (-pi, pi]") {
  CHECK(principal_phase({-1.0, -0.0}) == std::numbers::pi);
  CHECK(principal_phase({-1.0, 0.0}) == std::numbers::pi);
  CHECK(principal_phase({1.0, -1e-300}) <= 0.0);
  CHECK(principal_phase({0.0, -1.0}) == doctest::Approx(-std::numbers::pi / 2));
}

TEST_CASE("field_from_amp_phase validates") {
  RealGrid a{2, 2, {1, 1, 1, 1}};
  RealGrid p{2, 2, {0, 0, 0, 0}};
  RealGrid wrong{2, 3, {0, 0, 0, 0, 0, 0}};
  CHECK(error_kind([&] { field_from_amp_phase(a, wrong, 5.0); }) == ErrorKind::shape_mismatch);
  a.values[1] = -1.0;
  CHECK(error_kind([&] { field_from_amp_phase(a, p, 5.0); }) == ErrorKind::invalid_argument);
}

TEST_CASE("volume slices and geometry") {
  std::vector<Complex> d(2 * 2 * 3);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = double(i);
  const ComplexVolume v(2, 2, 3, 5.0, 10.0, 2.5, d);
  CHECK(v.slice_z_mm(2) == 15.0);
  CHECK(v.slice(1)(1, 1) == Complex(7.0));
  CHECK(error_kind([&] { (void)v.slice(3); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([&] { ComplexVolume(2, 2, 3, 5.0, 0.0, 0.0, d); }) ==
        ErrorKind::invalid_argument);
  CHECK(error_kind([&] { ComplexVolume(2, 2, 0, 5.0, 0.0, 1.0, {}); }) ==
        ErrorKind::invalid_argument);
}

namespace {
ScanSample at(double t, double x, double y) { return {t, x, y, 1.0, 0.0}; }
}  // namespace

TEST_CASE("scan trace invariants") {
  CHECK(error_kind([] { ScanTrace({at(0, 0, 0), at(1, 1, 0)}); }) == ErrorKind::degenerate_input);
  CHECK(testing::error_message([] { ScanTrace({}); }).find("fewer than 3 samples") !=
        std::string::npos);
  CHECK(error_kind([] { ScanTrace({at(0, 0, 0), at(1, 1, 0), at(2, 2, 0), at(3, 3, 0)}); }) ==
        ErrorKind::degenerate_input);
  CHECK(error_kind([] { ScanTrace({at(0, 0, 0), at(0, 1, 0), at(2, 0, 1)}); }) ==
        ErrorKind::invalid_argument);
  auto neg = at(2, 0, 1);
  neg.amplitude = -0.5;
  CHECK(error_kind([&] { ScanTrace({at(0, 0, 0), at(1, 1, 0), neg}); }) ==
        ErrorKind::invalid_argument);
  CHECK_NOTHROW(ScanTrace({at(0, 0, 0), at(1, 1, 0), at(2, 0, 1)}));
}

TEST_CASE("registry validation and lookup") {
  const auto reg = default_registry();
  CHECK(reg.size() == 13);
  CHECK(reg.at("PMN-4").category == Category::mine);
  CHECK(std::get<CircleFootprint>(reg.at("PMN-4").footprint).diameter_mm == 95.0);
  CHECK(reg.find("nope") == nullptr);
  CHECK(error_kind([&] { (void)reg.at("nope"); }) == ErrorKind::not_found);

  ObjectSpec a{"a", "A", Category::mine, CircleFootprint{10}, 5};
  CHECK(error_kind([] { ObjectRegistry({}); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([&] { ObjectRegistry({a, a}); }) == ErrorKind::invalid_argument);
  auto bad = a;
  bad.id = "has space";
  CHECK(error_kind([&] { ObjectRegistry({bad}); }) == ErrorKind::invalid_argument);
  bad = a;
  bad.footprint = RectFootprint{10, 0};
  CHECK(error_kind([&] { ObjectRegistry({bad}); }) == ErrorKind::invalid_argument);
}

TEST_CASE("configuration keys round trip") {
  const IndoorConfig c("TYPE-72", 80, Direction::W, 20);
  CHECK(c.key() == "TYPE-72_h80_W_s20");
  CHECK(parse_indoor_key(c.key()) == c);
  CHECK_FALSE(parse_indoor_key("TYPE-72_h81_W_s20"));
  CHECK_FALSE(parse_indoor_key("TYPE-72_h80_X_s20"));
  CHECK_FALSE(parse_indoor_key("a_b_h80_W_s20"));

  const OutdoorConfig o(7, Direction::E);
  CHECK(o.key() == "soil07_E");
  CHECK(parse_outdoor_key("soil07_E") == o);
  CHECK(parse_outdoor_key("soil50_S") == OutdoorConfig(50, Direction::S));
  CHECK_FALSE(parse_outdoor_key("soil00_N"));
  CHECK_FALSE(parse_outdoor_key("dirt01_N"));
  CHECK(error_kind([] { IndoorConfig("x", 60, Direction::N, 0); }) == ErrorKind::invalid_argument);
}

TEST_CASE("orientation turns are clockwise quarter turns") {
  CHECK(quarter_turns(Direction::N) == 0);
  CHECK(quarter_turns(Direction::E) == 1);
  CHECK(quarter_turns(Direction::S) == 2);
  CHECK(quarter_turns(Direction::W) == 3);
}
