#include <doctest.h>

#include <cmath>

#include "holoforge/fusion.hpp"
#include "holoforge/synth.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace holoforge;
using testing::error_kind;

namespace {

ComplexField2D constant(Complex v, std::size_t n = 4) {
  return {n, n, 5.0, std::vector<Complex>(n * n, v)};
}

std::vector<Complex> to_vec(const ComplexField2D& f) { return {f.data().begin(), f.data().end()}; }

ComplexField2D shifted(const ComplexField2D& f, std::size_t dr, std::size_t dc) {
  std::vector<Complex> d(f.size());
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t c = 0; c < f.cols(); ++c) {
      d[((r + dr) % f.rows()) * f.cols() + (c + dc) % f.cols()] = f(r, c);
    }
  }
  return {f.rows(), f.cols(), f.pitch_mm(), std::move(d)};
}

}  // namespace

TEST_CASE("fusion coefficient range") {
  CHECK_NOTHROW(FusionCoefficient(0.0));
  CHECK_NOTHROW(FusionCoefficient(1.0));
  CHECK(error_kind([] { FusionCoefficient(-0.01); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([] { FusionCoefficient(1.01); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([] { FusionCoefficient(NAN); }) == ErrorKind::invalid_argument);
  CHECK(FusionCoefficient::calibrated().value() == 0.14);
  CHECK(FusionCoefficient::volume_alternative().value() == 0.17);
}

TEST_CASE("fuse endpoints and the 0.14 mix") {
  const auto in = constant({1, 0});
  const auto out = constant({0, 1});
  CHECK(fuse(in, out, FusionCoefficient(0.0)) == out);
  CHECK(fuse(in, out, FusionCoefficient(1.0)) == in);
  const auto mixed = fuse(in, out, FusionCoefficient(0.14));
  for (auto v : mixed.data()) {
    CHECK(std::abs(v - Complex(0.14, 0.86)) < 1e-15);
  }
  const ComplexField2D other(4, 4, 2.5, std::vector<Complex>(16));
  CHECK(error_kind([&] { fuse(in, other, FusionCoefficient(0.5)); }) == ErrorKind::shape_mismatch);
}

TEST_CASE("fuse_volume lifts fuse and checks depth sampling") {
  const ComplexVolume in(4, 4, 1, 5.0, 0.0, 1.0, std::vector<Complex>(16, {1, 0}));
  const ComplexVolume out(4, 4, 1, 5.0, 0.0, 1.0, std::vector<Complex>(16, {0, 1}));
  CHECK(fuse_volume(in, out, FusionCoefficient(0.0)) == out);
  CHECK(fuse_volume(in, out, FusionCoefficient(1.0)) == in);
  const auto mixed = fuse_volume(in, out, FusionCoefficient(0.14));
  for (auto v : mixed.data()) {
    CHECK(std::abs(v - Complex(0.14, 0.86)) < 1e-15);
  }
  const ComplexVolume moved(4, 4, 1, 5.0, 10.0, 1.0, std::vector<Complex>(16));
  CHECK(error_kind([&] { fuse_volume(in, moved, FusionCoefficient(0.5)); }) ==
        ErrorKind::shape_mismatch);
}

TEST_CASE("fuse is linear and bounded") {
  const auto a = synth::random_field(8, 8, 5.0, 1);
  const auto b = synth::random_field(8, 8, 5.0, 2);
  const double alpha = 0.3;
  const auto f = fuse(a, b, FusionCoefficient(alpha));
  const double na = oracle::rms(to_vec(a)), nb = oracle::rms(to_vec(b));
  CHECK(oracle::rms(to_vec(f)) <= alpha * na + (1 - alpha) * nb + 1e-15);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(std::abs(f.data()[i] - (alpha * a.data()[i] + (1 - alpha) * b.data()[i])) < 1e-15);
  }
}

TEST_CASE("alpha from permittivity") {
  CHECK(std::abs(alpha_from_permittivity({1, 6}).value() - 1.0 / 7.0) <= 1e-12);
  CHECK(alpha_from_permittivity({1, 1}).value() == 0.5);
  CHECK(std::abs(alpha_from_permittivity({1, 3}).value() - 0.25) <= 1e-15);
  CHECK(error_kind([] { PermittivityPair(0.5, 6); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([] { PermittivityPair(6, 1); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([] { PermittivityPair(1, 0); }) == ErrorKind::invalid_argument);
}

TEST_CASE("correlation agrees with direct summation") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto a = synth::random_field(9, 7, 5.0, 10 + seed);
    const auto b = synth::random_field(9, 7, 5.0, 20 + seed);
    const double ref = oracle::correlation(to_vec(a), to_vec(b), 9, 7);
    CHECK(std::abs(correlation_score(a, b) - ref) < 1e-9);
    CHECK(std::abs(correlation_score(b, a) - ref) < 1e-9);
  }
}

TEST_CASE("correlation invariances") {
  const auto f = synth::random_field(12, 12, 5.0, 3);
  CHECK(correlation_score(f, f) == doctest::Approx(1.0).epsilon(1e-12));
  std::vector<Complex> scaled(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) scaled[i] = Complex(-2.5, 0.7) * f.data()[i];
  CHECK(correlation_score(f, ComplexField2D(12, 12, 5.0, scaled)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(correlation_score(f, shifted(f, 5, 9)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(correlation_score(f, shifted(f, 0, 1), CorrelationMode::amplitude) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const auto g = synth::random_field(12, 12, 5.0, 4);
  const double s = correlation_score(f, g);
  CHECK(s >= 0.0);
  CHECK(s < 1.0);
  CHECK(correlation_score(shifted(f, 3, 2), g) == doctest::Approx(s).epsilon(1e-12));
}

TEST_CASE("correlation rejects zero norm and shape mismatch") {
  const auto z = constant({0, 0});
  const auto f = synth::random_field(4, 4, 5.0, 1);
  CHECK(error_kind([&] { correlation_score(z, f); }) == ErrorKind::degenerate_input);
  CHECK(error_kind([&] { correlation_score(f, synth::random_field(4, 5, 5.0, 1)); }) ==
        ErrorKind::shape_mismatch);
}

TEST_CASE("calibration recovers the mixing weight") {
  const auto in = synth::random_field(60, 60, 5.0, 100);
  const auto out = synth::random_field(60, 60, 5.0, 200);
  const auto grid = default_alpha_grid();
  REQUIRE(grid.size() == 101);
  CHECK(grid[14] == 0.14);

  auto natural = fuse(in, out, FusionCoefficient(0.14));
  auto r = calibrate_alpha(in, out, natural, grid);
  CHECK(r.best_alpha == 0.14);
  CHECK(r.best_score == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.grid.size() == 101);

  CHECK(calibrate_alpha(in, out, out, grid).best_alpha == 0.0);
  CHECK(calibrate_alpha(in, out, in, grid).best_alpha == 1.0);
  CHECK(calibrate_alpha(in, out, in, {0.1, 0.2, 0.7}).best_alpha == 0.7);
}

TEST_CASE("calibration ties go to the smaller alpha") {
  const auto f = constant({1, 0});
  // every mix of identical fields is the same field
  const auto r = calibrate_alpha(f, f, f, {0.2, 0.4, 0.6});
  CHECK(r.best_alpha == 0.2);
}

TEST_CASE("calibration grid validation") {
  const auto f = synth::random_field(4, 4, 5.0, 1);
  CHECK(error_kind([&] { calibrate_alpha(f, f, f, {}); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([&] { calibrate_alpha(f, f, f, {0.2, 0.2}); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([&] { calibrate_alpha(f, f, f, {0.5, 1.5}); }) == ErrorKind::invalid_argument);
}
