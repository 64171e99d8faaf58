#include <doctest.h>

#include <cmath>
#include <numbers>

#include "holoforge/angspec.hpp"
#include "holoforge/fft.hpp"
#include "holoforge/synth.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace holoforge;

namespace {

std::vector<Complex> to_vec(const ComplexField2D& f) { return {f.data().begin(), f.data().end()}; }

// Angular spectrum propagation by direct DFT sums.
std::vector<Complex> oracle_propagate(const std::vector<Complex>& x, std::size_t rows,
                                      std::size_t cols, double pitch, double k, double z) {
  auto F = oracle::dft2(x, rows, cols, -1);
  for (std::size_t u = 0; u < rows; ++u) {
    for (std::size_t v = 0; v < cols; ++v) {
      const double ky = oracle::bin_frequency(u, rows, pitch);
      const double kx = oracle::bin_frequency(v, cols, pitch);
      const double kz2 = k * k - kx * kx - ky * ky;
      auto& bin = F[u * cols + v];
      bin = kz2 >= 0.0 ? bin * std::exp(Complex(0.0, -z * std::sqrt(kz2))) : Complex{};
    }
  }
  auto out = oracle::dft2(F, rows, cols, +1);
  for (auto& v : out) v /= double(rows * cols);
  return out;
}

}  // namespace

TEST_CASE("wavenumbers follow k = 2 pi f sqrt(eps) / c") {
  const double air = PropagationParams::air().wavenumber_per_mm();
  CHECK(air == doctest::Approx(2 * std::numbers::pi * 1.9e9 / 2.99792458e11).epsilon(1e-15));
  CHECK(PropagationParams::soil().wavenumber_per_mm() ==
        doctest::Approx(air * std::sqrt(6.0)).epsilon(1e-14));
  PropagationParams p;
  p.relative_permittivity = 0.5;
  CHECK(testing::error_kind([&] { p.validate(); }) == ErrorKind::invalid_argument);
  p = {};
  p.pad_factor = 17;
  CHECK(testing::error_kind([&] { p.validate(); }) == ErrorKind::invalid_argument);
}

TEST_CASE("angular frequencies use the DFT bin layout") {
  const double tau = 2 * std::numbers::pi;
  const auto even = angular_frequencies(4, 1.0);
  REQUIRE(even.size() == 4);
  CHECK(even[0] == 0.0);
  CHECK(even[1] == doctest::Approx(tau * 0.25));
  CHECK(even[2] == doctest::Approx(-tau * 0.5));
  CHECK(even[3] == doctest::Approx(-tau * 0.25));
  const auto odd = angular_frequencies(5, 2.0);
  CHECK(odd[2] == doctest::Approx(tau * 2.0 / 10.0));
  CHECK(odd[3] == doctest::Approx(-tau * 2.0 / 10.0));
  for (std::size_t n : {6u, 7u, 60u}) {
    const auto f = angular_frequencies(n, 5.0);
    for (std::size_t m = 0; m < n; ++m) {
      CHECK(f[m] == doctest::Approx(oracle::bin_frequency(m, n, 5.0)).epsilon(1e-14));
    }
  }
}

TEST_CASE("fft matches direct DFT sums") {
  const auto f = synth::random_field(6, 10, 1.0, 3);
  auto data = to_vec(f);
  fft::forward(data, 6, 10);
  const auto ref = oracle::dft2(to_vec(f), 6, 10, -1);
  CHECK(oracle::rms(data, ref) < 1e-12 * oracle::rms(ref));
  fft::inverse(data, 6, 10);
  CHECK(oracle::rms(data, to_vec(f)) < 1e-14);
}

TEST_CASE("propagation matches the direct-sum oracle") {
  const auto params = PropagationParams::soil();
  const double k = params.wavenumber_per_mm();
  const auto f = synth::random_field(16, 12, 20.0, 11);
  for (double z : {-35.0, 12.5, 80.0}) {
    const auto got = to_vec(propagate(f, z, params));
    const auto ref = oracle_propagate(to_vec(f), 16, 12, 20.0, k, z);
    CHECK(oracle::rms(got, ref) < 1e-12 * oracle::rms(ref));
  }
}

TEST_CASE("z = 0 is the identity, even on evanescent bins") {
  const auto f = synth::random_field(60, 60, 5.0, 5);
  const auto g = propagate(f, 0.0, PropagationParams::air());
  CHECK(oracle::rms(to_vec(g), to_vec(f)) <= 1e-12 * oracle::rms(to_vec(f)));
}

TEST_CASE("propagation composes for nonzero distances") {
  const auto p = PropagationParams::soil();
  const auto f = synth::random_field(60, 60, 5.0, 8);
  const auto a = propagate(propagate(f, 30.0, p), 45.0, p);
  const auto b = propagate(f, 75.0, p);
  CHECK(oracle::rms(to_vec(a), to_vec(b)) < 1e-12 * oracle::rms(to_vec(b)));
}

TEST_CASE("evanescent filter keeps exactly the propagating disk") {
  const auto p = PropagationParams::soil();
  const double k = p.wavenumber_per_mm();
  const auto f = synth::random_field(12, 12, 20.0, 2);
  const auto filtered = to_vec(evanescent_filter(f, p));
  auto F = oracle::dft2(to_vec(f), 12, 12, -1);
  for (std::size_t u = 0; u < 12; ++u) {
    for (std::size_t v = 0; v < 12; ++v) {
      if (!oracle::propagating(u, v, 12, 12, 20.0, k)) F[u * 12 + v] = 0.0;
    }
  }
  auto ref = oracle::dft2(F, 12, 12, +1);
  for (auto& v : ref) v /= 144.0;
  CHECK(oracle::rms(filtered, ref) < 1e-13);
}

TEST_CASE("decay mode attenuates but keeps evanescent energy") {
  auto p = PropagationParams::air();
  const auto f = synth::random_field(32, 32, 5.0, 4);
  const auto zeroed = propagate(f, 5.0, p);
  p.evanescent = EvanescentMode::decay;
  const auto decayed = propagate(f, 5.0, p);
  const double e_f = oracle::rms(to_vec(f));
  const double e_zero = oracle::rms(to_vec(zeroed));
  const double e_decay = oracle::rms(to_vec(decayed));
  CHECK(e_zero < e_decay);
  CHECK(e_decay < e_f);
}

TEST_CASE("padding keeps the output shape") {
  auto p = PropagationParams::soil();
  p.pad_factor = 2.0;
  const auto f = synth::random_field(20, 24, 5.0, 9);
  const auto g = propagate(f, 40.0, p);
  CHECK(g.rows() == 20);
  CHECK(g.cols() == 24);
  const auto h = propagate(f, 0.0, p);
  CHECK(oracle::rms(to_vec(h), to_vec(f)) <= 1e-12 * oracle::rms(to_vec(f)));
}

TEST_CASE("volume slices equal independent propagations") {
  const auto p = PropagationParams::soil();
  const auto f = synth::random_field(60, 60, 5.0, 6);
  const auto v1 = reconstruct_volume(f, -20.0, 100.0, 7, p);
  const auto v3 = reconstruct_volume(f, -20.0, 100.0, 7, p, 3);
  CHECK(v1 == v3);
  CHECK(v1.dz_mm() == 20.0);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(v1.slice(i) == propagate(f, v1.slice_z_mm(i), p));
  }
  const auto single = reconstruct_volume(f, 40.0, 90.0, 1, p);
  CHECK(single.slices() == 1);
  CHECK(single.slice_z_mm(0) == 40.0);
  CHECK(single.dz_mm() == 50.0);
  CHECK(reconstruct_volume(f, 40.0, 40.0, 1, p).dz_mm() == 1.0);
}

TEST_CASE("volume arguments are validated") {
  const auto f = synth::random_field(8, 8, 5.0, 1);
  const auto p = PropagationParams::air();
  using testing::error_kind;
  CHECK(error_kind([&] { reconstruct_volume(f, 0, 100, 0, p); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([&] { reconstruct_volume(f, 100, 0, 5, p); }) == ErrorKind::invalid_argument);
  CHECK(error_kind([&] { reconstruct_volume(f, 0, INFINITY, 5, p); }) ==
        ErrorKind::invalid_argument);
  CHECK(error_kind([&] { propagate(f, NAN, p); }) == ErrorKind::invalid_argument);
}

TEST_CASE("a buried point focuses at its depth") {
  const auto p = PropagationParams::soil();
  const double k = p.wavenumber_per_mm();
  const auto h = oracle::spherical_wave(60, 60, 5.0, 25, 37, 60.0, k);
  const ComplexField2D f(60, 60, 5.0, h);
  const auto vol = reconstruct_volume(f, 0.0, 200.0, 21, p);
  const auto focus = focus_depth(vol);
  CHECK(std::abs(focus.z_mm - 60.0) <= 10.0);
  const auto slice = vol.slice(focus.slice);
  std::size_t best = 0;
  for (std::size_t i = 1; i < slice.size(); ++i) {
    if (std::abs(slice.data()[i]) > std::abs(slice.data()[best])) best = i;
  }
  CHECK(best / 60 == 25);
  CHECK(best % 60 == 37);
}

TEST_CASE("focus ties go to the shallower slice") {
  std::vector<Complex> d(2 * 2 * 3, Complex(1.0));
  const ComplexVolume v(2, 2, 3, 5.0, 0.0, 10.0, d);
  CHECK(focus_depth(v).slice == 0);
  CHECK(focus_depth(v, FocusMetric::l2_energy).slice == 0);
  CHECK(focus_depth(v, FocusMetric::l2_energy).score == 4.0);
}
