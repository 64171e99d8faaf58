#include "holoforge/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "holoforge/error.hpp"
#include "holoforge/fft.hpp"

namespace holoforge {
namespace {

std::vector<Complex> mix(std::span<const Complex> a, std::span<const Complex> b,
                         double alpha) {
  std::vector<Complex> out(a.size());
  const double beta = 1.0 - alpha;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha * a[i] + beta * b[i];
  return out;
}

std::vector<Complex> channel(const ComplexField2D& f, CorrelationMode mode) {
  std::vector<Complex> out(f.data().begin(), f.data().end());
  if (mode == CorrelationMode::amplitude) {
    for (auto& v : out) v = std::abs(v);
  }
  return out;
}

double l2_norm(std::span<const Complex> v) {
  double sum = 0.0;
  for (const auto& x : v) sum += std::norm(x);
  return std::sqrt(sum);
}

}  // namespace

FusionCoefficient::FusionCoefficient(double alpha) : alpha_(alpha) {
  require(std::isfinite(alpha) && alpha >= 0.0 && alpha <= 1.0,
          ErrorKind::invalid_argument,
          "fusion coefficient must lie in [0, 1], got " + std::to_string(alpha));
}

PermittivityPair::PermittivityPair(double eps_air, double eps_soil)
    : air(eps_air), soil(eps_soil) {
  require(std::isfinite(air) && std::isfinite(soil) && air >= 1.0 && soil >= 1.0,
          ErrorKind::invalid_argument, "relative permittivities must be >= 1");
  require(soil >= air, ErrorKind::invalid_argument,
          "soil permittivity must not be below the air permittivity");
}

ComplexField2D fuse(const ComplexField2D& h_in, const ComplexField2D& h_out,
                    FusionCoefficient alpha) {
  require(h_in.same_geometry(h_out), ErrorKind::shape_mismatch,
          "fusion inputs differ in shape or pitch");
  return ComplexField2D(h_in.rows(), h_in.cols(), h_in.pitch_mm(),
                        mix(h_in.data(), h_out.data(), alpha.value()));
}

ComplexVolume fuse_volume(const ComplexVolume& v_in, const ComplexVolume& v_out,
                          FusionCoefficient alpha) {
  require(v_in.same_geometry(v_out), ErrorKind::shape_mismatch,
          "volume fusion inputs differ in shape, pitch or depth sampling");
  return ComplexVolume(v_in.rows(), v_in.cols(), v_in.slices(), v_in.pitch_mm(),
                       v_in.z0_mm(), v_in.dz_mm(),
                       mix(v_in.data(), v_out.data(), alpha.value()));
}

FusionCoefficient alpha_from_permittivity(const PermittivityPair& pair) {
  const double ratio = pair.air / pair.soil;
  return FusionCoefficient(ratio / (1.0 + ratio));
}

double correlation_score(const ComplexField2D& a, const ComplexField2D& b,
                         CorrelationMode mode) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::shape_mismatch,
          "correlation inputs differ in shape");
  auto fa = channel(a, mode);
  auto fb = channel(b, mode);
  const double norm = l2_norm(fa) * l2_norm(fb);
  require(norm > 0.0, ErrorKind::degenerate_input,
          "correlation score is undefined for a zero-norm field");

  // c[s] = sum_n a[n + s] conj(b[n])  <=>  C = A * conj(B)
  fft::forward(fa, a.rows(), a.cols());
  fft::forward(fb, b.rows(), b.cols());
  for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= std::conj(fb[i]);
  fft::inverse(fa, a.rows(), a.cols());

  double peak = 0.0;
  for (const auto& v : fa) peak = std::max(peak, std::abs(v));
  return std::clamp(peak / norm, 0.0, 1.0);
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid(101);
  for (int i = 0; i <= 100; ++i) grid[static_cast<std::size_t>(i)] = i / 100.0;
  return grid;
}

AlphaSweepResult calibrate_alpha(const ComplexField2D& h_in,
                                 const ComplexField2D& h_out,
                                 const ComplexField2D& natural,
                                 const std::vector<double>& grid,
                                 CorrelationMode mode) {
  require(!grid.empty(), ErrorKind::invalid_argument, "alpha grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require(grid[i] >= 0.0 && grid[i] <= 1.0, ErrorKind::invalid_argument,
            "alpha grid values must lie in [0, 1]");
    require(i == 0 || grid[i] > grid[i - 1], ErrorKind::invalid_argument,
            "alpha grid must be strictly increasing");
  }
  require(h_in.same_geometry(h_out) && h_in.same_geometry(natural),
          ErrorKind::shape_mismatch, "calibration inputs differ in shape or pitch");

  AlphaSweepResult result;
  result.grid.reserve(grid.size());
  result.best_score = -1.0;
  for (double alpha : grid) {
    const double score =
        correlation_score(fuse(h_in, h_out, FusionCoefficient(alpha)), natural, mode);
    result.grid.push_back({alpha, score});
    if (score > result.best_score) {
      result.best_score = score;
      result.best_alpha = alpha;
    }
  }
  return result;
}

}  // namespace holoforge
