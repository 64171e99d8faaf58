#include "holoforge/field.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "holoforge/error.hpp"

namespace holoforge {
namespace {

bool all_finite(std::span<const Complex> data) {
  for (const auto& v : data) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

void check_plane(std::size_t rows, std::size_t cols, double pitch_mm) {
  require(rows >= 2 && cols >= 2, ErrorKind::invalid_argument,
          "grid must be at least 2x2, got " + std::to_string(rows) + "x" +
              std::to_string(cols));
  require(std::isfinite(pitch_mm) && pitch_mm > 0.0,
          ErrorKind::invalid_argument, "pitch must be positive and finite");
}

}  // namespace

ComplexField2D::ComplexField2D(std::size_t rows, std::size_t cols,
                               double pitch_mm, std::vector<Complex> data)
    : rows_(rows), cols_(cols), pitch_mm_(pitch_mm), data_(std::move(data)) {
  check_plane(rows_, cols_, pitch_mm_);
  require(data_.size() == rows_ * cols_, ErrorKind::shape_mismatch,
          "field data length " + std::to_string(data_.size()) +
              " does not match " + std::to_string(rows_) + "x" +
              std::to_string(cols_));
  require(all_finite(data_), ErrorKind::invalid_argument,
          "field contains non-finite samples");
}

ComplexField2D ComplexField2D::zeros(std::size_t rows, std::size_t cols,
                                     double pitch_mm) {
  return ComplexField2D(rows, cols, pitch_mm,
                        std::vector<Complex>(rows * cols, Complex{}));
}

ComplexVolume::ComplexVolume(std::size_t rows, std::size_t cols,
                             std::size_t slices, double pitch_mm, double z0_mm,
                             double dz_mm, std::vector<Complex> data)
    : rows_(rows),
      cols_(cols),
      slices_(slices),
      pitch_mm_(pitch_mm),
      z0_mm_(z0_mm),
      dz_mm_(dz_mm),
      data_(std::move(data)) {
  check_plane(rows_, cols_, pitch_mm_);
  require(slices_ >= 1, ErrorKind::invalid_argument,
          "volume needs at least one slice");
  require(std::isfinite(z0_mm_), ErrorKind::invalid_argument,
          "z0 must be finite");
  require(std::isfinite(dz_mm_) && dz_mm_ > 0.0, ErrorKind::invalid_argument,
          "slice spacing must be positive");
  require(data_.size() == rows_ * cols_ * slices_, ErrorKind::shape_mismatch,
          "volume data length does not match rows*cols*slices");
  require(all_finite(data_), ErrorKind::invalid_argument,
          "volume contains non-finite samples");
}

std::span<const Complex> ComplexVolume::slice_data(std::size_t index) const {
  require(index < slices_, ErrorKind::invalid_argument,
          "slice index out of range");
  const std::size_t plane = rows_ * cols_;
  return std::span<const Complex>(data_).subspan(index * plane, plane);
}

ComplexField2D ComplexVolume::slice(std::size_t index) const {
  auto span = slice_data(index);
  return ComplexField2D(rows_, cols_, pitch_mm_,
                        std::vector<Complex>(span.begin(), span.end()));
}

ScanTrace::ScanTrace(std::vector<ScanSample> samples)
    : samples_(std::move(samples)) {
  require(samples_.size() >= 3, ErrorKind::degenerate_input,
          "fewer than 3 samples");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    require(std::isfinite(s.t_ms) && std::isfinite(s.x_mm) &&
                std::isfinite(s.y_mm) && std::isfinite(s.amplitude) &&
                std::isfinite(s.phase_rad),
            ErrorKind::invalid_argument,
            "sample " + std::to_string(i) + " has a non-finite value");
    require(s.amplitude >= 0.0, ErrorKind::invalid_argument,
            "sample " + std::to_string(i) + " has negative amplitude");
    if (i > 0) {
      require(s.t_ms > samples_[i - 1].t_ms, ErrorKind::invalid_argument,
              "timestamps must be strictly increasing (sample " +
                  std::to_string(i) + ")");
    }
  }

  // Non-collinearity: some sample must leave the line through the first point
  // and the point farthest from it.
  const auto& p0 = samples_.front();
  std::size_t far = 0;
  double far_d2 = 0.0;
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    const double dx = samples_[i].x_mm - p0.x_mm;
    const double dy = samples_[i].y_mm - p0.y_mm;
    if (dx * dx + dy * dy > far_d2) {
      far_d2 = dx * dx + dy * dy;
      far = i;
    }
  }
  require(far_d2 > 0.0, ErrorKind::degenerate_input,
          "all sample positions coincide");
  const double ux = samples_[far].x_mm - p0.x_mm;
  const double uy = samples_[far].y_mm - p0.y_mm;
  const double len = std::sqrt(far_d2);
  bool spread = false;
  for (const auto& s : samples_) {
    const double cross = ux * (s.y_mm - p0.y_mm) - uy * (s.x_mm - p0.x_mm);
    if (std::abs(cross) / len > 1e-9 * len) {
      spread = true;
      break;
    }
  }
  require(spread, ErrorKind::degenerate_input,
          "sample positions are collinear (zero-area hull)");
}

ComplexField2D field_from_amp_phase(const RealGrid& amp, const RealGrid& phase,
                                    double pitch_mm) {
  require(amp.rows == phase.rows && amp.cols == phase.cols &&
              amp.values.size() == amp.rows * amp.cols &&
              phase.values.size() == phase.rows * phase.cols,
          ErrorKind::shape_mismatch, "amplitude and phase grids differ in shape");
  std::vector<Complex> data(amp.values.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double a = amp.values[i];
    const double p = phase.values[i];
    require(std::isfinite(a) && std::isfinite(p), ErrorKind::invalid_argument,
            "amplitude/phase contains non-finite values");
    require(a >= 0.0, ErrorKind::invalid_argument, "negative amplitude");
    data[i] = std::polar(a, p);
  }
  return ComplexField2D(amp.rows, amp.cols, pitch_mm, std::move(data));
}

RealGrid amplitude(const ComplexField2D& field) {
  RealGrid out{field.rows(), field.cols(), {}};
  out.values.reserve(field.size());
  for (const auto& v : field.data()) out.values.push_back(std::abs(v));
  return out;
}

double principal_phase(const Complex& value) {
  const double p = std::arg(value);
  // std::arg returns -pi for a negative real with negative-zero imaginary part.
  return p <= -std::numbers::pi ? std::numbers::pi : p;
}

RealGrid phase(const ComplexField2D& field) {
  RealGrid out{field.rows(), field.cols(), {}};
  out.values.reserve(field.size());
  for (const auto& v : field.data()) out.values.push_back(principal_phase(v));
  return out;
}

}  // namespace holoforge
