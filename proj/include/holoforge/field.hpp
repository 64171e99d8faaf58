#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace holoforge {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultGridSize = 60;
inline constexpr double kDefaultPitchMm = 5.0;

/// Real-valued row-major grid (amplitude, phase, masks as doubles).
struct RealGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

/// A complex hologram sampled on a regular grid with a physical pixel pitch.
///
/// Immutable once constructed; the constructor rejects bad shapes, a
/// non-positive pitch and non-finite samples.
class ComplexField2D {
 public:
  ComplexField2D(std::size_t rows, std::size_t cols, double pitch_mm,
                 std::vector<Complex> data);

  static ComplexField2D zeros(std::size_t rows = kDefaultGridSize,
                              std::size_t cols = kDefaultGridSize,
                              double pitch_mm = kDefaultPitchMm);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  double pitch_mm() const noexcept { return pitch_mm_; }

  std::span<const Complex> data() const noexcept { return data_; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool same_geometry(const ComplexField2D& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           pitch_mm_ == other.pitch_mm_;
  }

  friend bool operator==(const ComplexField2D&, const ComplexField2D&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  double pitch_mm_;
  std::vector<Complex> data_;
};

/// Stack of complex slices at depths z0, z0 + dz, ... (slice-major storage).
class ComplexVolume {
 public:
  ComplexVolume(std::size_t rows, std::size_t cols, std::size_t slices,
                double pitch_mm, double z0_mm, double dz_mm,
                std::vector<Complex> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t slices() const noexcept { return slices_; }
  double pitch_mm() const noexcept { return pitch_mm_; }
  double z0_mm() const noexcept { return z0_mm_; }
  double dz_mm() const noexcept { return dz_mm_; }
  double slice_z_mm(std::size_t index) const noexcept {
    return z0_mm_ + static_cast<double>(index) * dz_mm_;
  }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<const Complex> slice_data(std::size_t index) const;
  ComplexField2D slice(std::size_t index) const;

  bool same_geometry(const ComplexVolume& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           slices_ == other.slices_ && pitch_mm_ == other.pitch_mm_ &&
           z0_mm_ == other.z0_mm_ && dz_mm_ == other.dz_mm_;
  }

  friend bool operator==(const ComplexVolume&, const ComplexVolume&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t slices_;
  double pitch_mm_;
  double z0_mm_;
  double dz_mm_;
  std::vector<Complex> data_;
};

struct ScanSample {
  double t_ms = 0.0;
  double x_mm = 0.0;
  double y_mm = 0.0;
  double amplitude = 0.0;
  double phase_rad = 0.0;

  Complex value() const { return std::polar(amplitude, phase_rad); }

  friend bool operator==(const ScanSample&, const ScanSample&) = default;
};

/// Time-ordered samples from one zig-zag acquisition.
class ScanTrace {
 public:
  explicit ScanTrace(std::vector<ScanSample> samples);

  std::span<const ScanSample> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }

  friend bool operator==(const ScanTrace&, const ScanTrace&) = default;

 private:
  std::vector<ScanSample> samples_;
};

ComplexField2D field_from_amp_phase(const RealGrid& amp, const RealGrid& phase,
                                    double pitch_mm);

RealGrid amplitude(const ComplexField2D& field);

// Principal argument in (-pi, pi].
RealGrid phase(const ComplexField2D& field);
double principal_phase(const Complex& value);

}  // namespace holoforge
