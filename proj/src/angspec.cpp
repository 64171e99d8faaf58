#include "holoforge/angspec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "holoforge/error.hpp"
#include "holoforge/fft.hpp"
#include "parallel.hpp"

namespace holoforge {
namespace {

std::size_t padded_size(std::size_t n, double pad_factor) {
  const auto padded = static_cast<std::size_t>(
      std::llround(std::ceil(static_cast<double>(n) * pad_factor - 1e-9)));
  return std::max(n, padded);
}

// FFT of a (possibly zero-padded) field together with kz^2 per bin.
class Spectrum {
 public:
  Spectrum(const ComplexField2D& field, const PropagationParams& params)
      : rows_(field.rows()),
        cols_(field.cols()),
        prow_(padded_size(field.rows(), params.pad_factor)),
        pcol_(padded_size(field.cols(), params.pad_factor)),
        pitch_(field.pitch_mm()),
        mode_(params.evanescent),
        data_(prow_ * pcol_) {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) data_[r * pcol_ + c] = field(r, c);
    }
    fft::forward(data_, prow_, pcol_);

    const double k = params.wavenumber_per_mm();
    const auto grid = wavenumber_grid(prow_, pcol_, pitch_);
    kz2_.resize(prow_ * pcol_);
    for (std::size_t r = 0; r < prow_; ++r) {
      for (std::size_t c = 0; c < pcol_; ++c) {
        kz2_[r * pcol_ + c] = k * k - grid.kx[c] * grid.kx[c] - grid.ky[r] * grid.ky[r];
      }
    }
  }

  Complex transfer(std::size_t bin, double z_mm) const {
    if (z_mm == 0.0) return {1.0, 0.0};
    const double kz2 = kz2_[bin];
    if (kz2 >= 0.0) return std::polar(1.0, -z_mm * std::sqrt(kz2));
    if (mode_ == EvanescentMode::zero) return {0.0, 0.0};
    return {std::exp(-std::abs(z_mm) * std::sqrt(-kz2)), 0.0};
  }

  std::vector<Complex> plane_at(double z_mm) const {
    std::vector<Complex> work(data_.size());
    for (std::size_t i = 0; i < work.size(); ++i) work[i] = data_[i] * transfer(i, z_mm);
    fft::inverse(work, prow_, pcol_);
    return crop(work);
  }

  std::vector<Complex> filtered() const {
    std::vector<Complex> work(data_.size());
    for (std::size_t i = 0; i < work.size(); ++i) {
      work[i] = kz2_[i] >= 0.0 ? data_[i] : Complex{};
    }
    fft::inverse(work, prow_, pcol_);
    return crop(work);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double pitch() const { return pitch_; }

 private:
  std::vector<Complex> crop(const std::vector<Complex>& padded) const {
    if (prow_ == rows_ && pcol_ == cols_) return padded;
    std::vector<Complex> out(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::copy_n(padded.begin() + static_cast<std::ptrdiff_t>(r * pcol_), cols_,
                  out.begin() + static_cast<std::ptrdiff_t>(r * cols_));
    }
    return out;
  }

  std::size_t rows_, cols_, prow_, pcol_;
  double pitch_;
  EvanescentMode mode_;
  std::vector<Complex> data_;
  std::vector<double> kz2_;
};

}  // namespace

double PropagationParams::wavenumber_per_mm() const {
  validate();
  return 2.0 * std::numbers::pi * frequency_hz * std::sqrt(relative_permittivity) /
         kSpeedOfLightMmPerS;
}

void PropagationParams::validate() const {
  require(std::isfinite(frequency_hz) && frequency_hz > 0.0,
          ErrorKind::invalid_argument, "frequency must be positive");
  require(std::isfinite(relative_permittivity) && relative_permittivity >= 1.0,
          ErrorKind::invalid_argument, "relative permittivity must be >= 1");
  require(std::isfinite(pad_factor) && pad_factor >= 1.0 && pad_factor <= 16.0,
          ErrorKind::invalid_argument, "pad factor must lie in [1, 16]");
}

std::vector<double> angular_frequencies(std::size_t n, double pitch_mm) {
  require(n >= 1 && pitch_mm > 0.0, ErrorKind::invalid_argument,
          "frequency axis needs n >= 1 and positive pitch");
  std::vector<double> k(n);
  const double step = 2.0 * std::numbers::pi / (static_cast<double>(n) * pitch_mm);
  const auto positive = static_cast<long>((n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    const long m = static_cast<long>(i) <= positive ? static_cast<long>(i)
                                                    : static_cast<long>(i) - static_cast<long>(n);
    k[i] = static_cast<double>(m) * step;
  }
  return k;
}

WavenumberGrid wavenumber_grid(std::size_t rows, std::size_t cols, double pitch_mm) {
  require(rows >= 2 && cols >= 2 && std::isfinite(pitch_mm) && pitch_mm > 0.0,
          ErrorKind::invalid_argument,
          "wavenumber grid needs rows, cols >= 2 and positive pitch");
  return {angular_frequencies(cols, pitch_mm), angular_frequencies(rows, pitch_mm)};
}

ComplexField2D propagate(const ComplexField2D& field, double z_mm,
                         const PropagationParams& params) {
  require(std::isfinite(z_mm), ErrorKind::invalid_argument,
          "propagation distance must be finite");
  params.validate();
  Spectrum spectrum(field, params);
  return ComplexField2D(field.rows(), field.cols(), field.pitch_mm(),
                        spectrum.plane_at(z_mm));
}

ComplexField2D evanescent_filter(const ComplexField2D& field,
                                 const PropagationParams& params) {
  params.validate();
  Spectrum spectrum(field, params);
  return ComplexField2D(field.rows(), field.cols(), field.pitch_mm(),
                        spectrum.filtered());
}

ComplexVolume reconstruct_volume(const ComplexField2D& field, double z0_mm,
                                 double z1_mm, std::size_t slices,
                                 const PropagationParams& params,
                                 std::size_t jobs) {
  require(slices >= 1, ErrorKind::invalid_argument,
          "slice count must be at least 1");
  require(std::isfinite(z0_mm) && std::isfinite(z1_mm),
          ErrorKind::invalid_argument, "depth range must be finite");
  require(slices == 1 || z1_mm > z0_mm, ErrorKind::invalid_argument,
          "z1 must exceed z0 when more than one slice is requested");
  params.validate();

  const double dz = slices > 1 ? (z1_mm - z0_mm) / static_cast<double>(slices - 1)
                               : (z1_mm > z0_mm ? z1_mm - z0_mm : 1.0);
  const Spectrum spectrum(field, params);
  const std::size_t plane = field.size();
  std::vector<Complex> data(plane * slices);

  auto compute = [&](std::size_t i) {
    const double z = z0_mm + static_cast<double>(i) * dz;
    auto slice = spectrum.plane_at(z);
    std::copy(slice.begin(), slice.end(),
              data.begin() + static_cast<std::ptrdiff_t>(i * plane));
  };

  detail::parallel_for(slices, jobs, compute);

  return ComplexVolume(field.rows(), field.cols(), slices, field.pitch_mm(), z0_mm,
                       dz, std::move(data));
}

FocusResult focus_depth(const ComplexVolume& volume, FocusMetric metric) {
  FocusResult best;
  best.score = -1.0;
  for (std::size_t i = 0; i < volume.slices(); ++i) {
    double score = 0.0;
    for (const auto& v : volume.slice_data(i)) {
      if (metric == FocusMetric::l2_energy) {
        score += std::norm(v);
      } else {
        score = std::max(score, std::abs(v));
      }
    }
    if (score > best.score) {
      best = {i, volume.slice_z_mm(i), score};
    }
  }
  return best;
}

}  // namespace holoforge
