#pragma once

#include <cstddef>
#include <vector>

#include "holoforge/field.hpp"

namespace holoforge {

inline constexpr double kSpeedOfLightMmPerS = 2.99792458e11;
inline constexpr double kDefaultFrequencyHz = 1.9e9;
inline constexpr double kAirPermittivity = 1.0;
inline constexpr double kSoilPermittivity = 6.0;

enum class EvanescentMode {
  // Components with kx^2 + ky^2 > k^2 are removed for any z != 0.
  zero,
  // Components decay as exp(-|z| * sqrt(kx^2 + ky^2 - k^2)).
  decay,
};

struct PropagationParams {
  double frequency_hz = kDefaultFrequencyHz;
  double relative_permittivity = kAirPermittivity;
  EvanescentMode evanescent = EvanescentMode::zero;
  // Zero-padding factor applied before the FFT (1 = none).
  double pad_factor = 1.0;

  static PropagationParams air() { return {}; }
  static PropagationParams soil() {
    PropagationParams p;
    p.relative_permittivity = kSoilPermittivity;
    return p;
  }

  // k = 2 pi f sqrt(eps_r) / c, in rad/mm.
  double wavenumber_per_mm() const;
  void validate() const;
};

/// Angular spatial frequencies in FFT order (rad/mm): kx per column, ky per row.
struct WavenumberGrid {
  std::vector<double> kx;
  std::vector<double> ky;
};

// Frequencies of an n-point DFT with sample spacing pitch_mm:
// 2*pi*m/(n*pitch) for m = 0, 1, ..., then negative bins (Nyquist negative).
std::vector<double> angular_frequencies(std::size_t n, double pitch_mm);
WavenumberGrid wavenumber_grid(std::size_t rows, std::size_t cols, double pitch_mm);

/// Angular-spectrum propagation of a hologram by z millimeters:
/// IFFT{ FFT{f} * exp(-j z sqrt(k^2 - kx^2 - ky^2)) }.
/// z = 0 is the identity. Negative z back-propagates.
ComplexField2D propagate(const ComplexField2D& field, double z_mm,
                         const PropagationParams& params);

/// The field with all evanescent spectral components removed.
ComplexField2D evanescent_filter(const ComplexField2D& field,
                                 const PropagationParams& params);

/// Slice i sits at z0 + i*(z1-z0)/(slices-1); a single slice sits at z0.
/// Slices are computed from one shared spectrum and are bit-identical to
/// independent propagate() calls. jobs > 1 spreads slices over threads.
ComplexVolume reconstruct_volume(const ComplexField2D& field, double z0_mm,
                                 double z1_mm, std::size_t slices,
                                 const PropagationParams& params,
                                 std::size_t jobs = 1);

enum class FocusMetric {
  // Largest single-pixel amplitude in the slice.
  peak_amplitude,
  // Sum of squared magnitudes.
  l2_energy,
};

struct FocusResult {
  std::size_t slice = 0;
  double z_mm = 0.0;
  double score = 0.0;
};

// Ties resolve toward the smaller z.
FocusResult focus_depth(const ComplexVolume& volume,
                        FocusMetric metric = FocusMetric::peak_amplitude);

}  // namespace holoforge
