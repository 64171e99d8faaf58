#pragma once

#include <vector>

#include "holoforge/field.hpp"

namespace holoforge {

/// Mixing weight of the in-air hologram, in [0, 1].
class FusionCoefficient {
 public:
  explicit FusionCoefficient(double alpha);

  double value() const noexcept { return alpha_; }

  // Empirically calibrated default for holograms and volumes.
  static FusionCoefficient calibrated() { return FusionCoefficient(0.14); }
  // Alternative weight quoted for reconstructed volumes.
  static FusionCoefficient volume_alternative() { return FusionCoefficient(0.17); }

  friend bool operator==(const FusionCoefficient&, const FusionCoefficient&) = default;

 private:
  double alpha_;
};

struct PermittivityPair {
  double air = 1.0;
  double soil = 6.0;

  PermittivityPair(double eps_air, double eps_soil);
};

// H = alpha * H_in + (1 - alpha) * H_out, elementwise.
ComplexField2D fuse(const ComplexField2D& h_in, const ComplexField2D& h_out,
                    FusionCoefficient alpha);
ComplexVolume fuse_volume(const ComplexVolume& v_in, const ComplexVolume& v_out,
                          FusionCoefficient alpha);

// Solves alpha / (1 - alpha) = eps_air / eps_soil.
FusionCoefficient alpha_from_permittivity(const PermittivityPair& pair);

enum class CorrelationMode {
  complex,
  // Correlates |a| with |b|.
  amplitude,
};

/// max over circular shifts s of |<a, shift_s(b)>| / (||a|| ||b||), in [0, 1].
/// Computed with the cross-correlation theorem. Zero-norm input is an error.
double correlation_score(const ComplexField2D& a, const ComplexField2D& b,
                         CorrelationMode mode = CorrelationMode::complex);

struct AlphaScore {
  double alpha = 0.0;
  double score = 0.0;
};

struct AlphaSweepResult {
  std::vector<AlphaScore> grid;
  double best_alpha = 0.0;
  double best_score = 0.0;
};

// {0.00, 0.01, ..., 1.00}
std::vector<double> default_alpha_grid();

/// Scores fuse(h_in, h_out, alpha) against the natural scan for every alpha
/// in the grid; the best is the argmax with ties going to the smaller alpha.
AlphaSweepResult calibrate_alpha(const ComplexField2D& h_in,
                                 const ComplexField2D& h_out,
                                 const ComplexField2D& natural,
                                 const std::vector<double>& grid,
                                 CorrelationMode mode = CorrelationMode::complex);

}  // namespace holoforge
