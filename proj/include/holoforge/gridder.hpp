#pragma once

#include <cstddef>

#include "holoforge/field.hpp"

namespace holoforge {

/// Output raster for gridding. Pixel (r, c) has its center at
/// (origin_x_mm + c * pitch_mm, origin_y_mm + r * pitch_mm).
struct GridSpec {
  std::size_t rows = kDefaultGridSize;
  std::size_t cols = kDefaultGridSize;
  double pitch_mm = kDefaultPitchMm;
  double origin_x_mm = 0.0;
  double origin_y_mm = 0.0;

  double pixel_x(std::size_t c) const { return origin_x_mm + static_cast<double>(c) * pitch_mm; }
  double pixel_y(std::size_t r) const { return origin_y_mm + static_cast<double>(r) * pitch_mm; }
};

void validate(const GridSpec& spec);

/// Grid whose pixel (rows/2, cols/2) sits on the center of the trace's
/// bounding box.
GridSpec centered_grid(const ScanTrace& trace,
                       std::size_t rows = kDefaultGridSize,
                       std::size_t cols = kDefaultGridSize,
                       double pitch_mm = kDefaultPitchMm);

/// Scattered scan samples to a regular complex grid.
///
/// Real and imaginary parts are interpolated piecewise-linearly over a
/// Delaunay triangulation of the sample positions. Samples sharing a position
/// are averaged. Pixels outside the position hull take the value of the
/// nearest sample position (ties go to the smaller x, then the smaller y).
/// Affine fields are reproduced exactly inside the hull.
ComplexField2D grid_scan(const ScanTrace& trace, const GridSpec& spec);
ComplexField2D grid_scan(const ScanTrace& trace);

}  // namespace holoforge
