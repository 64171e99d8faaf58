#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "holoforge/gridder.hpp"
#include "holoforge/registry.hpp"

namespace holoforge {

/// Binary object mask over the full image grid (row-major, 1 = object).
struct Mask {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> bits;

  bool at(std::size_t r, std::size_t c) const { return bits[r * cols + c] != 0; }
  std::size_t count() const;

  friend bool operator==(const Mask&, const Mask&) = default;
};

/// Pixel-space box (columns x, rows y) plus the footprint mask it encloses.
struct BBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;
  Mask mask;

  friend bool operator==(const BBox&, const BBox&) = default;
};

/// Where the object sits relative to the image center, in millimeters.
struct Placement {
  double offset_x_mm = 0.0;
  double offset_y_mm = 0.0;
};

/// Rasterizes an object footprint onto the grid.
///
/// The footprint center is pixel (rows/2, cols/2) shifted by the placement
/// offset. The footprint turns clockwise by the orientation (N/E/S/W =
/// 0/90/180/270 degrees). A pixel belongs to the mask when its center lies
/// inside the footprint: circles are closed, rectangles cover [-l/2, l/2) on
/// each local axis. The box is the tight bound of the mask. Height and slope
/// do not change the footprint.
BBox make_annotation(const ObjectSpec& spec, const IndoorConfig& cfg,
                     const GridSpec& grid, Placement placement = {});

/// Uncompressed COCO-style run lengths: column-major scan, runs alternate
/// starting with background (the first run may be 0).
std::vector<std::uint32_t> encode_rle(const Mask& mask);
Mask decode_rle(const std::vector<std::uint32_t>& counts, std::size_t rows,
                std::size_t cols);

}  // namespace holoforge
