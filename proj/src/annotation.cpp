#include "holoforge/annotation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <numeric>

#include "holoforge/error.hpp"

namespace holoforge {

std::size_t Mask::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

BBox make_annotation(const ObjectSpec& spec, const IndoorConfig& cfg,
                     const GridSpec& grid, Placement placement) {
  validate(grid);
  const double cx = static_cast<double>(grid.cols / 2) + placement.offset_x_mm / grid.pitch_mm;
  const double cy = static_cast<double>(grid.rows / 2) + placement.offset_y_mm / grid.pitch_mm;

  // Clockwise quarter turn in image coordinates (y down) maps the local
  // axes (u, v) onto (x, y) by exact integer matrices.
  static constexpr int kCos[4] = {1, 0, -1, 0};
  static constexpr int kSin[4] = {0, 1, 0, -1};
  const int turn = quarter_turns(cfg.orientation);
  const int cs = kCos[turn];
  const int sn = kSin[turn];

  auto inside = std::visit(
      [&](const auto& fp) -> std::function<bool(double, double)> {
        using T = std::decay_t<decltype(fp)>;
        if constexpr (std::is_same_v<T, CircleFootprint>) {
          const double r = 0.5 * fp.diameter_mm / grid.pitch_mm;
          return [r](double dx, double dy) { return dx * dx + dy * dy <= r * r; };
        } else {
          const double e1 = 0.5 * fp.l1_mm / grid.pitch_mm;
          const double e2 = 0.5 * fp.l2_mm / grid.pitch_mm;
          return [=](double dx, double dy) {
            // Inverse rotation back to the object's local frame.
            const double u = cs * dx + sn * dy;
            const double v = -sn * dx + cs * dy;
            return u >= -e1 && u < e1 && v >= -e2 && v < e2;
          };
        }
      },
      spec.footprint);

  // Half extents along image x and y after rotation.
  const auto [ext_x, ext_y] = std::visit(
      [&](const auto& fp) -> std::pair<double, double> {
        using T = std::decay_t<decltype(fp)>;
        if constexpr (std::is_same_v<T, CircleFootprint>) {
          const double r = 0.5 * fp.diameter_mm / grid.pitch_mm;
          return {r, r};
        } else {
          const double e1 = 0.5 * fp.l1_mm / grid.pitch_mm;
          const double e2 = 0.5 * fp.l2_mm / grid.pitch_mm;
          return turn % 2 == 0 ? std::pair{e1, e2} : std::pair{e2, e1};
        }
      },
      spec.footprint);
  const double max_x = static_cast<double>(grid.cols) - 0.5;
  const double max_y = static_cast<double>(grid.rows) - 0.5;
  require(cx - ext_x >= -0.5 && cx + ext_x <= max_x && cy - ext_y >= -0.5 &&
              cy + ext_y <= max_y,
          ErrorKind::invalid_argument,
          "footprint of '" + spec.id + "' exceeds the " + std::to_string(grid.rows) +
              "x" + std::to_string(grid.cols) + " grid");

  BBox box;
  box.mask = Mask{grid.rows, grid.cols, std::vector<std::uint8_t>(grid.rows * grid.cols, 0)};
  int min_c = static_cast<int>(grid.cols), max_c = -1;
  int min_r = static_cast<int>(grid.rows), max_r = -1;
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      if (!inside(static_cast<double>(c) - cx, static_cast<double>(r) - cy)) continue;
      box.mask.bits[r * grid.cols + c] = 1;
      min_c = std::min(min_c, static_cast<int>(c));
      max_c = std::max(max_c, static_cast<int>(c));
      min_r = std::min(min_r, static_cast<int>(r));
      max_r = std::max(max_r, static_cast<int>(r));
    }
  }
  require(max_c >= 0, ErrorKind::degenerate_input,
          "footprint of '" + spec.id + "' covers no pixel center");
  box.x = min_c;
  box.y = min_r;
  box.w = max_c - min_c + 1;
  box.h = max_r - min_r + 1;
  return box;
}

std::vector<std::uint32_t> encode_rle(const Mask& mask) {
  std::vector<std::uint32_t> counts;
  std::uint8_t current = 0;
  std::uint32_t run = 0;
  for (std::size_t c = 0; c < mask.cols; ++c) {
    for (std::size_t r = 0; r < mask.rows; ++r) {
      const std::uint8_t bit = mask.bits[r * mask.cols + c] ? 1 : 0;
      if (bit != current) {
        counts.push_back(run);
        run = 0;
        current = bit;
      }
      ++run;
    }
  }
  counts.push_back(run);
  return counts;
}

Mask decode_rle(const std::vector<std::uint32_t>& counts, std::size_t rows,
                std::size_t cols) {
  const std::uint64_t total =
      std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  require(total == rows * cols, ErrorKind::format,
          "RLE run lengths do not cover the mask");
  Mask mask{rows, cols, std::vector<std::uint8_t>(rows * cols, 0)};
  std::size_t pos = 0;
  std::uint8_t bit = 0;
  for (auto run : counts) {
    for (std::uint32_t i = 0; i < run; ++i, ++pos) {
      const std::size_t c = pos / rows;
      const std::size_t r = pos % rows;
      mask.bits[r * cols + c] = bit;
    }
    bit ^= 1;
  }
  return mask;
}

}  // namespace holoforge
