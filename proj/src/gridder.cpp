#include "holoforge/gridder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include <boost/polygon/voronoi.hpp>

#include "holoforge/error.hpp"

namespace holoforge {
namespace {

using boost::polygon::point_data;
using boost::polygon::voronoi_diagram;

struct Site {
  double x = 0.0;
  double y = 0.0;
  Complex value;
};

struct Triangle {
  std::size_t a, b, c;
};

// Merges samples that share a quantized position. The quantized integer
// coordinates feed the exact-predicate triangulation; the averaged double
// coordinates are used for interpolation.
std::pair<std::vector<Site>, std::vector<point_data<int>>> merge_sites(
    const ScanTrace& trace) {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const auto& s : trace.samples()) {
    min_x = std::min(min_x, s.x_mm);
    min_y = std::min(min_y, s.y_mm);
    max_x = std::max(max_x, s.x_mm);
    max_y = std::max(max_y, s.y_mm);
  }
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-3});
  // Up to 1e6 steps per mm, capped so coordinates stay below 2^30.
  const double scale = std::min(1e6, 1e9 / extent);

  struct Accum {
    double x = 0.0, y = 0.0;
    Complex value;
    std::size_t count = 0;
  };
  std::map<std::pair<int, int>, Accum> cells;
  for (const auto& s : trace.samples()) {
    const auto ix = static_cast<int>(std::llround((s.x_mm - min_x) * scale));
    const auto iy = static_cast<int>(std::llround((s.y_mm - min_y) * scale));
    auto& acc = cells[{ix, iy}];
    acc.x += s.x_mm;
    acc.y += s.y_mm;
    acc.value += s.value();
    ++acc.count;
  }

  std::vector<Site> sites;
  std::vector<point_data<int>> points;
  sites.reserve(cells.size());
  points.reserve(cells.size());
  for (const auto& [key, acc] : cells) {
    const auto n = static_cast<double>(acc.count);
    sites.push_back({acc.x / n, acc.y / n, acc.value / n});
    points.emplace_back(key.first, key.second);
  }
  return {std::move(sites), std::move(points)};
}

std::vector<Triangle> delaunay(const std::vector<point_data<int>>& points) {
  voronoi_diagram<double> vd;
  boost::polygon::construct_voronoi(points.begin(), points.end(), &vd);

  std::vector<Triangle> triangles;
  std::vector<std::size_t> ring;
  for (const auto& vertex : vd.vertices()) {
    ring.clear();
    const auto* edge = vertex.incident_edge();
    do {
      ring.push_back(edge->cell()->source_index());
      edge = edge->rot_next();
    } while (edge != vertex.incident_edge());
    // Cocircular sites come back as one polygon; fan it.
    for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
      triangles.push_back({ring[0], ring[i], ring[i + 1]});
    }
  }
  return triangles;
}

}  // namespace

void validate(const GridSpec& spec) {
  require(spec.rows >= 2 && spec.cols >= 2, ErrorKind::invalid_argument,
          "grid must be at least 2x2");
  require(std::isfinite(spec.pitch_mm) && spec.pitch_mm > 0.0,
          ErrorKind::invalid_argument, "grid pitch must be positive");
  require(std::isfinite(spec.origin_x_mm) && std::isfinite(spec.origin_y_mm),
          ErrorKind::invalid_argument, "grid origin must be finite");
}

GridSpec centered_grid(const ScanTrace& trace, std::size_t rows,
                       std::size_t cols, double pitch_mm) {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const auto& s : trace.samples()) {
    min_x = std::min(min_x, s.x_mm);
    min_y = std::min(min_y, s.y_mm);
    max_x = std::max(max_x, s.x_mm);
    max_y = std::max(max_y, s.y_mm);
  }
  GridSpec spec;
  spec.rows = rows;
  spec.cols = cols;
  spec.pitch_mm = pitch_mm;
  spec.origin_x_mm = 0.5 * (min_x + max_x) - static_cast<double>(cols / 2) * pitch_mm;
  spec.origin_y_mm = 0.5 * (min_y + max_y) - static_cast<double>(rows / 2) * pitch_mm;
  validate(spec);
  return spec;
}

ComplexField2D grid_scan(const ScanTrace& trace) {
  return grid_scan(trace, centered_grid(trace));
}

ComplexField2D grid_scan(const ScanTrace& trace, const GridSpec& spec) {
  validate(spec);
  auto [sites, points] = merge_sites(trace);
  require(sites.size() >= 3, ErrorKind::degenerate_input,
          "fewer than 3 distinct sample positions");
  const auto triangles = delaunay(points);
  require(!triangles.empty(), ErrorKind::degenerate_input,
          "sample positions are collinear (zero-area hull)");

  const std::size_t n_pixels = spec.rows * spec.cols;
  std::vector<Complex> out(n_pixels);
  std::vector<bool> assigned(n_pixels, false);

  constexpr double kInsideTol = 1e-12;
  for (const auto& tri : triangles) {
    const Site& p1 = sites[tri.a];
    const Site& p2 = sites[tri.b];
    const Site& p3 = sites[tri.c];
    const double det = (p2.y - p3.y) * (p1.x - p3.x) + (p3.x - p2.x) * (p1.y - p3.y);
    const double scale = std::abs(p1.x - p3.x) + std::abs(p1.y - p3.y) +
                         std::abs(p2.x - p3.x) + std::abs(p2.y - p3.y);
    if (std::abs(det) <= 1e-14 * scale * scale) continue;

    const double lo_x = std::min({p1.x, p2.x, p3.x});
    const double hi_x = std::max({p1.x, p2.x, p3.x});
    const double lo_y = std::min({p1.y, p2.y, p3.y});
    const double hi_y = std::max({p1.y, p2.y, p3.y});
    const auto first = [&](double lo, double origin, std::size_t n) {
      const double f = std::ceil((lo - origin) / spec.pitch_mm - 1e-9);
      return static_cast<long>(std::clamp(f, 0.0, static_cast<double>(n)));
    };
    const auto last = [&](double hi, double origin, std::size_t n) {
      const double f = std::floor((hi - origin) / spec.pitch_mm + 1e-9);
      return static_cast<long>(std::clamp(f, -1.0, static_cast<double>(n) - 1.0));
    };
    const long c0 = first(lo_x, spec.origin_x_mm, spec.cols);
    const long c1 = last(hi_x, spec.origin_x_mm, spec.cols);
    const long r0 = first(lo_y, spec.origin_y_mm, spec.rows);
    const long r1 = last(hi_y, spec.origin_y_mm, spec.rows);

    for (long r = r0; r <= r1; ++r) {
      const double y = spec.pixel_y(static_cast<std::size_t>(r));
      for (long c = c0; c <= c1; ++c) {
        const auto idx = static_cast<std::size_t>(r) * spec.cols + static_cast<std::size_t>(c);
        if (assigned[idx]) continue;
        const double x = spec.pixel_x(static_cast<std::size_t>(c));
        const double w1 = ((p2.y - p3.y) * (x - p3.x) + (p3.x - p2.x) * (y - p3.y)) / det;
        const double w2 = ((p3.y - p1.y) * (x - p3.x) + (p1.x - p3.x) * (y - p3.y)) / det;
        const double w3 = 1.0 - w1 - w2;
        if (w1 < -kInsideTol || w2 < -kInsideTol || w3 < -kInsideTol) continue;
        out[idx] = w1 * p1.value + w2 * p2.value + w3 * p3.value;
        assigned[idx] = true;
      }
    }
  }

  for (std::size_t r = 0; r < spec.rows; ++r) {
    const double y = spec.pixel_y(r);
    for (std::size_t c = 0; c < spec.cols; ++c) {
      const std::size_t idx = r * spec.cols + c;
      if (assigned[idx]) continue;
      const double x = spec.pixel_x(c);
      std::size_t best = 0;
      double best_d2 = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < sites.size(); ++i) {
        const double dx = sites[i].x - x;
        const double dy = sites[i].y - y;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2) {
          best_d2 = d2;
          best = i;
        }
      }
      out[idx] = sites[best].value;
    }
  }

  return ComplexField2D(spec.rows, spec.cols, spec.pitch_mm, std::move(out));
}

}  // namespace holoforge
