#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>

#include "holoforge/angspec.hpp"
#include "holoforge/annotation.hpp"
#include "holoforge/gridder.hpp"
#include "holoforge/registry.hpp"

// Synthetic scans for fixtures and tests. Nothing here models a real radar
// front end; the fields only need the right geometry and statistics.
namespace holoforge::synth {

using PointField = std::function<Complex(double x_mm, double y_mm)>;

/// Spherical wave exp(+jkR) * depth / R from a point at (x, y, -depth) seen on
/// the scan plane, with the plane coordinates of GridSpec.
PointField point_source(double x_mm, double y_mm, double depth_mm,
                        const PropagationParams& params, Complex strength = 1.0);

ComplexField2D sample(const PointField& f, const GridSpec& grid);

/// In-air scan of a registry object: every footprint pixel radiates from the
/// object's top surface, which sits at the configured height and tilts by the
/// slope along the object's facing axis.
ComplexField2D object_hologram(const ObjectSpec& spec, const IndoorConfig& cfg,
                               const GridSpec& grid,
                               const PropagationParams& params = PropagationParams::air(),
                               Placement placement = {});

/// Soil-only scan: a rough surface return plus buried clutter, fixed by
/// (seed, patch). Other directions are quarter turns of the N scan, so
/// E and W need a square grid.
ComplexField2D soil_hologram(const OutdoorConfig& cfg, const GridSpec& grid,
                             std::uint64_t seed,
                             const PropagationParams& params = PropagationParams::soil());

/// Independent complex Gaussian samples, for property tests.
ComplexField2D random_field(std::size_t rows, std::size_t cols, double pitch_mm,
                            std::uint64_t seed);

struct ZigzagSpec {
  double x0_mm = -150.0;
  double y0_mm = -150.0;
  double width_mm = 300.0;
  double height_mm = 300.0;
  double line_spacing_mm = 5.0;
  double step_mm = 2.5;
  double speed_mm_per_s = 100.0;
};

/// Raster scan along x, reversing direction on every line.
ScanTrace zigzag_scan(const PointField& f, const ZigzagSpec& spec = {});

struct FixtureOptions {
  std::size_t objects = 0;  // 0 = whole registry
  int patches = kDefaultPatchCount;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  GridSpec grid;
};

/// Writes registry.json, indoor/<key>.hgrm for every indoor configuration
/// and outdoor/<key>.hgrm for every soil scan under dir.
void write_fixture(const std::filesystem::path& dir, const ObjectRegistry& registry,
                   const FixtureOptions& options);

}  // namespace holoforge::synth
