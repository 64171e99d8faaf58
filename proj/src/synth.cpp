#include "holoforge/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "holoforge/dataset.hpp"
#include "holoforge/error.hpp"
#include "holoforge/io/container.hpp"
#include "holoforge/io/manifest.hpp"
#include "parallel.hpp"

namespace holoforge::synth {
namespace {

// Uniform draws built directly on the raw engine output so fixtures do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double reflectivity(Category c) {
  switch (c) {
    case Category::mine: return 1.0;
    case Category::clutter: return 0.7;
    case Category::pottery: return 0.4;
  }
  return 1.0;
}

double grid_center_x(const GridSpec& g) { return g.pixel_x(g.cols / 2); }
double grid_center_y(const GridSpec& g) { return g.pixel_y(g.rows / 2); }

}  // namespace

PointField point_source(double x_mm, double y_mm, double depth_mm,
                        const PropagationParams& params, Complex strength) {
  require(depth_mm > 0.0, ErrorKind::invalid_argument, "source depth must be positive");
  const double k = params.wavenumber_per_mm();
  return [=](double x, double y) {
    const double dx = x - x_mm;
    const double dy = y - y_mm;
    const double r = std::sqrt(dx * dx + dy * dy + depth_mm * depth_mm);
    return strength * std::polar(depth_mm / r, k * r);
  };
}

ComplexField2D sample(const PointField& f, const GridSpec& grid) {
  validate(grid);
  std::vector<Complex> data(grid.rows * grid.cols);
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      data[r * grid.cols + c] = f(grid.pixel_x(c), grid.pixel_y(r));
    }
  }
  return {grid.rows, grid.cols, grid.pitch_mm, std::move(data)};
}

ComplexField2D object_hologram(const ObjectSpec& spec, const IndoorConfig& cfg,
                               const GridSpec& grid, const PropagationParams& params,
                               Placement placement) {
  params.validate();
  const BBox box = make_annotation(spec, cfg, grid, placement);
  const double k = params.wavenumber_per_mm();
  const double tilt = std::tan(cfg.slope_deg * std::numbers::pi / 180.0);
  const double cx = grid_center_x(grid) + placement.offset_x_mm;
  const double cy = grid_center_y(grid) + placement.offset_y_mm;
  // Normalized so a 10x10 px footprint straight below peaks near the reflectivity.
  const double weight = reflectivity(spec.category) / 100.0;

  struct Scatterer {
    double x, y, depth;
  };
  std::vector<Scatterer> points;
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      if (!box.mask.at(r, c)) continue;
      const double x = grid.pixel_x(c);
      const double y = grid.pixel_y(r);
      double along = 0.0;
      switch (cfg.orientation) {
        case Direction::N: along = x - cx; break;
        case Direction::E: along = y - cy; break;
        case Direction::S: along = cx - x; break;
        case Direction::W: along = cy - y; break;
      }
      points.push_back({x, y, std::max(1.0, cfg.height_mm + tilt * along)});
    }
  }

  std::vector<Complex> data(grid.rows * grid.cols);
  for (std::size_t r = 0; r < grid.rows; ++r) {
    const double y = grid.pixel_y(r);
    for (std::size_t c = 0; c < grid.cols; ++c) {
      const double x = grid.pixel_x(c);
      Complex acc = 0.0;
      for (const auto& p : points) {
        const double dx = x - p.x;
        const double dy = y - p.y;
        const double dist = std::sqrt(dx * dx + dy * dy + p.depth * p.depth);
        acc += std::polar(p.depth / dist, k * dist);
      }
      data[r * grid.cols + c] = weight * acc;
    }
  }
  return {grid.rows, grid.cols, grid.pitch_mm, std::move(data)};
}

ComplexField2D soil_hologram(const OutdoorConfig& cfg, const GridSpec& grid,
                             std::uint64_t seed, const PropagationParams& params) {
  validate(grid);
  params.validate();
  const int turns = quarter_turns(cfg.direction);
  require(turns % 2 == 0 || grid.rows == grid.cols, ErrorKind::shape_mismatch,
          "E/W soil scans need a square grid");

  Rng rng(mix(seed) ^ mix(static_cast<std::uint64_t>(cfg.patch) + 0x5011ULL));
  const double k = params.wavenumber_per_mm();
  const double cx = grid_center_x(grid);
  const double cy = grid_center_y(grid);
  const double half = 0.5 * static_cast<double>(std::max(grid.rows, grid.cols)) * grid.pitch_mm;

  const Complex surface = std::polar(rng.uniform(0.5, 1.5), rng.uniform(0.0, 2 * std::numbers::pi));
  const double gx = rng.uniform(-0.3, 0.3) * k;
  const double gy = rng.uniform(-0.3, 0.3) * k;

  struct Stone {
    double x, y, depth;
    Complex strength;
  };
  std::vector<Stone> stones(16 + static_cast<std::size_t>(rng.uniform() * 16));
  for (auto& s : stones) {
    s.x = cx + rng.uniform(-1.3, 1.3) * half;
    s.y = cy + rng.uniform(-1.3, 1.3) * half;
    s.depth = rng.uniform(30.0, 250.0);
    s.strength = std::polar(rng.uniform(0.05, 0.4), rng.uniform(0.0, 2 * std::numbers::pi));
  }

  const std::size_t n = grid.rows;
  const std::size_t m = grid.cols;
  std::vector<Complex> base(n * m);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      const double x = grid.pixel_x(c);
      const double y = grid.pixel_y(r);
      Complex acc = surface * std::polar(1.0, gx * (x - cx) + gy * (y - cy));
      for (const auto& s : stones) {
        const double dx = x - s.x;
        const double dy = y - s.y;
        const double dist = std::sqrt(dx * dx + dy * dy + s.depth * s.depth);
        acc += s.strength * std::polar(s.depth / dist, k * dist);
      }
      base[r * m + c] = acc + 0.02 * Complex(rng.normal(), rng.normal());
    }
  }

  // Clockwise quarter turns of the N scan.
  std::vector<Complex> out(n * m);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t sr = r, sc = c;
      switch (turns) {
        case 1: sr = n - 1 - c; sc = r; break;
        case 2: sr = n - 1 - r; sc = m - 1 - c; break;
        case 3: sr = c; sc = m - 1 - r; break;
        default: break;
      }
      out[r * m + c] = base[sr * m + sc];
    }
  }
  return {n, m, grid.pitch_mm, std::move(out)};
}

ComplexField2D random_field(std::size_t rows, std::size_t cols, double pitch_mm,
                            std::uint64_t seed) {
  Rng rng(mix(seed));
  std::vector<Complex> data(rows * cols);
  for (auto& v : data) v = Complex(rng.normal(), rng.normal());
  return {rows, cols, pitch_mm, std::move(data)};
}

ScanTrace zigzag_scan(const PointField& f, const ZigzagSpec& spec) {
  require(spec.width_mm > 0 && spec.height_mm > 0 && spec.line_spacing_mm > 0 &&
              spec.step_mm > 0 && spec.speed_mm_per_s > 0,
          ErrorKind::invalid_argument, "zig-zag dimensions must be positive");
  const auto lines = static_cast<std::size_t>(std::floor(spec.height_mm / spec.line_spacing_mm + 1e-9)) + 1;
  const auto per_line = static_cast<std::size_t>(std::floor(spec.width_mm / spec.step_mm + 1e-9)) + 1;
  const double dt = 1000.0 * spec.step_mm / spec.speed_mm_per_s;

  std::vector<ScanSample> samples;
  samples.reserve(lines * per_line);
  double t = 0.0;
  for (std::size_t line = 0; line < lines; ++line) {
    const double y = spec.y0_mm + static_cast<double>(line) * spec.line_spacing_mm;
    for (std::size_t i = 0; i < per_line; ++i) {
      const std::size_t j = line % 2 == 0 ? i : per_line - 1 - i;
      const double x = spec.x0_mm + static_cast<double>(j) * spec.step_mm;
      const Complex v = f(x, y);
      samples.push_back({t, x, y, std::abs(v), std::arg(v)});
      t += dt;
    }
    // moving to the next line takes one line spacing at scan speed
    t += 1000.0 * spec.line_spacing_mm / spec.speed_mm_per_s;
  }
  return ScanTrace(std::move(samples));
}

void write_fixture(const std::filesystem::path& dir, const ObjectRegistry& registry,
                   const FixtureOptions& options) {
  require(options.patches >= 1, ErrorKind::invalid_argument, "need at least one soil patch");
  require(options.objects <= registry.size(), ErrorKind::invalid_argument,
          "fixture asks for more objects than the registry has");
  std::vector<ObjectSpec> objects = registry.objects();
  if (options.objects > 0) objects.resize(options.objects);
  const ObjectRegistry used(objects);

  std::filesystem::create_directories(dir / "indoor");
  std::filesystem::create_directories(dir / "outdoor");
  io::write_registry(used, dir / "registry.json");

  const auto indoor = enumerate_indoor(used);
  const auto outdoor = enumerate_outdoor(options.patches);
  detail::parallel_for(indoor.size() + outdoor.size(), options.jobs, [&](std::size_t i) {
    if (i < indoor.size()) {
      const auto& cfg = indoor[i];
      io::write_field(object_hologram(used.at(cfg.object_id), cfg, options.grid),
                      dir / "indoor" / (cfg.key() + ".hgrm"));
    } else {
      const auto& cfg = outdoor[i - indoor.size()];
      io::write_field(soil_hologram(cfg, options.grid, options.seed),
                      dir / "outdoor" / (cfg.key() + ".hgrm"));
    }
  });
}

}  // namespace holoforge::synth
