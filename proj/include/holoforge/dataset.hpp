#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include "holoforge/angspec.hpp"
#include "holoforge/record.hpp"
#include "holoforge/split.hpp"

namespace holoforge {

inline constexpr int kManifestSchemaVersion = 1;

/// Every object in registry order x height {40, 80} x orientation
/// {N, S, W, E} x slope {0, 20}, lexicographic in that order.
std::vector<IndoorConfig> enumerate_indoor(std::span<const ObjectSpec> objects);
std::vector<IndoorConfig> enumerate_indoor(const ObjectRegistry& registry);

/// Patches 1..patch_count, each scanned from N, S, W, E.
std::vector<OutdoorConfig> enumerate_outdoor(int patch_count = kDefaultPatchCount);

/// binary: mine / non-mine; ternary: category or background;
/// multi: object id or background.
LabelSet make_labels(const std::optional<IndoorConfig>& indoor,
                     const ObjectRegistry& registry);

struct IndoorScan {
  IndoorConfig config;
  ComplexField2D hologram;
};

struct OutdoorScan {
  OutdoorConfig config;
  ComplexField2D hologram;
};

struct VolumeSettings {
  bool enabled = true;
  double z0_mm = 0.0;
  double z1_mm = 200.0;
  std::size_t slices = 21;

  friend bool operator==(const VolumeSettings&, const VolumeSettings&) = default;
};

struct GenerateOptions {
  double alpha = 0.14;
  PropagationParams propagation;
  VolumeSettings volume;
  bool include_soil_only = true;
  std::uint64_t seed = 0;
  double train_fraction = 0.8;
  std::size_t jobs = 1;
  std::filesystem::path out_dir;
  // Called from worker threads with (records done, records total).
  std::function<void(std::size_t, std::size_t)> progress;
};

struct SplitSummary {
  Task task = Task::binary;
  double train_fraction = 0.8;
  std::uint64_t seed = 0;
  std::vector<std::string> train_units;
  std::vector<std::string> test_units;
  std::size_t train_records = 0;
  std::size_t test_records = 0;

  friend bool operator==(const SplitSummary&, const SplitSummary&) = default;
};

struct DatasetManifest {
  int schema_version = kManifestSchemaVersion;
  std::vector<ObjectSpec> registry;
  double alpha = 0.14;
  PropagationParams propagation;
  VolumeSettings volume;
  std::size_t rows = kDefaultGridSize;
  std::size_t cols = kDefaultGridSize;
  double pitch_mm = kDefaultPitchMm;
  std::uint64_t seed = 0;
  bool include_soil_only = true;
  std::vector<SampleRecord> records;
  std::vector<SplitSummary> splits;
};

SplitSummary summarize(const SplitAssignment& assignment);

// Writes the per-record sides of an assignment into the records.
void apply_split(std::vector<SampleRecord>& records, const SplitAssignment& assignment);

/// Fuses every (indoor, outdoor) pair, optionally adds one soil-only record per
/// outdoor scan, reconstructs volumes, annotates, splits for all three tasks,
/// and writes holograms/, volumes/ and manifest.json under options.out_dir.
///
/// Records are ordered indoor-major then outdoor, soil-only records last,
/// independent of the worker count.
DatasetManifest generate_dataset(const ObjectRegistry& registry,
                                 const std::vector<IndoorScan>& indoor,
                                 const std::vector<OutdoorScan>& outdoor,
                                 const GenerateOptions& options);

}  // namespace holoforge
