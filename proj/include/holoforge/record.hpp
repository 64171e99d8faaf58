#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "holoforge/annotation.hpp"
#include "holoforge/registry.hpp"

namespace holoforge {

enum class Task { binary, ternary, multi };
enum class Side { train, test };

inline constexpr std::array<Task, 3> kTasks = {Task::binary, Task::ternary, Task::multi};

std::string_view to_string(Task t) noexcept;
Task parse_task(std::string_view text);
std::string_view to_string(Side s) noexcept;
Side parse_side(std::string_view text);

inline constexpr std::string_view kMineLabel = "mine";
inline constexpr std::string_view kNonMineLabel = "non-mine";
inline constexpr std::string_view kBackgroundLabel = "background";

struct LabelSet {
  std::string binary;
  std::string ternary;
  std::string multi;

  const std::string& for_task(Task t) const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
};

struct FileRef {
  std::string path;  // relative to the dataset root
  std::uint32_t crc32 = 0;
  std::uint64_t bytes = 0;

  friend bool operator==(const FileRef&, const FileRef&) = default;
};

/// One dataset sample: a fused object-in-soil hologram, or a soil-only scan
/// when `indoor` is empty.
struct SampleRecord {
  std::string id;
  std::optional<IndoorConfig> indoor;
  OutdoorConfig outdoor;
  double alpha = 0.0;
  FileRef hologram;
  std::optional<FileRef> volume;
  LabelSet labels;
  std::optional<BBox> annotation;
  std::array<std::optional<Side>, 3> split{};

  bool soil_only() const noexcept { return !indoor.has_value(); }
  std::optional<Side> side(Task t) const { return split[static_cast<std::size_t>(t)]; }

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

std::string sample_id(const std::optional<IndoorConfig>& indoor,
                      const OutdoorConfig& outdoor);

}  // namespace holoforge
