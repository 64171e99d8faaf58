#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace holoforge {

enum class Category { mine, clutter, pottery };

std::string_view to_string(Category c) noexcept;
Category parse_category(std::string_view text);

// Cardinal direction; the declaration order N < S < W < E is the enumeration
// order used everywhere.
enum class Direction { N, S, W, E };

inline constexpr std::array<Direction, 4> kDirections = {
    Direction::N, Direction::S, Direction::W, Direction::E};

std::string_view to_string(Direction d) noexcept;
Direction parse_direction(std::string_view text);
// Clockwise rotation in quarter turns: N=0, E=1, S=2, W=3.
int quarter_turns(Direction d) noexcept;

struct CircleFootprint {
  double diameter_mm = 0.0;
  friend bool operator==(const CircleFootprint&, const CircleFootprint&) = default;
};

// l1 runs along the image columns (x) when the object faces north.
struct RectFootprint {
  double l1_mm = 0.0;
  double l2_mm = 0.0;
  friend bool operator==(const RectFootprint&, const RectFootprint&) = default;
};

using Footprint = std::variant<CircleFootprint, RectFootprint>;

struct ObjectSpec {
  std::string id;
  std::string name;
  Category category = Category::mine;
  Footprint footprint = CircleFootprint{};
  double height_mm = 0.0;

  friend bool operator==(const ObjectSpec&, const ObjectSpec&) = default;
};

class ObjectRegistry {
 public:
  explicit ObjectRegistry(std::vector<ObjectSpec> objects);

  const std::vector<ObjectSpec>& objects() const noexcept { return objects_; }
  std::size_t size() const noexcept { return objects_.size(); }
  const ObjectSpec& at(std::string_view id) const;
  const ObjectSpec* find(std::string_view id) const noexcept;

  friend bool operator==(const ObjectRegistry&, const ObjectRegistry&) = default;

 private:
  std::vector<ObjectSpec> objects_;
};

// The 13 objects used by the demo fixtures and data/registry.json.
ObjectRegistry default_registry();

inline constexpr std::array<int, 2> kIndoorHeightsMm = {40, 80};
inline constexpr std::array<int, 2> kIndoorSlopesDeg = {0, 20};
inline constexpr int kDefaultPatchCount = 50;

struct IndoorConfig {
  std::string object_id;
  int height_mm = 40;
  Direction orientation = Direction::N;
  int slope_deg = 0;

  IndoorConfig() = default;
  IndoorConfig(std::string object, int height, Direction dir, int slope);

  // "<object>_h<h>_<d>_s<s>", also the indoor scan file stem.
  std::string key() const;

  friend bool operator==(const IndoorConfig&, const IndoorConfig&) = default;
};

struct OutdoorConfig {
  int patch = 1;
  Direction direction = Direction::N;

  OutdoorConfig() = default;
  OutdoorConfig(int patch_id, Direction dir);

  // "soil<jj>_<d>", also the outdoor scan file stem.
  std::string key() const;

  friend bool operator==(const OutdoorConfig&, const OutdoorConfig&) = default;
};

std::optional<IndoorConfig> parse_indoor_key(std::string_view key);
std::optional<OutdoorConfig> parse_outdoor_key(std::string_view key);

}  // namespace holoforge
