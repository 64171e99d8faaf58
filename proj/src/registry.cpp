#include "holoforge/registry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>

#include "holoforge/error.hpp"

namespace holoforge {
namespace {

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '-' || c == '.';
  });
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

std::string_view to_string(Category c) noexcept {
  switch (c) {
    case Category::mine: return "mine";
    case Category::clutter: return "clutter";
    case Category::pottery: return "pottery";
  }
  return "?";
}

Category parse_category(std::string_view text) {
  if (text == "mine") return Category::mine;
  if (text == "clutter") return Category::clutter;
  if (text == "pottery") return Category::pottery;
  fail(ErrorKind::invalid_argument,
       "unknown category '" + std::string(text) + "'");
}

std::string_view to_string(Direction d) noexcept {
  switch (d) {
    case Direction::N: return "N";
    case Direction::S: return "S";
    case Direction::W: return "W";
    case Direction::E: return "E";
  }
  return "?";
}

Direction parse_direction(std::string_view text) {
  if (text == "N") return Direction::N;
  if (text == "S") return Direction::S;
  if (text == "W") return Direction::W;
  if (text == "E") return Direction::E;
  fail(ErrorKind::invalid_argument,
       "unknown direction '" + std::string(text) + "'");
}

int quarter_turns(Direction d) noexcept {
  switch (d) {
    case Direction::N: return 0;
    case Direction::E: return 1;
    case Direction::S: return 2;
    case Direction::W: return 3;
  }
  return 0;
}

ObjectRegistry::ObjectRegistry(std::vector<ObjectSpec> objects)
    : objects_(std::move(objects)) {
  require(!objects_.empty(), ErrorKind::invalid_argument,
          "object registry is empty");
  std::set<std::string, std::less<>> seen;
  for (const auto& o : objects_) {
    require(valid_id(o.id), ErrorKind::invalid_argument,
            "object id '" + o.id + "' must be nonempty [A-Za-z0-9.-]");
    require(seen.insert(o.id).second, ErrorKind::invalid_argument,
            "duplicate object id '" + o.id + "'");
    require(positive(o.height_mm), ErrorKind::invalid_argument,
            "object '" + o.id + "' needs a positive height");
    const bool dims_ok = std::visit(
        [](const auto& fp) {
          using T = std::decay_t<decltype(fp)>;
          if constexpr (std::is_same_v<T, CircleFootprint>) {
            return positive(fp.diameter_mm);
          } else {
            return positive(fp.l1_mm) && positive(fp.l2_mm);
          }
        },
        o.footprint);
    require(dims_ok, ErrorKind::invalid_argument,
            "object '" + o.id + "' has a non-positive footprint dimension");
  }
}

const ObjectSpec* ObjectRegistry::find(std::string_view id) const noexcept {
  auto it = std::find_if(objects_.begin(), objects_.end(),
                         [&](const ObjectSpec& o) { return o.id == id; });
  return it == objects_.end() ? nullptr : &*it;
}

const ObjectSpec& ObjectRegistry::at(std::string_view id) const {
  const auto* o = find(id);
  if (o == nullptr) {
    fail(ErrorKind::not_found, "object '" + std::string(id) + "' not in registry");
  }
  return *o;
}

IndoorConfig::IndoorConfig(std::string object, int height, Direction dir,
                           int slope)
    : object_id(std::move(object)),
      height_mm(height),
      orientation(dir),
      slope_deg(slope) {
  require(std::find(kIndoorHeightsMm.begin(), kIndoorHeightsMm.end(),
                    height_mm) != kIndoorHeightsMm.end(),
          ErrorKind::invalid_argument, "indoor height must be 40 or 80 mm");
  require(std::find(kIndoorSlopesDeg.begin(), kIndoorSlopesDeg.end(),
                    slope_deg) != kIndoorSlopesDeg.end(),
          ErrorKind::invalid_argument, "indoor slope must be 0 or 20 degrees");
  require(valid_id(object_id), ErrorKind::invalid_argument,
          "invalid object id '" + object_id + "'");
}

std::string IndoorConfig::key() const {
  return object_id + "_h" + std::to_string(height_mm) + "_" +
         std::string(to_string(orientation)) + "_s" + std::to_string(slope_deg);
}

OutdoorConfig::OutdoorConfig(int patch_id, Direction dir)
    : patch(patch_id), direction(dir) {
  require(patch >= 1, ErrorKind::invalid_argument,
          "soil patch ids start at 1");
}

std::string OutdoorConfig::key() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "soil%02d_%s", patch,
                std::string(to_string(direction)).c_str());
  return buf;
}

std::optional<IndoorConfig> parse_indoor_key(std::string_view key) {
  // Split from the right: object ids may not contain '_'.
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = key.find('_', start);
    parts.push_back(key.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 4) return std::nullopt;
  if (parts[1].size() < 2 || parts[1][0] != 'h') return std::nullopt;
  if (parts[3].size() < 2 || parts[3][0] != 's') return std::nullopt;
  auto h = parse_int(parts[1].substr(1));
  auto s = parse_int(parts[3].substr(1));
  if (!h || !s) return std::nullopt;
  try {
    return IndoorConfig(std::string(parts[0]), *h, parse_direction(parts[2]), *s);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<OutdoorConfig> parse_outdoor_key(std::string_view key) {
  if (!key.starts_with("soil")) return std::nullopt;
  auto us = key.find('_');
  if (us == std::string_view::npos) return std::nullopt;
  auto j = parse_int(key.substr(4, us - 4));
  if (!j) return std::nullopt;
  try {
    return OutdoorConfig(*j, parse_direction(key.substr(us + 1)));
  } catch (const Error&) {
    return std::nullopt;
  }
}

ObjectRegistry default_registry() {
  auto circle = [](double d) { return Footprint{CircleFootprint{d}}; };
  auto rect = [](double l1, double l2) { return Footprint{RectFootprint{l1, l2}}; };
  return ObjectRegistry({
      {"PMN-4", "PMN-4 anti-personnel mine", Category::mine, circle(95), 46},
      {"PMN-1", "PMN-1 anti-personnel mine", Category::mine, circle(95), 55},
      {"VS-50", "VS-50 anti-personnel mine", Category::mine, circle(90), 45},
      {"TYPE-72", "Type 72 anti-personnel mine", Category::mine, circle(78), 38},
      {"M-14", "M14 anti-personnel mine", Category::mine, circle(56), 40},
      {"PMA-2", "PMA-2 anti-personnel mine", Category::mine, circle(68), 61},
      {"butterfly", "PFM-1 butterfly mine", Category::mine, rect(112, 60), 15},
      {"bullet", "rifle cartridge", Category::clutter, rect(120, 20), 20},
      {"stone", "flat stone", Category::clutter, rect(110, 56), 34},
      {"wood-cylinder", "wooden cylinder", Category::clutter, circle(35), 40},
      {"can", "crushed soda can", Category::clutter, rect(110, 62), 15},
      {"perforated-clay-pot", "perforated clay pot", Category::pottery, circle(180), 28},
      {"clay-pot", "shallow clay pot", Category::pottery, circle(170), 24},
  });
}

}  // namespace holoforge
