#include "holoforge/record.hpp"

#include "holoforge/error.hpp"

namespace holoforge {

std::string_view to_string(Task t) noexcept {
  switch (t) {
    case Task::binary: return "binary";
    case Task::ternary: return "ternary";
    case Task::multi: return "multi";
  }
  return "?";
}

Task parse_task(std::string_view text) {
  if (text == "binary") return Task::binary;
  if (text == "ternary") return Task::ternary;
  if (text == "multi") return Task::multi;
  fail(ErrorKind::invalid_argument, "unknown task '" + std::string(text) + "'");
}

std::string_view to_string(Side s) noexcept {
  return s == Side::train ? "train" : "test";
}

Side parse_side(std::string_view text) {
  if (text == "train") return Side::train;
  if (text == "test") return Side::test;
  fail(ErrorKind::invalid_argument, "unknown split side '" + std::string(text) + "'");
}

const std::string& LabelSet::for_task(Task t) const {
  switch (t) {
    case Task::binary: return binary;
    case Task::ternary: return ternary;
    case Task::multi: return multi;
  }
  return multi;
}

std::string sample_id(const std::optional<IndoorConfig>& indoor,
                      const OutdoorConfig& outdoor) {
  if (!indoor) return outdoor.key();
  return indoor->key() + "__" + outdoor.key();
}

}  // namespace holoforge
