#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holoforge/record.hpp"

namespace holoforge {

struct SplitSpec {
  Task task = Task::binary;
  double train_fraction = 0.8;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Train/test side per record (same order as the input records), plus the
/// units that were partitioned: object ids for the object-level splits,
/// configuration keys for the grouped split. Soil-only records form their
/// own stratum keyed by soil scan.
struct SplitAssignment {
  SplitSpec spec;
  std::vector<Side> sides;
  std::vector<std::string> train_units;
  std::vector<std::string> test_units;
  std::size_t train_records = 0;
  std::size_t test_records = 0;
};

// Train units per stratum of size n: round-half-up of fraction * n, kept in
// [1, n - 1] whenever n >= 2.
std::size_t train_unit_count(std::size_t n, double fraction);

/// Object-level split for the binary and ternary tasks: objects are
/// partitioned separately within each category (taken from the ternary
/// label), so every configuration of an object lands on one side.
SplitAssignment split_object_disjoint(const std::vector<SampleRecord>& records,
                                      const SplitSpec& spec);

/// Configuration-grouped split for the multi-class task: records sharing
/// (object, height, orientation, slope) stay together.
SplitAssignment split_config_grouped(const std::vector<SampleRecord>& records,
                                     const SplitSpec& spec);

// Dispatches on spec.task.
SplitAssignment make_split(const std::vector<SampleRecord>& records,
                           const SplitSpec& spec);

}  // namespace holoforge
