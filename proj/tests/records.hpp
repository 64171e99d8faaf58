#pragma once

// In-memory records shaped like generate_dataset output, without files.

#include <vector>

#include "holoforge/dataset.hpp"

namespace testing {

inline std::vector<holoforge::SampleRecord> make_records(const holoforge::ObjectRegistry& reg,
                                                         int patches, bool soil_only = true) {
  using namespace holoforge;
  std::vector<SampleRecord> out;
  const auto outdoor = enumerate_outdoor(patches);
  for (const auto& cfg : enumerate_indoor(reg)) {
    for (const auto& o : outdoor) {
      SampleRecord r;
      r.indoor = cfg;
      r.outdoor = o;
      r.labels = make_labels(cfg, reg);
      r.id = sample_id(r.indoor, r.outdoor);
      out.push_back(r);
    }
  }
  if (soil_only) {
    for (const auto& o : outdoor) {
      SampleRecord r;
      r.outdoor = o;
      r.labels = make_labels(std::nullopt, reg);
      r.id = sample_id(std::nullopt, o);
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace testing
