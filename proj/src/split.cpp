#include "holoforge/split.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "holoforge/error.hpp"

namespace holoforge {
namespace {

// Uniform integer in [0, bound) by rejection so the sequence depends only on
// the mt19937_64 output stream, not on the standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

struct Stratum {
  std::vector<std::string> units;  // first-appearance order
};

// strata: name -> units, unit_of: record index -> unit key
SplitAssignment assign(const std::vector<SampleRecord>& records, const SplitSpec& spec,
                       const std::vector<std::string>& stratum_order,
                       const std::map<std::string, Stratum>& strata,
                       const std::vector<std::string>& unit_of) {
  std::mt19937_64 rng(spec.seed);
  std::map<std::string, Side> side_of;
  SplitAssignment out;
  out.spec = spec;
  for (const auto& name : stratum_order) {
    auto it = strata.find(name);
    if (it == strata.end()) continue;
    auto units = it->second.units;
    shuffle(units, rng);
    const std::size_t n_train = train_unit_count(units.size(), spec.train_fraction);
    for (std::size_t i = 0; i < units.size(); ++i) {
      side_of[units[i]] = i < n_train ? Side::train : Side::test;
    }
  }
  // Report units in first-appearance order.
  for (const auto& name : stratum_order) {
    auto it = strata.find(name);
    if (it == strata.end()) continue;
    for (const auto& u : it->second.units) {
      (side_of[u] == Side::train ? out.train_units : out.test_units).push_back(u);
    }
  }
  out.sides.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Side s = side_of.at(unit_of[i]);
    out.sides.push_back(s);
    (s == Side::train ? out.train_records : out.test_records) += 1;
  }
  return out;
}

void add_unit(std::map<std::string, Stratum>& strata, std::vector<std::string>& order,
              const std::string& stratum, const std::string& unit) {
  auto [it, inserted] = strata.try_emplace(stratum);
  if (inserted && std::find(order.begin(), order.end(), stratum) == order.end()) {
    order.push_back(stratum);
  }
  auto& units = it->second.units;
  if (std::find(units.begin(), units.end(), unit) == units.end()) units.push_back(unit);
}

std::vector<std::string> fixed_order() {
  return {"mine", "clutter", "pottery"};
}

}  // namespace

void SplitSpec::validate() const {
  require(std::isfinite(train_fraction) && train_fraction > 0.0 && train_fraction < 1.0,
          ErrorKind::invalid_argument, "train fraction must lie in (0, 1)");
}

std::size_t train_unit_count(std::size_t n, double fraction) {
  if (n == 0) return 0;
  auto count = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n) + 0.5));
  if (n >= 2) count = std::clamp<std::size_t>(count, 1, n - 1);
  return std::min(count, n);
}

SplitAssignment split_object_disjoint(const std::vector<SampleRecord>& records,
                                      const SplitSpec& spec) {
  spec.validate();
  require(spec.task != Task::multi, ErrorKind::invalid_argument,
          "object-disjoint split applies to the binary and ternary tasks");
  auto order = fixed_order();
  std::map<std::string, Stratum> strata;
  std::map<std::string, std::string> category_of;
  std::vector<std::string> unit_of;
  unit_of.reserve(records.size());
  for (const auto& r : records) {
    if (r.soil_only()) {
      const std::string unit = "soil:" + r.outdoor.key();
      add_unit(strata, order, std::string(kBackgroundLabel), unit);
      unit_of.push_back(unit);
      continue;
    }
    const auto& object = r.indoor->object_id;
    auto [it, inserted] = category_of.emplace(object, r.labels.ternary);
    require(it->second == r.labels.ternary, ErrorKind::invalid_argument,
            "object '" + object + "' carries inconsistent categories");
    add_unit(strata, order, r.labels.ternary, object);
    unit_of.push_back(object);
  }
  return assign(records, spec, order, strata, unit_of);
}

SplitAssignment split_config_grouped(const std::vector<SampleRecord>& records,
                                     const SplitSpec& spec) {
  spec.validate();
  std::vector<std::string> order = {"objects"};
  std::map<std::string, Stratum> strata;
  std::vector<std::string> unit_of;
  unit_of.reserve(records.size());
  for (const auto& r : records) {
    if (r.soil_only()) {
      const std::string unit = "soil:" + r.outdoor.key();
      add_unit(strata, order, std::string(kBackgroundLabel), unit);
      unit_of.push_back(unit);
    } else {
      add_unit(strata, order, "objects", r.indoor->key());
      unit_of.push_back(r.indoor->key());
    }
  }
  return assign(records, spec, order, strata, unit_of);
}

SplitAssignment make_split(const std::vector<SampleRecord>& records,
                           const SplitSpec& spec) {
  return spec.task == Task::multi ? split_config_grouped(records, spec)
                                  : split_object_disjoint(records, spec);
}

}  // namespace holoforge
