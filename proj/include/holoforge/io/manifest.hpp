#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "holoforge/dataset.hpp"
#include "holoforge/fusion.hpp"

namespace holoforge::io {

using nlohmann::json;

// Object registry config file: {"schema_version": 1, "objects": [...]}.
json registry_to_json(const std::vector<ObjectSpec>& objects);
std::vector<ObjectSpec> registry_from_json(const json& doc);
ObjectRegistry read_registry(const std::filesystem::path& path);
void write_registry(const ObjectRegistry& registry, const std::filesystem::path& path);

json manifest_to_json(const DatasetManifest& manifest);
DatasetManifest manifest_from_json(const json& doc);
// Canonical text: two-space indentation, keys sorted, trailing newline.
std::string dump(const json& doc);
void write_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);
DatasetManifest read_manifest(const std::filesystem::path& path);

/// Checks that every file a manifest references exists under root with the
/// recorded size and CRC. Returns one message per problem.
std::vector<std::string> verify_manifest(const DatasetManifest& manifest,
                                         const std::filesystem::path& root);

json split_to_json(const SplitAssignment& assignment,
                   const std::vector<SampleRecord>& records);
json sweep_to_json(const AlphaSweepResult& result);

std::string crc_hex(std::uint32_t crc);

}  // namespace holoforge::io
