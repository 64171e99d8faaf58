#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace holoforge::io {

using Bytes = std::vector<std::uint8_t>;

// CRC-32 with the IEEE 802.3 polynomial (zlib's crc32).
std::uint32_t crc32(std::span<const std::uint8_t> bytes);

// CRC-32 of a container file minus its 4-byte CRC trailer, i.e. the checksum
// the container stores. Hashing the whole file would give the same constant
// for every valid container.
std::uint32_t content_crc(std::span<const std::uint8_t> bytes);

Bytes read_file(const std::filesystem::path& path);
std::string read_text(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over the target.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_text_atomic(const std::filesystem::path& path, std::string_view text);

}  // namespace holoforge::io
