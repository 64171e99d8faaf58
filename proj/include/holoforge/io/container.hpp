#pragma once

#include <filesystem>

#include "holoforge/field.hpp"
#include "holoforge/io/files.hpp"

namespace holoforge::io {

inline constexpr std::uint16_t kContainerVersion = 1;

// HGRM: "HGRM" | u16 version | u16 rows | u16 cols | f32 pitch_mm |
//       rows*cols x (f32 re, f32 im) | u32 crc32, all little-endian.
// HVOL: "HVOL" | u16 version | u16 rows | u16 cols | u16 slices |
//       f32 pitch_mm | f32 z0_mm | f32 dz_mm | payload | u32 crc32.
// Samples and header reals are stored as f32; encoding is exact for values
// that are already representable in single precision.
Bytes encode_field(const ComplexField2D& field);
ComplexField2D decode_field(std::span<const std::uint8_t> bytes);
Bytes encode_volume(const ComplexVolume& volume);
ComplexVolume decode_volume(std::span<const std::uint8_t> bytes);

void write_field(const ComplexField2D& field, const std::filesystem::path& path);
ComplexField2D read_field(const std::filesystem::path& path);
void write_volume(const ComplexVolume& volume, const std::filesystem::path& path);
ComplexVolume read_volume(const std::filesystem::path& path);

// Rounds every sample (and the geometry) to what the container stores.
ComplexField2D quantize_f32(const ComplexField2D& field);
ComplexVolume quantize_f32(const ComplexVolume& volume);

}  // namespace holoforge::io
