#pragma once

#include <filesystem>

#include "holoforge/field.hpp"
#include "holoforge/io/files.hpp"

namespace holoforge::io {

enum class Channel { amplitude, phase };

/// 8-bit grayscale rendering. Amplitude is min-max normalized per image (a
/// constant amplitude renders as uniform 128); phase maps (-pi, pi] linearly
/// onto [0, 255].
std::vector<std::uint8_t> render_gray(const ComplexField2D& field, Channel channel);
Bytes encode_png(const ComplexField2D& field, Channel channel);
void render_png(const ComplexField2D& field, Channel channel,
                const std::filesystem::path& path);

}  // namespace holoforge::io
