#include "holoforge/io/png.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <png.h>

#include "holoforge/error.hpp"

namespace holoforge::io {
namespace {

std::uint8_t to_byte(double unit) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(unit, 0.0, 1.0) * 255.0));
}

void append(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<Bytes*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + length);
}

}  // namespace

std::vector<std::uint8_t> render_gray(const ComplexField2D& field, Channel channel) {
  std::vector<std::uint8_t> pixels(field.size());
  if (channel == Channel::amplitude) {
    const auto amp = amplitude(field);
    const auto [lo, hi] = std::minmax_element(amp.values.begin(), amp.values.end());
    const double range = *hi - *lo;
    for (std::size_t i = 0; i < pixels.size(); ++i) {
      pixels[i] = range > 0.0 ? to_byte((amp.values[i] - *lo) / range) : 128;
    }
  } else {
    const auto ph = phase(field);
    for (std::size_t i = 0; i < pixels.size(); ++i) {
      pixels[i] = to_byte((ph.values[i] + std::numbers::pi) / (2.0 * std::numbers::pi));
    }
  }
  return pixels;
}

Bytes encode_png(const ComplexField2D& field, Channel channel) {
  const auto pixels = render_gray(field, channel);
  Bytes out;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  require(png != nullptr, ErrorKind::io, "libpng initialization failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(ErrorKind::io, "PNG encoding failed");
  }
  png_set_write_fn(png, &out, append, nullptr);
  png_set_IHDR(png, info, static_cast<png_uint_32>(field.cols()),
               static_cast<png_uint_32>(field.rows()), 8, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::size_t r = 0; r < field.rows(); ++r) {
    png_write_row(png, const_cast<png_bytep>(pixels.data() + r * field.cols()));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

void render_png(const ComplexField2D& field, Channel channel,
                const std::filesystem::path& path) {
  write_file_atomic(path, encode_png(field, channel));
}

}  // namespace holoforge::io
