#include "holoforge/io/container.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "holoforge/error.hpp"

namespace holoforge::io {
namespace {

constexpr std::size_t kFieldHeader = 4 + 2 + 2 + 2 + 4;
constexpr std::size_t kVolumeHeader = 4 + 2 + 2 + 2 + 2 + 4 + 4 + 4;

class Writer {
 public:
  explicit Writer(std::size_t reserve) { bytes_.reserve(reserve); }

  void magic(const char (&tag)[5]) { bytes_.insert(bytes_.end(), tag, tag + 4); }
  void u16(std::uint16_t v) {
    bytes_.push_back(static_cast<std::uint8_t>(v & 0xFF));
    bytes_.push_back(static_cast<std::uint8_t>(v >> 8));
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f32(double v) { u32(std::bit_cast<std::uint32_t>(static_cast<float>(v))); }
  void samples(std::span<const Complex> data) {
    for (const auto& c : data) {
      require(std::isfinite(static_cast<float>(c.real())) &&
                  std::isfinite(static_cast<float>(c.imag())),
              ErrorKind::invalid_argument, "sample magnitude overflows f32");
      f32(c.real());
      f32(c.imag());
    }
  }
  Bytes finish() {
    u32(crc32(bytes_));
    return std::move(bytes_);
  }

 private:
  Bytes bytes_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint16_t u16() {
    const auto v = static_cast<std::uint16_t>(bytes_[pos_] | (bytes_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }
  double f32() { return static_cast<double>(std::bit_cast<float>(u32())); }
  std::vector<Complex> samples(std::size_t count) {
    std::vector<Complex> out(count);
    for (auto& c : out) {
      const double re = f32();
      const double im = f32();
      c = {re, im};
    }
    return out;
  }
  void skip(std::size_t n) { pos_ += n; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

// Magic, truncation and checksum checks shared by both containers.
void check_envelope(std::span<const std::uint8_t> bytes, const char (&tag)[5],
                    std::size_t header_size) {
  const std::string name(tag, 4);
  require(bytes.size() >= 4 && std::memcmp(bytes.data(), tag, 4) == 0, ErrorKind::format,
          "bad magic: not an " + name + " container");
  require(bytes.size() >= header_size + 4, ErrorKind::format,
          name + " container truncated (" + std::to_string(bytes.size()) + " bytes)");
  const auto body = bytes.first(bytes.size() - 4);
  const auto* tail = bytes.data() + bytes.size() - 4;
  const std::uint32_t stored = static_cast<std::uint32_t>(tail[0]) |
                               (static_cast<std::uint32_t>(tail[1]) << 8) |
                               (static_cast<std::uint32_t>(tail[2]) << 16) |
                               (static_cast<std::uint32_t>(tail[3]) << 24);
  require(crc32(body) == stored, ErrorKind::checksum, name + " CRC-32 mismatch");
}

std::uint16_t dim16(std::size_t n, const char* what) {
  require(n <= std::numeric_limits<std::uint16_t>::max(), ErrorKind::invalid_argument,
          std::string(what) + " exceeds the 16-bit container limit");
  return static_cast<std::uint16_t>(n);
}

void check_f32(double v, const char* what) {
  require(std::isfinite(static_cast<float>(v)), ErrorKind::invalid_argument,
          std::string(what) + " is not representable as a finite f32");
}

template <typename Build>
auto decode_or_format(Build&& build, const char* name) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::format || e.kind() == ErrorKind::checksum) throw;
    fail(ErrorKind::format, std::string(name) + " content invalid: " + e.what());
  }
}

}  // namespace

Bytes encode_field(const ComplexField2D& field) {
  check_f32(field.pitch_mm(), "pitch");
  Writer w(kFieldHeader + 8 * field.size() + 4);
  w.magic("HGRM");
  w.u16(kContainerVersion);
  w.u16(dim16(field.rows(), "rows"));
  w.u16(dim16(field.cols(), "cols"));
  w.f32(field.pitch_mm());
  w.samples(field.data());
  return w.finish();
}

ComplexField2D decode_field(std::span<const std::uint8_t> bytes) {
  check_envelope(bytes, "HGRM", kFieldHeader);
  Reader r(bytes);
  r.skip(4);
  const auto version = r.u16();
  require(version == kContainerVersion, ErrorKind::format,
          "unsupported HGRM version " + std::to_string(version));
  const std::size_t rows = r.u16();
  const std::size_t cols = r.u16();
  const double pitch = r.f32();
  require(bytes.size() == kFieldHeader + 8 * rows * cols + 4, ErrorKind::format,
          "HGRM payload length does not match " + std::to_string(rows) + "x" +
              std::to_string(cols));
  return decode_or_format(
      [&] { return ComplexField2D(rows, cols, pitch, r.samples(rows * cols)); }, "HGRM");
}

Bytes encode_volume(const ComplexVolume& volume) {
  check_f32(volume.pitch_mm(), "pitch");
  check_f32(volume.z0_mm(), "z0");
  check_f32(volume.dz_mm(), "dz");
  Writer w(kVolumeHeader + 8 * volume.data().size() + 4);
  w.magic("HVOL");
  w.u16(kContainerVersion);
  w.u16(dim16(volume.rows(), "rows"));
  w.u16(dim16(volume.cols(), "cols"));
  w.u16(dim16(volume.slices(), "slices"));
  w.f32(volume.pitch_mm());
  w.f32(volume.z0_mm());
  w.f32(volume.dz_mm());
  w.samples(volume.data());
  return w.finish();
}

ComplexVolume decode_volume(std::span<const std::uint8_t> bytes) {
  check_envelope(bytes, "HVOL", kVolumeHeader);
  Reader r(bytes);
  r.skip(4);
  const auto version = r.u16();
  require(version == kContainerVersion, ErrorKind::format,
          "unsupported HVOL version " + std::to_string(version));
  const std::size_t rows = r.u16();
  const std::size_t cols = r.u16();
  const std::size_t slices = r.u16();
  const double pitch = r.f32();
  const double z0 = r.f32();
  const double dz = r.f32();
  require(bytes.size() == kVolumeHeader + 8 * rows * cols * slices + 4, ErrorKind::format,
          "HVOL payload length does not match its header");
  return decode_or_format(
      [&] {
        return ComplexVolume(rows, cols, slices, pitch, z0, dz,
                             r.samples(rows * cols * slices));
      },
      "HVOL");
}

void write_field(const ComplexField2D& field, const std::filesystem::path& path) {
  write_file_atomic(path, encode_field(field));
}

ComplexField2D read_field(const std::filesystem::path& path) {
  try {
    return decode_field(read_file(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::io) throw;
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

void write_volume(const ComplexVolume& volume, const std::filesystem::path& path) {
  write_file_atomic(path, encode_volume(volume));
}

ComplexVolume read_volume(const std::filesystem::path& path) {
  try {
    return decode_volume(read_file(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::io) throw;
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

namespace {
double to_f32(double v) { return static_cast<double>(static_cast<float>(v)); }
// Built with push_back: gcc 11 at -O3 vectorizes the indexed form and drops
// the conversion on the odd tail element.
std::vector<Complex> quantized(std::span<const Complex> data) {
  std::vector<Complex> out;
  out.reserve(data.size());
  for (const auto& c : data) out.emplace_back(to_f32(c.real()), to_f32(c.imag()));
  return out;
}
}  // namespace

ComplexField2D quantize_f32(const ComplexField2D& field) {
  return ComplexField2D(field.rows(), field.cols(), to_f32(field.pitch_mm()),
                        quantized(field.data()));
}

ComplexVolume quantize_f32(const ComplexVolume& volume) {
  return ComplexVolume(volume.rows(), volume.cols(), volume.slices(),
                       to_f32(volume.pitch_mm()), to_f32(volume.z0_mm()),
                       to_f32(volume.dz_mm()), quantized(volume.data()));
}

}  // namespace holoforge::io
