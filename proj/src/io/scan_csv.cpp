#include "holoforge/io/scan_csv.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <vector>

#include "holoforge/error.hpp"
#include "holoforge/io/files.hpp"

namespace holoforge::io {
namespace {

std::string at_line(std::size_t line, const std::string& msg) {
  return "line " + std::to_string(line) + ": " + msg;
}

double parse_number(std::string_view text, std::size_t line, int column) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    fail(ErrorKind::format, at_line(line, "column " + std::to_string(column) +
                                               ": cannot parse '" + std::string(text) + "'"));
  }
  return value;
}

}  // namespace

ScanTrace parse_scan(std::string_view text) {
  std::vector<ScanSample> samples;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!header_seen) {
      require(line == kScanCsvHeader, ErrorKind::format,
              at_line(line_no, "expected header '" + std::string(kScanCsvHeader) + "'"));
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;

    std::array<std::string_view, 5> fields;
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      if (count < fields.size()) fields[count] = line.substr(start, comma - start);
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    require(count == fields.size(), ErrorKind::format,
            at_line(line_no, "expected 5 fields, found " + std::to_string(count)));
    ScanSample s;
    s.t_ms = parse_number(fields[0], line_no, 1);
    s.x_mm = parse_number(fields[1], line_no, 2);
    s.y_mm = parse_number(fields[2], line_no, 3);
    s.amplitude = parse_number(fields[3], line_no, 4);
    s.phase_rad = parse_number(fields[4], line_no, 5);
    require(s.amplitude >= 0.0, ErrorKind::format, at_line(line_no, "negative amplitude"));
    if (!samples.empty()) {
      require(s.t_ms > samples.back().t_ms, ErrorKind::format,
              at_line(line_no, "timestamps must be strictly increasing"));
    }
    samples.push_back(s);
  }
  require(header_seen, ErrorKind::format, "empty scan file (missing header)");
  require(samples.size() >= 3, ErrorKind::degenerate_input,
          "fewer than 3 samples (found " + std::to_string(samples.size()) + ")");
  return ScanTrace(std::move(samples));
}

ScanTrace read_scan(const std::filesystem::path& path) {
  const auto text = read_text(path);
  try {
    return parse_scan(text);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::string format_scan(const ScanTrace& trace) {
  std::string out(kScanCsvHeader);
  out += '\n';
  char buf[160];
  for (const auto& s : trace.samples()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", s.t_ms, s.x_mm,
                  s.y_mm, s.amplitude, s.phase_rad);
    out += buf;
  }
  return out;
}

void write_scan(const ScanTrace& trace, const std::filesystem::path& path) {
  write_text_atomic(path, format_scan(trace));
}

}  // namespace holoforge::io
