#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "holoforge/field.hpp"

namespace holoforge::io {

inline constexpr std::string_view kScanCsvHeader = "t_ms,x_mm,y_mm,amplitude,phase_rad";

// Parse errors name the 1-based line number.
ScanTrace parse_scan(std::string_view text);
ScanTrace read_scan(const std::filesystem::path& path);

std::string format_scan(const ScanTrace& trace);
void write_scan(const ScanTrace& trace, const std::filesystem::path& path);

}  // namespace holoforge::io
