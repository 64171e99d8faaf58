#pragma once

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>
#include <unistd.h>

#include "holoforge/error.hpp"

namespace testing {

template <typename Fn>
std::optional<holoforge::ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const holoforge::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

template <typename Fn>
std::string error_message(Fn&& fn) {
  try {
    fn();
  } catch (const holoforge::Error& e) {
    return e.what();
  }
  return {};
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag = "hf") {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            (tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace testing
