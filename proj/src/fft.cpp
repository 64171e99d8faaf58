#include "holoforge/fft.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include <fftw3.h>

#include "holoforge/error.hpp"

namespace holoforge::fft {
namespace {

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t rows, std::size_t cols, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_tuple(rows, cols, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    // FFTW_ESTIMATE does not touch the arrays while planning, and UNALIGNED
    // lets the plan run on any buffer via fftw_execute_dft.
    std::vector<Complex> scratch(rows * cols);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_2d(static_cast<int>(rows), static_cast<int>(cols),
                                      buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    require(plan != nullptr, ErrorKind::invalid_argument, "FFTW planning failed");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<std::size_t, std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void execute(std::span<Complex> data, std::size_t rows, std::size_t cols, int sign) {
  require(data.size() == rows * cols, ErrorKind::shape_mismatch,
          "FFT buffer does not match its shape");
  auto plan = cache().get(rows, cols, sign);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buf, buf);
}

}  // namespace

void forward(std::span<Complex> data, std::size_t rows, std::size_t cols) {
  execute(data, rows, cols, FFTW_FORWARD);
}

void inverse(std::span<Complex> data, std::size_t rows, std::size_t cols) {
  execute(data, rows, cols, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(rows * cols);
  for (auto& v : data) v *= scale;
}

}  // namespace holoforge::fft
