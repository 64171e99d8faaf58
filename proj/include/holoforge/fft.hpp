#pragma once

#include <cstddef>
#include <span>

#include "holoforge/field.hpp"

namespace holoforge::fft {

// In-place 2D DFT of a row-major rows x cols buffer. The inverse carries the
// 1/(rows*cols) factor so forward followed by inverse is the identity.
// Safe to call concurrently; plans are created once per shape and shared.
void forward(std::span<Complex> data, std::size_t rows, std::size_t cols);
void inverse(std::span<Complex> data, std::size_t rows, std::size_t cols);

}  // namespace holoforge::fft
