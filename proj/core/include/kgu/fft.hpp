#pragma once

#include <span>

#include "kgu/spectral.hpp"

namespace kgu::fft {

/// out_k = (1/n) sum_j in_j e^{-2 pi i jk/n}. `in` and `out` must not alias.
void forward(std::span<const Complex> in, std::span<Complex> out);

/// out_j = sum_k in_k e^{+2 pi i jk/n}. `in` and `out` must not alias.
void backward(std::span<const Complex> in, std::span<Complex> out);

}  // namespace kgu::fft
