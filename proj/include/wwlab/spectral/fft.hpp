#pragma once

#include <complex>
#include <span>

namespace wwlab::fft {

/// Unnormalized 2D DFT with kernel e^{-2 pi i k.j/n}, out-of-place.
void forward(int n, std::span<const std::complex<double>> in, std::span<std::complex<double>> out);
/// Unnormalized 2D DFT with kernel e^{+2 pi i k.j/n}, out-of-place.
void inverse(int n, std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

}  // namespace wwlab::fft
