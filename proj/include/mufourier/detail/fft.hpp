#pragma once

#include <complex>
#include <vector>

// Thin FFTW3 wrapper used by the large-order series paths.  Not part of the
// public surface.

namespace mufourier::detail {

// In-place complex DFT of size v.size() (any size; FFTW handles non-powers
// of two, but callers here always pad to powers of two).  sign = -1 forward,
// +1 backward; backward is unnormalized.
void fft(std::vector<std::complex<double>>& v, int sign);

// Full linear convolution of a and b (length a+b-1) via zero-padded FFTs.
std::vector<std::complex<double>> fft_convolve(
    const std::vector<std::complex<double>>& a,
    const std::vector<std::complex<double>>& b);

}  // namespace mufourier::detail
