#include "mufourier/detail/fft.hpp"

#include <fftw3.h>

#include <cstddef>

namespace mufourier::detail {

void fft(std::vector<std::complex<double>>& v, int sign) {
    if (v.size() < 2) return;
    auto* data = reinterpret_cast<fftw_complex*>(v.data());
    fftw_plan plan = fftw_plan_dft_1d(
        int(v.size()), data, data,
        sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

std::vector<std::complex<double>> fft_convolve(
    const std::vector<std::complex<double>>& a,
    const std::vector<std::complex<double>>& b) {
    const std::size_t out = a.size() + b.size() - 1;
    std::size_t n = 1;
    while (n < out) n <<= 1;
    std::vector<std::complex<double>> fa(n), fb(n);
    std::copy(a.begin(), a.end(), fa.begin());
    std::copy(b.begin(), b.end(), fb.begin());
    fft(fa, -1);
    fft(fb, -1);
    const double scale = 1.0 / double(n);
    for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i] * scale;
    fft(fa, +1);
    fa.resize(out);
    return fa;
}

}  // namespace mufourier::detail
