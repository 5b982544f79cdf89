#include "mufourier/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mufourier/detail/fft.hpp"

namespace mufourier {

namespace {

// Above this output length, convolutions and reciprocals go through FFTW;
// below it the literal O(N^2) formulas run (deterministic and fast enough).
constexpr std::size_t kFftThreshold = 4096;

std::vector<Complex> convolve_direct(const std::vector<Complex>& p,
                                     const std::vector<Complex>& q,
                                     std::size_t order) {
    std::vector<Complex> out(order + 1, 0.0);
    for (std::size_t j = 0; j < p.size() && j <= order; ++j) {
        const Complex pj = p[j];
        if (pj == Complex(0.0)) continue;
        const std::size_t top = std::min(order - j, q.size() - 1);
        for (std::size_t k = 0; k <= top; ++k) out[j + k] += pj * q[k];
    }
    return out;
}

std::vector<Complex> convolve_vec(const std::vector<Complex>& p,
                                  const std::vector<Complex>& q,
                                  std::size_t order) {
    if (order + 1 <= kFftThreshold || p.size() < 2 || q.size() < 2)
        return convolve_direct(p, q, order);
    // trim inputs beyond the requested order before padding
    std::vector<Complex> a(p.begin(),
                           p.begin() + std::min(p.size(), order + 1));
    std::vector<Complex> b(q.begin(),
                           q.begin() + std::min(q.size(), order + 1));
    auto full = detail::fft_convolve(a, b);
    full.resize(order + 1, 0.0);
    return full;
}

// Newton doubling for the truncated reciprocal: x <- x (2 - p x), exact as
// a series identity at each doubling of the truncation length.
std::vector<Complex> reciprocal_newton(const std::vector<Complex>& p) {
    const std::size_t n = p.size();
    std::vector<Complex> x{1.0 / p[0]};
    std::size_t len = 1;
    while (len < n) {
        len = std::min(2 * len, n);
        std::vector<Complex> ph(p.begin(), p.begin() + len);
        auto px = convolve_vec(ph, x, len - 1);
        for (auto& c : px) c = -c;
        px[0] += 2.0;
        x = convolve_vec(x, px, len - 1);
    }
    return x;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Complex> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty())
        throw std::invalid_argument("PowerSeries: empty coefficient list");
}

PowerSeries PowerSeries::zero(std::size_t order) {
    return PowerSeries(std::vector<Complex>(order + 1, 0.0));
}

PowerSeries cauchy_series(const AtomicMeasure& m, std::size_t order) {
    return PowerSeries(moment_sequence(m, order));
}

Complex cauchy_eval(const AtomicMeasure& m, Complex z) {
    if (!(std::abs(z) < 1.0))
        throw std::invalid_argument("cauchy_eval: |z| must be < 1");
    Complex s = 0.0;
    for (const auto& a : m.atoms())
        s += a.weight /
             (1.0 - z * std::polar(1.0, -2.0 * std::numbers::pi * a.position));
    return s;
}

PowerSeries reciprocal_series(const PowerSeries& p) {
    const auto& c = p.coefficients();
    if (c[0] == Complex(0.0))
        throw std::invalid_argument("reciprocal_series: vanishing constant term");
    if (c.size() > kFftThreshold)
        return PowerSeries(reciprocal_newton(c));
    std::vector<Complex> alpha(c.size());
    const Complex inv0 = 1.0 / c[0];
    alpha[0] = inv0;
    for (std::size_t n = 1; n < c.size(); ++n) {
        Complex s = 0.0;
        for (std::size_t k = 1; k <= n; ++k) s += c[k] * alpha[n - k];
        alpha[n] = -inv0 * s;
    }
    return PowerSeries(std::move(alpha));
}

double reciprocal_residual(const PowerSeries& p, const PowerSeries& alpha) {
    const std::size_t order = std::min(p.order(), alpha.order());
    auto conv = convolve_vec(p.coefficients(), alpha.coefficients(), order);
    conv[0] -= 1.0;
    double worst = 0.0;
    for (const auto& c : conv) worst = std::max(worst, std::abs(c));
    return worst;
}

PowerSeries inner_function_series(const PowerSeries& alpha) {
    std::vector<Complex> b(alpha.coefficients());
    for (auto& c : b) c = -c;
    b[0] += 1.0;
    return PowerSeries(std::move(b));
}

Complex series_eval(const PowerSeries& p, Complex z) {
    const auto& c = p.coefficients();
    Complex acc = 0.0;
    for (std::size_t n = c.size(); n-- > 0;) acc = acc * z + c[n];
    return acc;
}

PowerSeries convolve(const PowerSeries& p, const PowerSeries& q,
                     std::size_t order) {
    return PowerSeries(convolve_vec(p.coefficients(), q.coefficients(), order));
}

}  // namespace mufourier
