#pragma once

#include <vector>

#include "mufourier/measure.hpp"

// Power-series machinery: the Cauchy transform mu_plus, the alpha-sequence
// (Taylor coefficients of 1/mu_plus), and the inner function b = 1 - 1/mu_plus.
//
// Convention: mu_plus(z) = integral of 1/(1 - z e^{-2 pi i x}) d mu(x), so the
// n-th Taylor coefficient of mu_plus is exactly mu-hat(n).

namespace mufourier {

// Truncated complex power series; coefficients indexed 0..order.
class PowerSeries {
public:
    explicit PowerSeries(std::vector<Complex> coefficients);
    static PowerSeries zero(std::size_t order);

    std::size_t order() const { return coefficients_.size() - 1; }
    const std::vector<Complex>& coefficients() const { return coefficients_; }
    Complex operator[](std::size_t n) const { return coefficients_[n]; }
    Complex& operator[](std::size_t n) { return coefficients_[n]; }

private:
    std::vector<Complex> coefficients_;
};

// Series of mu_plus to the given order: coefficient n = moment(m, n).
PowerSeries cauchy_series(const AtomicMeasure& m, std::size_t order);

// mu_plus(z) = sum_k w_k / (1 - z e^{-2 pi i x_k}).  Requires |z| < 1;
// nonvanishing on the open disk.
Complex cauchy_eval(const AtomicMeasure& m, Complex z);

// Reciprocal series: alpha_0 = 1/p_0, alpha_n = -(1/p_0) sum_{k=1..n} p_k
// alpha_{n-k}.  Throws if p_0 = 0.  Large orders switch to Newton doubling
// (same truncated series, FFT-accelerated); callers should certify with
// reciprocal_residual.
PowerSeries reciprocal_series(const PowerSeries& p);

// max_n |(p * alpha)_n - delta_{n,0}|: the mandatory residual certificate
// for reciprocal_series.
double reciprocal_residual(const PowerSeries& p, const PowerSeries& alpha);

// b = 1 - 1/mu_plus: b_0 = 1 - alpha_0, b_n = -alpha_n.  For probability
// measures b_0 = 0 and b is inner.
PowerSeries inner_function_series(const PowerSeries& alpha);

// Horner evaluation sum_n p_n z^n; truncation accuracy is the caller's
// concern.
Complex series_eval(const PowerSeries& p, Complex z);

// Cauchy product truncated to the given order:
// coefficient n = sum_{j<=n} p_j q_{n-j}.
PowerSeries convolve(const PowerSeries& p, const PowerSeries& q,
                     std::size_t order);

}  // namespace mufourier
