#include "mufourier/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "mufourier/detail/fft.hpp"

namespace mufourier {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kFftThreshold = 4096;

// ghat_n(z) = sum_{k<=n} conj(alpha_{n-k}) mu-hat(z - k) for n = 0..order.
// The mu-hat row is walked incrementally in k (mu-hat(z-k) picks up one
// e^{+2 pi i x_j} rotation per atom per step); the n-sum is a convolution.
std::vector<Complex> ghat_row(const AtomicMeasure& m, const PowerSeries& alpha,
                              Complex z, std::size_t order) {
    if (order > alpha.order())
        throw std::invalid_argument("ghat_row: order overflow");
    const std::size_t d = m.size();
    std::vector<Complex> base(d), rot(d), pw(d);
    const Complex i2pi(0.0, -kTwoPi);
    for (std::size_t k = 0; k < d; ++k) {
        base[k] = m.weight(k) * std::exp(i2pi * z * m.position(k));
        rot[k] = std::polar(1.0, kTwoPi * m.position(k));
        pw[k] = 1.0;
    }
    std::vector<Complex> mu_row(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < d; ++j) s += base[j] * pw[j];
        mu_row[k] = s;
        for (std::size_t j = 0; j < d; ++j) pw[j] *= rot[j];
        if ((k & 1023u) == 1023u)
            for (std::size_t j = 0; j < d; ++j) pw[j] /= std::abs(pw[j]);
    }
    std::vector<Complex> conj_alpha(order + 1);
    for (std::size_t i = 0; i <= order; ++i)
        conj_alpha[i] = std::conj(alpha[i]);
    if (order + 1 <= kFftThreshold) {
        std::vector<Complex> out(order + 1, 0.0);
        for (std::size_t n = 0; n <= order; ++n) {
            Complex s = 0.0;
            for (std::size_t k = 0; k <= n; ++k)
                s += conj_alpha[n - k] * mu_row[k];
            out[n] = s;
        }
        return out;
    }
    auto full = detail::fft_convolve(conj_alpha, mu_row);
    full.resize(order + 1);
    return full;
}

double phi_norm_sq(const AtomicMeasure& m, Complex z) {
    // ||phi_z||^2_mu with phi_z(x) = e^{2 pi i conj(z) x}
    double s = 0.0;
    for (const auto& a : m.atoms())
        s += a.weight * std::exp(2.0 * kTwoPi * a.position * z.imag());
    return s;
}

}  // namespace

FourierData beta_coefficients(const SampleSet& samples,
                              const PowerSeries& alpha, std::size_t order) {
    if (samples.size() == 0)
        throw std::invalid_argument("beta_coefficients: empty sample set");
    if (order > samples.size() - 1 || order > alpha.order())
        throw std::invalid_argument(
            "beta_coefficients: insufficient samples or alpha order for "
            "requested order");
    auto c = convolve(alpha, PowerSeries(samples.values), order);
    return FourierData(c.coefficients());
}

SummabilityReport summability_report(const FourierData& beta, double tol) {
    SummabilityReport rep;
    rep.tol = tol;
    rep.partial_sums = beta.cumulative_energy();
    const std::size_t N = rep.partial_sums.size() - 1;
    rep.total = rep.partial_sums[N];
    const std::size_t two_thirds = (2 * N) / 3;
    rep.final_third_energy = rep.total - rep.partial_sums[two_thirds];
    const std::size_t nine_tenths = (9 * N) / 10;
    rep.last_decade_ratio =
        rep.total > 0.0
            ? (rep.total - rep.partial_sums[nine_tenths]) / rep.total
            : 0.0;
    rep.verdict = rep.final_third_energy <= tol;
    return rep;
}

double ReconstructionReport::error() const {
    return reference ? std::abs(reconstructed - *reference) :
                       std::numeric_limits<double>::quiet_NaN();
}

std::vector<ReconstructionReport> reconstruct_many(
    const SampleSet& samples, const AtomicMeasure& m, const PowerSeries& alpha,
    const std::vector<Complex>& points, std::size_t order, double adaptive_tol,
    const std::vector<Complex>* references) {
    if (references && references->size() != points.size())
        throw std::invalid_argument("reconstruct_many: reference count");
    const std::size_t full =
        std::min(samples.size() - 1, alpha.order());
    if (order > full)
        throw std::invalid_argument("reconstruct_many: insufficient data");
    FourierData beta = beta_coefficients(samples, alpha, full);
    auto beta_cum = beta.cumulative_energy();
    const double beta_total = beta_cum.back();

    std::vector<ReconstructionReport> out;
    out.reserve(points.size());
    for (std::size_t p = 0; p < points.size(); ++p) {
        const Complex z = points[p];
        auto ghat = ghat_row(m, alpha, z, order);
        const double phi = phi_norm_sq(m, z);
        Complex value = 0.0;
        long double gcum = 0.0L;
        std::size_t stop = order;
        double bound = 0.0;
        for (std::size_t n = 0; n <= order; ++n) {
            value += beta.coefficients[n] * ghat[n];
            gcum += (long double)std::norm(ghat[n]);
            const double beta_tail = std::max(0.0, beta_total - beta_cum[n]);
            const double g_tail = std::max(0.0, phi - double(gcum));
            bound = std::sqrt(beta_tail) * std::sqrt(g_tail);
            if (adaptive_tol > 0.0 && bound <= adaptive_tol) {
                stop = n;
                break;
            }
        }
        ReconstructionReport rep;
        rep.point = z;
        rep.reconstructed = value;
        rep.truncation_order = stop;
        rep.tail_energy = std::max(0.0, beta_total - beta_cum[stop]);
        rep.tail_bound = bound;
        if (references) rep.reference = (*references)[p];
        out.push_back(rep);
    }
    return out;
}

ReconstructionReport reconstruct(const SampleSet& samples,
                                 const AtomicMeasure& m,
                                 const PowerSeries& alpha, Complex z,
                                 std::size_t order) {
    return reconstruct_many(samples, m, alpha, {z}, order).front();
}

VerificationReport verify_representation(
    const SampleSet& samples, const AtomicMeasure& m, const PowerSeries& alpha,
    const std::vector<Complex>& points, const std::vector<Complex>& references,
    double tol) {
    if (points.size() != references.size())
        throw std::invalid_argument("verify_representation: reference count");
    VerificationReport rep;
    const std::size_t full = std::min(samples.size() - 1, alpha.order());
    rep.summability = summability_report(beta_coefficients(samples, alpha, full),
                                         tol);
    rep.points = reconstruct_many(samples, m, alpha, points, full,
                                  /*adaptive_tol=*/0.0, &references);
    rep.max_error = 0.0;
    for (const auto& r : rep.points)
        rep.max_error = std::max(rep.max_error, r.error());
    rep.verdict = rep.summability.verdict && rep.max_error <= tol;
    return rep;
}

}  // namespace mufourier
