#include "mufourier/kaczmarz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mufourier/detail/fft.hpp"

namespace mufourier {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kFftThreshold = 4096;

// d_j = sum_{n=j..N} c_n conj(alpha_{n-j}) -- the exponential-basis
// coefficients of sum_n c_n g_n.  Correlation = convolution with the
// reversed conjugate.
std::vector<Complex> dual_fold(const std::vector<Complex>& c,
                               const std::vector<Complex>& alpha,
                               std::size_t order) {
    std::vector<Complex> rev(order + 1, 0.0);
    for (std::size_t i = 0; i <= order && i < alpha.size(); ++i)
        rev[order - i] = std::conj(alpha[i]);
    std::vector<Complex> cc(c.begin(), c.begin() + (order + 1));
    if (order + 1 <= kFftThreshold) {
        std::vector<Complex> d(order + 1, 0.0);
        for (std::size_t j = 0; j <= order; ++j) {
            Complex s = 0.0;
            for (std::size_t n = j; n <= order; ++n)
                s += cc[n] * std::conj(alpha[n - j]);
            d[j] = s;
        }
        return d;
    }
    auto full = detail::fft_convolve(cc, rev);
    return std::vector<Complex>(full.begin() + order, full.begin() + 2 * order + 1);
}

// Evaluate sum_j d_j e^{2 pi i j x_k} on the atoms by incremental rotation.
MuFunction exponential_sum_on_atoms(const AtomicMeasure& m,
                                    const std::vector<Complex>& d) {
    const std::size_t na = m.size();
    std::vector<Complex> rot(na), pw(na), acc(na, 0.0);
    for (std::size_t k = 0; k < na; ++k) {
        rot[k] = std::polar(1.0, kTwoPi * m.position(k));
        pw[k] = 1.0;
    }
    for (std::size_t j = 0; j < d.size(); ++j) {
        for (std::size_t k = 0; k < na; ++k) acc[k] += d[j] * pw[k];
        for (std::size_t k = 0; k < na; ++k) pw[k] *= rot[k];
        if ((j & 1023u) == 1023u)
            for (std::size_t k = 0; k < na; ++k) pw[k] /= std::abs(pw[k]);
    }
    return MuFunction(std::move(acc));
}

}  // namespace

FourierData::FourierData(std::vector<Complex> c)
    : coefficients(std::move(c)) {
    if (coefficients.empty())
        throw std::invalid_argument("FourierData: empty coefficient list");
    order = coefficients.size() - 1;
}

std::vector<double> FourierData::cumulative_energy() const {
    std::vector<double> out(coefficients.size());
    long double acc = 0.0L;
    for (std::size_t n = 0; n < coefficients.size(); ++n) {
        acc += (long double)std::norm(coefficients[n]);
        out[n] = double(acc);
    }
    return out;
}

double FourierData::total_energy() const {
    long double acc = 0.0L;
    for (const auto& c : coefficients) acc += (long double)std::norm(c);
    return double(acc);
}

std::vector<Complex> DualSequence::row(std::size_t n) const {
    if (n > alpha_.order())
        throw std::out_of_range("DualSequence::row: order overflow");
    std::vector<Complex> r(n + 1);
    for (std::size_t j = 0; j <= n; ++j) r[j] = std::conj(alpha_[n - j]);
    return r;
}

Complex DualSequence::eval(std::size_t n, double x) const {
    auto r = row(n);
    Complex s = 0.0;
    for (std::size_t j = 0; j <= n; ++j)
        s += r[j] * std::polar(1.0, kTwoPi * double(j) * x);
    return s;
}

MuFunction DualSequence::on_atoms(std::size_t n, const AtomicMeasure& m) const {
    std::vector<Complex> v(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) v[k] = eval(n, m.position(k));
    return MuFunction(std::move(v));
}

FourierData analyze(const AtomicMeasure& m, const MuFunction& f,
                    const PowerSeries& alpha, std::size_t order) {
    if (order > alpha.order())
        throw std::invalid_argument("analyze: order overflow (alpha too short)");
    auto fhat = moment_sequence(m, f, order);
    auto c = convolve(alpha, PowerSeries(std::move(fhat)), order);
    return FourierData(c.coefficients());
}

double parseval_defect(const AtomicMeasure& m, const MuFunction& f,
                       const PowerSeries& alpha, std::size_t order) {
    auto data = analyze(m, f, alpha, order);
    return norm_sq(m, f) - data.total_energy();
}

AnalysisRun analyze_adaptive(const AtomicMeasure& m, const MuFunction& f,
                             const PowerSeries& alpha, double tol,
                             std::size_t cap) {
    AnalysisRun run;
    run.norm_sq = norm_sq(m, f);
    const std::size_t full = std::min(cap, alpha.order());
    auto data = analyze(m, f, alpha, full);
    long double acc = 0.0L;
    std::size_t stop = full;
    std::vector<double> curve(full + 1);
    for (std::size_t n = 0; n <= full; ++n) {
        acc += (long double)std::norm(data.coefficients[n]);
        curve[n] = double((long double)run.norm_sq - acc);
    }
    bool found = false;
    for (std::size_t n = 0; n <= full; ++n)
        if (curve[n] <= tol) {
            stop = n;
            found = true;
            break;
        }
    run.hit_cap = !found;
    run.stop_order = stop;
    data.coefficients.resize(stop + 1);
    data.order = stop;
    run.data = std::move(data);
    curve.resize(stop + 1);
    run.defect_curve = std::move(curve);
    return run;
}

SynthesisResult synthesize_exponential(const AtomicMeasure& m,
                                       const FourierData& data,
                                       const MuFunction* reference) {
    SynthesisResult out;
    if (reference == nullptr) {
        out.values = exponential_sum_on_atoms(m, data.coefficients);
        return out;
    }
    if (reference->size() != m.size())
        throw std::invalid_argument("synthesize_exponential: reference length");
    const std::size_t na = m.size();
    std::vector<Complex> rot(na), pw(na), acc(na, 0.0);
    for (std::size_t k = 0; k < na; ++k) {
        rot[k] = std::polar(1.0, kTwoPi * m.position(k));
        pw[k] = 1.0;
    }
    out.residual_curve.resize(data.order + 1);
    for (std::size_t n = 0; n <= data.order; ++n) {
        for (std::size_t k = 0; k < na; ++k) acc[k] += data.coefficients[n] * pw[k];
        double r = 0.0;
        for (std::size_t k = 0; k < na; ++k)
            r += m.weight(k) * std::norm(reference->values[k] - acc[k]);
        out.residual_curve[n] = std::sqrt(r);
        for (std::size_t k = 0; k < na; ++k) pw[k] *= rot[k];
        if ((n & 1023u) == 1023u)
            for (std::size_t k = 0; k < na; ++k) pw[k] /= std::abs(pw[k]);
    }
    out.values = MuFunction(std::move(acc));
    return out;
}

SynthesisResult synthesize_dual(const AtomicMeasure& m, const FourierData& data,
                                const PowerSeries& alpha,
                                const MuFunction* reference) {
    if (data.order > alpha.order())
        throw std::invalid_argument("synthesize_dual: order overflow");
    SynthesisResult out;
    if (reference == nullptr) {
        auto d = dual_fold(data.coefficients, alpha.coefficients(), data.order);
        out.values = exponential_sum_on_atoms(m, d);
        return out;
    }
    if (reference->size() != m.size())
        throw std::invalid_argument("synthesize_dual: reference length");
    // level-by-level partial sums: level n adds data_n * g_n on the atoms
    const std::size_t na = m.size();
    DualSequence g(alpha);
    std::vector<Complex> acc(na, 0.0);
    // g_n on atoms incrementally: maintain e_j(x_k) powers and the inner
    // accumulation sum_{j<=n} conj(alpha_{n-j}) e_j -- recomputed per level
    // (order^2 * atoms); residual curves are only requested at small orders.
    out.residual_curve.resize(data.order + 1);
    for (std::size_t n = 0; n <= data.order; ++n) {
        MuFunction gn = g.on_atoms(n, m);
        for (std::size_t k = 0; k < na; ++k)
            acc[k] += data.coefficients[n] * gn.values[k];
        double r = 0.0;
        for (std::size_t k = 0; k < na; ++k)
            r += m.weight(k) * std::norm(reference->values[k] - acc[k]);
        out.residual_curve[n] = std::sqrt(r);
    }
    out.values = MuFunction(std::move(acc));
    return out;
}

std::vector<MuFunction> kaczmarz_iterate(
    const AtomicMeasure& m, const std::vector<Complex>& target_moments,
    std::size_t order) {
    if (target_moments.size() < order + 1)
        throw std::invalid_argument("kaczmarz_iterate: not enough target moments");
    const std::size_t na = m.size();
    std::vector<Complex> rot(na), pw(na);
    for (std::size_t k = 0; k < na; ++k) {
        rot[k] = std::polar(1.0, kTwoPi * m.position(k));
        pw[k] = 1.0;  // e_n(x_k), walked upward in n
    }
    std::vector<MuFunction> iterates;
    iterates.reserve(order + 1);
    MuFunction h(std::vector<Complex>(na, 0.0));
    for (std::size_t n = 0; n <= order; ++n) {
        // <h, e_n> = sum_k w_k h_k conj(e_n(x_k))
        Complex proj = 0.0;
        for (std::size_t k = 0; k < na; ++k)
            proj += m.weight(k) * h.values[k] * std::conj(pw[k]);
        const Complex step = target_moments[n] - proj;
        for (std::size_t k = 0; k < na; ++k) h.values[k] += step * pw[k];
        iterates.push_back(h);
        for (std::size_t k = 0; k < na; ++k) pw[k] *= rot[k];
        if ((n & 1023u) == 1023u)
            for (std::size_t k = 0; k < na; ++k) pw[k] /= std::abs(pw[k]);
    }
    return iterates;
}

}  // namespace mufourier
