#include "mufourier/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mufourier {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// sqrt(max(0, 1 - sum_{k<=K} |b_k|^2)): l^2 tail of an inner function's
// coefficients beyond index K.
double inner_tail(const PowerSeries& b, std::size_t K) {
    long double acc = 0.0L;
    for (std::size_t k = 0; k <= K && k <= b.order(); ++k)
        acc += (long double)std::norm(b[k]);
    return std::sqrt(std::max(0.0, 1.0 - double(acc)));
}

double series_energy(const PowerSeries& p, std::size_t from) {
    long double acc = 0.0L;
    for (std::size_t n = from; n <= p.order(); ++n)
        acc += (long double)std::norm(p[n]);
    return double(acc);
}

}  // namespace

ModelCandidate nct_series(const AtomicMeasure& m, const MuFunction& f,
                          const PowerSeries& alpha, std::size_t order) {
    auto data = analyze(m, f, alpha, order);
    return {PowerSeries(std::move(data.coefficients)),
            Provenance::FromFunction};
}

Complex nct_quotient(const AtomicMeasure& m, const MuFunction& f, Complex z) {
    if (f.size() != m.size())
        throw std::invalid_argument("nct_quotient: length mismatch");
    if (!(std::abs(z) < 1.0))
        throw std::invalid_argument("nct_quotient: |z| must be < 1");
    Complex num = 0.0;
    for (std::size_t k = 0; k < m.size(); ++k)
        num += m.weight(k) * f.values[k] /
               (1.0 - z * std::polar(1.0, -kTwoPi * m.position(k)));
    return num / cauchy_eval(m, z);
}

BoundaryRecovery boundary_recover(const ModelCandidate& candidate,
                                  const AtomicMeasure& m,
                                  const std::vector<double>& r_schedule,
                                  const MuFunction* reference,
                                  std::optional<double> norm_hint,
                                  double tail_tol) {
    if (r_schedule.empty())
        throw std::invalid_argument("boundary_recover: empty radius schedule");
    for (std::size_t i = 0; i < r_schedule.size(); ++i) {
        if (!(r_schedule[i] > 0.0 && r_schedule[i] < 1.0))
            throw std::invalid_argument(
                "boundary_recover: radii must lie in (0,1)");
        if (i > 0 && !(r_schedule[i] > r_schedule[i - 1]))
            throw std::invalid_argument(
                "boundary_recover: radii must increase toward 1");
    }
    if (reference && reference->size() != m.size())
        throw std::invalid_argument("boundary_recover: reference length");

    const PowerSeries& G = candidate.series;
    double tail_l2 = 0.0;
    if (norm_hint) {
        const double known = series_energy(G, 0);
        tail_l2 = std::sqrt(std::max(0.0, *norm_hint * *norm_hint - known));
    }

    BoundaryRecovery out;
    out.boundary.r_schedule = r_schedule;
    out.boundary.points.resize(m.size());
    for (std::size_t k = 0; k < m.size(); ++k)
        out.boundary.points[k] = m.position(k);
    out.tail_bounds.reserve(r_schedule.size());

    std::vector<Complex> values(m.size());
    for (double r : r_schedule) {
        // tail of sum G_n z^n over n > order at |z| = r, given the l^2 tail:
        // Cauchy-Schwarz against the geometric sequence
        const double bound =
            norm_hint ? tail_l2 * std::pow(r, double(G.order() + 1)) /
                            std::sqrt(1.0 - r * r)
                      : 0.0;
        out.tail_bounds.push_back(bound);
        for (std::size_t k = 0; k < m.size(); ++k)
            values[k] =
                series_eval(G, r * std::polar(1.0, kTwoPi * m.position(k)));
        if (reference) {
            double e = 0.0;
            for (std::size_t k = 0; k < m.size(); ++k)
                e += m.weight(k) * std::norm(reference->values[k] - values[k]);
            out.error_curve.push_back(std::sqrt(e));
        }
    }
    if (norm_hint && out.tail_bounds.back() > tail_tol)
        throw std::length_error(
            "boundary_recover: series too short for radius " +
            std::to_string(r_schedule.back()) + " (tail bound " +
            std::to_string(out.tail_bounds.back()) + " exceeds tol)");
    out.boundary.values = values;
    return out;
}

double toeplitz_defect(const ModelCandidate& candidate, const PowerSeries& b,
                       std::size_t window) {
    const PowerSeries& G = candidate.series;
    if (G.order() < 2 * window || b.order() < 2 * window)
        throw std::invalid_argument(
            "toeplitz_defect: candidate and b orders must be >= 2*window");
    long double acc = 0.0L;
    for (std::size_t mm = 0; mm <= window; ++mm) {
        Complex s = 0.0;
        const std::size_t ktop = std::min(b.order(), G.order() - mm);
        for (std::size_t k = 0; k <= ktop; ++k)
            s += std::conj(b[k]) * G[mm + k];
        acc += (long double)std::norm(s);
    }
    return std::sqrt(double(acc));
}

MembershipReport membership_test(const ModelCandidate& candidate,
                                 const PowerSeries& b, std::size_t window,
                                 double tol, std::optional<double> norm_hint) {
    MembershipReport rep;
    rep.window = window;
    rep.order = std::min(candidate.series.order(), b.order());
    rep.tol = tol;
    rep.defect = toeplitz_defect(candidate, b, window);

    const PowerSeries& G = candidate.series;
    double tail_g;
    if (norm_hint) {
        tail_g = std::sqrt(std::max(
            0.0, *norm_hint * *norm_hint - series_energy(G, 0)));
        rep.bound_certified = true;
    } else {
        // heuristic: treat the candidate's own final-third energy as the tail
        tail_g = std::sqrt(series_energy(G, (2 * G.order()) / 3));
        rep.bound_certified = false;
    }
    long double acc = 0.0L;
    for (std::size_t mm = 0; mm <= window; ++mm) {
        const std::size_t ktop = std::min(b.order(), G.order() - mm);
        const double tb = inner_tail(b, ktop);
        acc += (long double)(tb * tb);
    }
    rep.bound = tail_g * std::sqrt(double(acc));
    rep.verdict = rep.defect + rep.bound <= tol;
    return rep;
}

MomentSolution solve_moment_problem(const std::vector<Complex>& a,
                                    const AtomicMeasure& m,
                                    const PowerSeries& alpha,
                                    const PowerSeries& b, double tol) {
    if (a.empty())
        throw std::invalid_argument("solve_moment_problem: no moments supplied");
    const std::size_t order =
        std::min({a.size() - 1, alpha.order(), b.order()});
    auto gamma = convolve(alpha, PowerSeries(a), order);

    MomentSolution sol;
    sol.candidate = {gamma, Provenance::FromMoments};
    const std::size_t window = std::min<std::size_t>(32, order / 2);
    sol.membership = membership_test(sol.candidate, b, window, tol);
    if (!sol.membership.verdict) return sol;

    FourierData data(gamma.coefficients());
    sol.f = synthesize_dual(m, data, alpha).values;
    auto fhat = moment_sequence(m, sol.f, a.size() - 1);
    double worst = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n)
        worst = std::max(worst, std::abs(fhat[n] - a[n]));
    sol.max_moment_residual = worst;
    sol.feasible = worst <= tol;
    return sol;
}

TwoSidedReport two_sided_check(const SampleSet& samples_pos,
                               const SampleSet& samples_neg,
                               const AtomicMeasure& m,
                               const PowerSeries& alpha, const PowerSeries& b,
                               double tol) {
    if (samples_pos.size() == 0 || samples_neg.size() == 0)
        throw std::invalid_argument("two_sided_check: empty sample set");
    const std::size_t order = std::min(
        {samples_pos.size() - 1, samples_neg.size() - 1, alpha.order(),
         b.order()});
    TwoSidedReport rep;
    rep.tol = tol;
    const std::size_t window = std::min<std::size_t>(32, order / 2);

    auto side = [&](const SampleSet& s) {
        auto gamma = convolve(
            alpha, PowerSeries(std::vector<Complex>(
                       s.values.begin(), s.values.begin() + order + 1)),
            order);
        ModelCandidate cand{gamma, Provenance::FromMoments};
        MembershipReport mem = membership_test(cand, b, window, tol);
        MuFunction f =
            synthesize_dual(m, FourierData(gamma.coefficients()), alpha).values;
        return std::pair{mem, f};
    };
    auto [mem_pos, f_pos] = side(samples_pos);
    auto [mem_neg, f_neg] = side(samples_neg);
    rep.membership_pos = mem_pos;
    rep.membership_neg = mem_neg;
    rep.f_pos = f_pos;
    rep.f_neg = f_neg;

    double e = 0.0;
    for (std::size_t k = 0; k < m.size(); ++k)
        e += m.weight(k) *
             std::norm(std::conj(f_pos.values[k]) - f_neg.values[k]);
    rep.mismatch = std::sqrt(e);
    rep.verdict = mem_pos.defect + mem_pos.bound <= tol &&
                  mem_neg.defect + mem_neg.bound <= tol && rep.mismatch <= tol;
    return rep;
}

GrowthReport growth_envelope_check(const AtomicMeasure& m, const MuFunction& f,
                                   const std::vector<double>& y_values,
                                   double tol) {
    if (y_values.empty())
        throw std::invalid_argument("growth_envelope_check: no y values");
    for (std::size_t i = 0; i < y_values.size(); ++i) {
        if (!(y_values[i] > 0.0))
            throw std::invalid_argument(
                "growth_envelope_check: y values must be positive");
        if (i > 0 && !(y_values[i] > y_values[i - 1]))
            throw std::invalid_argument(
                "growth_envelope_check: y values must increase");
    }
    GrowthReport rep;
    rep.y_values = y_values;
    rep.tol = tol;
    for (double y : y_values) {
        const double damp = std::exp(-std::numbers::pi * y);
        rep.ratio_pos.push_back(
            std::abs(fourier_stieltjes(m, f, Complex(0.0, y))) * damp);
        rep.ratio_neg.push_back(
            std::abs(fourier_stieltjes(m, f, Complex(0.0, -y))) * damp);
    }
    auto eventually_decreasing = [](const std::vector<double>& r) {
        if (r.size() < 2) return false;
        // nonincreasing over (at least) the last three entries
        const std::size_t need = std::min<std::size_t>(3, r.size() - 1);
        for (std::size_t i = r.size() - need; i < r.size(); ++i)
            if (r[i] > r[i - 1] * (1.0 + 1e-12)) return false;
        return true;
    };
    rep.verdict = eventually_decreasing(rep.ratio_pos) &&
                  eventually_decreasing(rep.ratio_neg) &&
                  rep.ratio_pos.back() <= tol && rep.ratio_neg.back() <= tol;
    return rep;
}

}  // namespace mufourier
