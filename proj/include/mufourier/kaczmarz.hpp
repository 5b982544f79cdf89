#pragma once

#include <vector>

#include "mufourier/measure.hpp"
#include "mufourier/transforms.hpp"

// The dual sequence g_n(x) = sum_{j=0..n} conj(alpha_{n-j}) e^{2 pi i j x},
// the analysis/synthesis operators of the Fourier expansion in L^2(mu)
//   f = sum_n <f, g_n> e_n = sum_n <f, g_n> g_n,
// Parseval verification, and an independent iterative-Kaczmarz oracle.

namespace mufourier {

// Analysis coefficients <f, g_n> for n = 0..order, with the Parseval partial
// sums they induce.
struct FourierData {
    std::vector<Complex> coefficients;
    std::size_t order = 0;

    FourierData() = default;
    explicit FourierData(std::vector<Complex> c);

    // Partial sums of |coefficients|^2 (long-double accumulation).
    std::vector<double> cumulative_energy() const;
    double total_energy() const;
};

// The g_n, derived from alpha on demand: row n is (conj(alpha_{n-j}))_{j=0..n}.
class DualSequence {
public:
    explicit DualSequence(PowerSeries alpha) : alpha_(std::move(alpha)) {}

    const PowerSeries& alpha() const { return alpha_; }
    std::size_t max_order() const { return alpha_.order(); }

    // Exponential-basis coefficients of g_n (length n+1, entry j =
    // conj(alpha_{n-j})).
    std::vector<Complex> row(std::size_t n) const;

    // g_n evaluated at a torus point.
    Complex eval(std::size_t n, double x) const;

    // g_n as an element of L^2(mu) (values on the atoms).
    MuFunction on_atoms(std::size_t n, const AtomicMeasure& m) const;

private:
    PowerSeries alpha_;
};

// coefficient n = sum_{j<=n} alpha_{n-j} f-hat(j); equals <f, g_n>.
// Requires order <= alpha.order().
FourierData analyze(const AtomicMeasure& m, const MuFunction& f,
                    const PowerSeries& alpha, std::size_t order);

// ||f||^2_mu - sum_{n<=order} |<f, g_n>|^2.  Nonnegative up to rounding
// (Bessel) and nonincreasing in order.
double parseval_defect(const AtomicMeasure& m, const MuFunction& f,
                       const PowerSeries& alpha, std::size_t order);

// Adaptive analysis: runs to the first order where the Parseval defect
// drops to tol, or to cap.  Records the full defect curve.
struct AnalysisRun {
    FourierData data;
    std::vector<double> defect_curve;  // defect after order n, n = 0..stop
    std::size_t stop_order = 0;
    bool hit_cap = false;
    double norm_sq = 0.0;
    double defect() const { return defect_curve.back(); }
};
AnalysisRun analyze_adaptive(const AtomicMeasure& m, const MuFunction& f,
                             const PowerSeries& alpha, double tol,
                             std::size_t cap);

// Synthesis output; residual_curve[n] = ||reference - partial sum through
// order n||_mu, present when a reference is supplied.
struct SynthesisResult {
    MuFunction values;
    std::vector<double> residual_curve;
};

// First expansion: sum_n data_n e^{2 pi i n x} on the atoms.
SynthesisResult synthesize_exponential(const AtomicMeasure& m,
                                       const FourierData& data,
                                       const MuFunction* reference = nullptr);

// Second expansion: sum_n data_n g_n(x) on the atoms.  Requires
// data.order <= alpha.order().  Without a reference this uses the folded
// O(N log N + N d) form; with one, partial sums are walked level by level.
SynthesisResult synthesize_dual(const AtomicMeasure& m, const FourierData& data,
                                const PowerSeries& alpha,
                                const MuFunction* reference = nullptr);

// Classical Kaczmarz iteration against the exponentials e_n:
//   h_n = h_{n-1} + (c_n - <h_{n-1}, e_n>) e_n,  h_{-1} = 0,
// where c_n = target_moments[n].  Returns the iterates h_0..h_order.
std::vector<MuFunction> kaczmarz_iterate(
    const AtomicMeasure& m, const std::vector<Complex>& target_moments,
    std::size_t order);

}  // namespace mufourier
