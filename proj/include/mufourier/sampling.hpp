#pragma once

#include <optional>
#include <vector>

#include "mufourier/kaczmarz.hpp"
#include "mufourier/measure.hpp"
#include "mufourier/transforms.hpp"

// Sampling characterization: an entire function F is the transform of some
// f in L^2(mu) iff the beta-coefficients built from its integer samples are
// square-summable, and then F is recovered everywhere by
//   F(z) = sum_n beta_n ghat_n(z),   ghat_n(z) = sum_{k<=n} conj(alpha_{n-k})
//   mu-hat(z - k).

namespace mufourier {

// Integer samples F(0), F(1), ..., F(M).
struct SampleSet {
    std::vector<Complex> values;

    SampleSet() = default;
    explicit SampleSet(std::vector<Complex> v) : values(std::move(v)) {}
    std::size_t size() const { return values.size(); }
};

// beta_n = sum_{j<=n} alpha_{n-j} F(j) for n = 0..order.  When the samples
// come from F = f-hat, beta_n = <f, g_n>.
FourierData beta_coefficients(const SampleSet& samples,
                              const PowerSeries& alpha, std::size_t order);

// Square-summability diagnostics for a beta sequence: raw partial sums, the
// energy fraction in the last decade, and the final-third tail verdict.
struct SummabilityReport {
    std::vector<double> partial_sums;
    double total = 0.0;
    double final_third_energy = 0.0;  // S_N - S_{floor(2N/3)}
    double last_decade_ratio = 0.0;   // (S_N - S_{floor(9N/10)}) / S_N
    double tol = 0.0;
    bool verdict = false;             // final_third_energy <= tol
};
SummabilityReport summability_report(const FourierData& beta,
                                     double tol = 1e-6);

struct ReconstructionReport {
    Complex point;
    Complex reconstructed;
    std::optional<Complex> reference;
    std::size_t truncation_order = 0;
    double tail_energy = 0.0;  // sum_{n>order} |beta_n|^2 over computed range
    double tail_bound = 0.0;   // certified |truncation error| bound at point
    double error() const;      // |reconstructed - reference| when available
};

// Evaluate the reconstruction sum at z through the given order.  tail_bound
// is Cauchy-Schwarz: sqrt(tail beta energy) * sqrt(||phi_z||^2 - sum_{n<=N}
// |ghat_n(z)|^2) with ||phi_z||^2_mu = sum_k w_k e^{4 pi x_k Im z} (the dual
// Parseval sum of the ghat_n at z, exact on atoms).
ReconstructionReport reconstruct(const SampleSet& samples,
                                 const AtomicMeasure& m,
                                 const PowerSeries& alpha, Complex z,
                                 std::size_t order);

// Batch form with shared work; if adaptive_tol > 0, each point stops at the
// first order with tail_bound <= adaptive_tol (falling back to `order`).
std::vector<ReconstructionReport> reconstruct_many(
    const SampleSet& samples, const AtomicMeasure& m, const PowerSeries& alpha,
    const std::vector<Complex>& points, std::size_t order,
    double adaptive_tol = 0.0,
    const std::vector<Complex>* references = nullptr);

// Combined decision: summability verdict AND max |reconstructed - reference|
// <= tol at all test points.  Verdict false is a result, not an error.
struct VerificationReport {
    bool verdict = false;
    SummabilityReport summability;
    std::vector<ReconstructionReport> points;
    double max_error = 0.0;
};
VerificationReport verify_representation(const SampleSet& samples,
                                         const AtomicMeasure& m,
                                         const PowerSeries& alpha,
                                         const std::vector<Complex>& points,
                                         const std::vector<Complex>& references,
                                         double tol);

}  // namespace mufourier
