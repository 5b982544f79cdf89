#pragma once

#include <optional>
#include <vector>

#include "mufourier/kaczmarz.hpp"
#include "mufourier/measure.hpp"
#include "mufourier/sampling.hpp"
#include "mufourier/transforms.hpp"

// The normalized Cauchy transform V_mu : L^2(mu) -> H(b), boundary recovery,
// model-space membership via the Toeplitz defect, the trigonometric moment
// problem, the two-sided (positive/negative frequency) consistency check,
// and the imaginary-axis growth envelope.

namespace mufourier {

enum class Provenance { FromMoments, FromFunction, External };

// A disk function G given by Taylor coefficients, tested for membership in
// the model space H(b) = ker T_{conj(b)}.
struct ModelCandidate {
    PowerSeries series = PowerSeries::zero(0);
    Provenance provenance = Provenance::External;
};

// V_mu f as a power series: the coefficients are exactly the analysis
// coefficients <f, g_n>.
ModelCandidate nct_series(const AtomicMeasure& m, const MuFunction& f,
                          const PowerSeries& alpha, std::size_t order);

// V_mu f(z) as a quotient of two direct integrals:
//   (sum_k w_k f_k / (1 - z e^{-2 pi i x_k})) / mu_plus(z),  |z| < 1.
Complex nct_quotient(const AtomicMeasure& m, const MuFunction& f, Complex z);

// L^2(mu)-boundary values along a radius schedule increasing toward 1.
struct BoundaryValues {
    std::vector<double> points;        // atom positions
    std::vector<Complex> values;       // candidate at r_max e^{2 pi i x_k}
    std::vector<double> r_schedule;
};
struct BoundaryRecovery {
    BoundaryValues boundary;
    std::vector<double> error_curve;   // ||reference - values_r||_mu per r
    std::vector<double> tail_bounds;   // series truncation bound per r
};

// Evaluate the candidate series at r e^{2 pi i x_k} along the schedule.
// norm_hint, when given, is an upper bound on the candidate's l^2 coefficient
// norm; the truncation tail at radius r is then certified by
// sqrt(max(0, hint^2 - sum |G_n|^2)) r^{order+1} / sqrt(1 - r^2), and the
// call throws if that bound exceeds tail_tol at the largest radius.
BoundaryRecovery boundary_recover(const ModelCandidate& candidate,
                                  const AtomicMeasure& m,
                                  const std::vector<double>& r_schedule,
                                  const MuFunction* reference = nullptr,
                                  std::optional<double> norm_hint = {},
                                  double tail_tol = 1e-3);

// Euclidean norm of coefficients 0..window of P_+(conj(b) G), each computed
// as sum over k with m + k <= min(candidate order, b order + m).  Requires
// both orders >= 2 * window.
double toeplitz_defect(const ModelCandidate& candidate, const PowerSeries& b,
                       std::size_t window);

// Membership decision with a certified truncation budget: the unseen part of
// coefficient m is bounded by tail_b(order - m) * tail_G, where tail_b uses
// Schur-boundedness of b (sum |b_k|^2 <= 1) and tail_G comes from norm_hint
// (or, failing that, the final-third energy of the candidate itself, flagged
// as a heuristic).  Membership at tol means defect + bound <= tol.
struct MembershipReport {
    double defect = 0.0;
    double bound = 0.0;
    bool bound_certified = false;
    std::size_t window = 0;
    std::size_t order = 0;
    bool verdict = false;
    double tol = 0.0;
};
MembershipReport membership_test(const ModelCandidate& candidate,
                                 const PowerSeries& b, std::size_t window,
                                 double tol,
                                 std::optional<double> norm_hint = {});

// Trigonometric moment problem: find f in L^2(mu) with f-hat(n) = a_n for
// n = 0..len(a)-1.  Builds G_a = (sum a_n z^n)/mu_plus by convolving with
// alpha, tests membership, and on success synthesizes f = sum gamma_n g_n
// and verifies the moments round-trip.
struct MomentSolution {
    bool feasible = false;
    MuFunction f;                      // populated when feasible
    MembershipReport membership;
    double max_moment_residual = 0.0;  // max_n |f-hat(n) - a_n|, when feasible
    ModelCandidate candidate;          // G_a, provenance FromMoments
};
MomentSolution solve_moment_problem(const std::vector<Complex>& a,
                                    const AtomicMeasure& m,
                                    const PowerSeries& alpha,
                                    const PowerSeries& b, double tol);

// Two-sided frequency check: G_plus from samples F(n), G_minus from samples
// conj(F(-n)) (supplied pre-conjugated).  Verdict true iff both membership
// defects and the boundary mismatch ||conj(f_plus) - f_minus||_mu are <= tol.
struct TwoSidedReport {
    MembershipReport membership_pos;
    MembershipReport membership_neg;
    MuFunction f_pos;
    MuFunction f_neg;
    double mismatch = 0.0;
    bool verdict = false;
    double tol = 0.0;
};
TwoSidedReport two_sided_check(const SampleSet& samples_pos,
                               const SampleSet& samples_neg,
                               const AtomicMeasure& m,
                               const PowerSeries& alpha, const PowerSeries& b,
                               double tol);

// Ratios |f-hat(+-iy)| e^{-pi y} along increasing y > 0.  For atoms inside
// [-a, a] the ratio is bounded by ||f||_mu e^{(2 pi a - pi) y} -> 0.
struct GrowthReport {
    std::vector<double> y_values;
    std::vector<double> ratio_pos;
    std::vector<double> ratio_neg;
    bool verdict = false;   // both tails eventually decreasing, final <= tol
    double tol = 0.0;
};
GrowthReport growth_envelope_check(const AtomicMeasure& m, const MuFunction& f,
                                   const std::vector<double>& y_values,
                                   double tol = 1e-3);

}  // namespace mufourier
