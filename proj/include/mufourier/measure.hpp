#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Singular Borel probability measures on the torus T = [-1/2, 1/2) and
// integration against them.  Two families: finitely-atomic measures (every
// identity is exactly checkable in finite dimensions) and self-similar IFS
// measures (singular-continuous stress tests, realized by atomic refinement
// and a moment recursion).

namespace mufourier {

using Complex = std::complex<double>;

struct Atom {
    double position;  // torus coordinate, representative in [-1/2, 1/2)
    double weight;    // > 0
};

// Finitely many point masses.  Positions are reduced modulo 1 to the
// half-open interval [-1/2, 1/2) (so the circle point 1/2 == -1/2 is stored
// as -1/2) and must be pairwise distinct after reduction; weights are
// positive and sum to 1 within 1e-12.  Atoms are kept sorted by position,
// and that order is the index convention for MuFunction values.
//
// Note: for integer frequencies the endpoint representative is immaterial
// (e^{-2pi i n (-1/2)} = (-1)^n either way); for non-integer arguments of
// fourier_stieltjes the stored representative is the one used.  Growth
// diagnostics assume no mass at the endpoint -- that is the caller's burden.
class AtomicMeasure {
public:
    explicit AtomicMeasure(std::vector<Atom> atoms);
    AtomicMeasure(const std::vector<double>& positions,
                  const std::vector<double>& weights);

    std::size_t size() const { return atoms_.size(); }
    double position(std::size_t k) const { return atoms_[k].position; }
    double weight(std::size_t k) const { return atoms_[k].weight; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    // Largest |position| over the atoms (drives growth envelopes).
    double max_abs_position() const;

    // Point mass at a single position (default: the origin).
    static AtomicMeasure delta(double position = 0.0);

    // Uniform measure on the full N-th-roots grid {k/N mod 1}.  Its moments
    // are mu-hat(n) = 1 when N | n and 0 otherwise, so mu_plus = 1/(1 - z^N).
    // For even N the grid contains the circle point 1/2, stored as -1/2.
    static AtomicMeasure roots_of_unity(int n);

private:
    std::vector<Atom> atoms_;
};

// Self-similar measure: maps x -> ratio*x + offset_j chosen with the given
// probabilities.  Each map must send [-support_bound, support_bound] into
// itself; the middle-thirds Cantor measure is ratio 1/3, offsets {-1/3, 1/3},
// probabilities {1/2, 1/2}, support_bound 1/2.
class IFSMeasure {
public:
    IFSMeasure(double ratio, std::vector<double> offsets,
               std::vector<double> probabilities, double support_bound);

    double ratio() const { return ratio_; }
    const std::vector<double>& offsets() const { return offsets_; }
    const std::vector<double>& probabilities() const { return probabilities_; }
    double support_bound() const { return support_bound_; }
    std::size_t branch_count() const { return offsets_.size(); }

    static IFSMeasure middle_thirds_cantor();

private:
    double ratio_;
    std::vector<double> offsets_;
    std::vector<double> probabilities_;
    double support_bound_;
};

// An element of L^2(mu) for atomic mu: one complex value per atom, indexed
// in the measure's (sorted) atom order.
struct MuFunction {
    std::vector<Complex> values;

    MuFunction() = default;
    explicit MuFunction(std::vector<Complex> v) : values(std::move(v)) {}
    std::size_t size() const { return values.size(); }
};

// mu-hat(n) = sum_k w_k e^{-2 pi i n x_k}.  |result| <= 1, moment(m,0) = 1.
Complex moment(const AtomicMeasure& m, long long n);

// mu-hat(z) = sum_k w_k e^{-2 pi i z x_k}, entire in z; equals moment(m, n)
// at integer z.
Complex fourier_stieltjes(const AtomicMeasure& m, Complex z);

// f-hat(z) = sum_k w_k f(x_k) e^{-2 pi i z x_k} for f in L^2(mu).
Complex fourier_stieltjes(const AtomicMeasure& m, const MuFunction& f,
                          Complex z);

// mu-hat(n) for n = 0..order in one pass (incremental rotations).
std::vector<Complex> moment_sequence(const AtomicMeasure& m, std::size_t order);

// f-hat(n) for n = 0..order.
std::vector<Complex> moment_sequence(const AtomicMeasure& m,
                                     const MuFunction& f, std::size_t order);

// <f, g>_mu = sum_k w_k f(x_k) conj(g(x_k)).
Complex inner_product(const AtomicMeasure& m, const MuFunction& f,
                      const MuFunction& g);

double norm_sq(const AtomicMeasure& m, const MuFunction& f);
double norm(const AtomicMeasure& m, const MuFunction& f);

// Depth-fold compositions of the IFS maps applied to the support midpoint,
// with product weights.  depth 0 gives the single midpoint atom.  Exact
// duplicate positions merge (weights add).  Throws if the atom count
// branch_count^depth would exceed cap, reporting the required cap.
AtomicMeasure ifs_refine(const IFSMeasure& s, int depth,
                         std::size_t cap = std::size_t(1) << 22);

struct IfsMomentResult {
    Complex value;
    int depth;           // number of product factors taken
    double tail_bound;   // first-order certificate 2 pi |t| ratio^depth B
};

// mu-hat(t) via the self-similarity recursion
//   mu-hat(t) = (sum_j p_j e^{-2 pi i t b_j}) mu-hat(ratio * t),
// truncated once 2 pi |t| ratio^d support_bound < tol.
IfsMomentResult ifs_moment(const IFSMeasure& s, double t, double tol);

}  // namespace mufourier
