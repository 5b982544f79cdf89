#include "mufourier/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mufourier {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reduce modulo 1 to [-1/2, 1/2).
double reduce_torus(double x) {
    double r = x - std::round(x);
    if (r >= 0.5) r -= 1.0;   // round-half-away can land on +1/2
    if (r < -0.5) r += 1.0;
    return r;
}

// Exact fractional part of n*x reduced to [-1/2, 1/2).  A double is a dyadic
// rational, so n*x mod 1 is computable without error in 128-bit integers;
// only the final conversion rounds.  Used to reset the incremental power
// walk periodically -- plain renormalization fixes modulus drift but lets
// phase error grow linearly with n, which is fatal for Parseval defects
// near 1e-13 at orders around 10^6.
double reduced_multiple(long long n, double x) {
    if (n == 0 || x == 0.0) return 0.0;
    if (std::llabs(n) >= (1LL << 40))  // out of the exact-product range
        return reduce_torus(std::fmod(double(n) * x, 1.0));
    int e = 0;
    const double mant = std::frexp(x, &e);            // x = mant * 2^e
    const long long m = (long long)std::ldexp(mant, 53);
    const int shift = 53 - e;                         // n*x = n*m / 2^shift
    if (shift <= 0) return 0.0;                       // n*x is an integer
    __int128 p = (__int128)n * m;
    if (shift >= 127) return double(n) * x;           // |n*x| << 1
    const __int128 den = (__int128)1 << shift;
    double frac = double(p % den) / double(den);
    if (frac >= 0.5) frac -= 1.0;
    if (frac < -0.5) frac += 1.0;
    return frac;
}

}  // namespace

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty())
        throw std::invalid_argument("AtomicMeasure: no atoms");
    double total = 0.0;
    for (auto& a : atoms_) {
        if (!(a.weight > 0.0))
            throw std::invalid_argument("AtomicMeasure: weights must be positive");
        if (!std::isfinite(a.position))
            throw std::invalid_argument("AtomicMeasure: non-finite position");
        a.position = reduce_torus(a.position);
        total += a.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument(
            "AtomicMeasure: weights sum to " + std::to_string(total) +
            ", expected 1 within 1e-12");
    std::sort(atoms_.begin(), atoms_.end(),
              [](const Atom& a, const Atom& b) { return a.position < b.position; });
    for (std::size_t k = 1; k < atoms_.size(); ++k)
        if (atoms_[k].position == atoms_[k - 1].position)
            throw std::invalid_argument(
                "AtomicMeasure: duplicate position " +
                std::to_string(atoms_[k].position));
}

AtomicMeasure::AtomicMeasure(const std::vector<double>& positions,
                             const std::vector<double>& weights)
    : AtomicMeasure([&] {
          if (positions.size() != weights.size())
              throw std::invalid_argument(
                  "AtomicMeasure: positions/weights length mismatch");
          std::vector<Atom> a(positions.size());
          for (std::size_t k = 0; k < positions.size(); ++k)
              a[k] = {positions[k], weights[k]};
          return a;
      }()) {}

double AtomicMeasure::max_abs_position() const {
    double m = 0.0;
    for (const auto& a : atoms_) m = std::max(m, std::abs(a.position));
    return m;
}

AtomicMeasure AtomicMeasure::delta(double position) {
    return AtomicMeasure(std::vector<Atom>{{position, 1.0}});
}

AtomicMeasure AtomicMeasure::roots_of_unity(int n) {
    if (n < 1) throw std::invalid_argument("roots_of_unity: n must be >= 1");
    std::vector<Atom> atoms(n);
    for (int k = 0; k < n; ++k)
        atoms[k] = {double(k) / double(n), 1.0 / double(n)};
    return AtomicMeasure(std::move(atoms));
}

IFSMeasure::IFSMeasure(double ratio, std::vector<double> offsets,
                       std::vector<double> probabilities, double support_bound)
    : ratio_(ratio),
      offsets_(std::move(offsets)),
      probabilities_(std::move(probabilities)),
      support_bound_(support_bound) {
    if (!(ratio_ > 0.0 && ratio_ < 1.0))
        throw std::invalid_argument("IFSMeasure: ratio must lie in (0,1)");
    if (offsets_.empty())
        throw std::invalid_argument("IFSMeasure: no maps");
    if (offsets_.size() != probabilities_.size())
        throw std::invalid_argument(
            "IFSMeasure: offsets/probabilities length mismatch");
    if (!(support_bound_ > 0.0 && support_bound_ <= 0.5))
        throw std::invalid_argument(
            "IFSMeasure: support_bound must lie in (0, 1/2]");
    double total = 0.0;
    for (double p : probabilities_) {
        if (!(p > 0.0))
            throw std::invalid_argument("IFSMeasure: probabilities must be positive");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("IFSMeasure: probabilities must sum to 1");
    for (double b : offsets_)
        if (std::abs(b) > support_bound_ * (1.0 - ratio_) + 1e-12)
            throw std::invalid_argument(
                "IFSMeasure: map with offset " + std::to_string(b) +
                " does not preserve [-B, B]");
}

IFSMeasure IFSMeasure::middle_thirds_cantor() {
    return IFSMeasure(1.0 / 3.0, {-1.0 / 3.0, 1.0 / 3.0}, {0.5, 0.5}, 0.5);
}

Complex moment(const AtomicMeasure& m, long long n) {
    Complex s = 0.0;
    // reduce n*x mod 1 before the exponential: polar() loses ~ulp(n*x)
    // of phase otherwise, which is visible by n ~ 10^3
    for (const auto& a : m.atoms())
        s += a.weight *
             std::polar(1.0, -kTwoPi * reduced_multiple(n, a.position));
    return s;
}

Complex fourier_stieltjes(const AtomicMeasure& m, Complex z) {
    Complex s = 0.0;
    const Complex i2pi(0.0, -kTwoPi);
    for (const auto& a : m.atoms())
        s += a.weight * std::exp(i2pi * z * a.position);
    return s;
}

Complex fourier_stieltjes(const AtomicMeasure& m, const MuFunction& f,
                          Complex z) {
    if (f.size() != m.size())
        throw std::invalid_argument("fourier_stieltjes: length mismatch");
    Complex s = 0.0;
    const Complex i2pi(0.0, -kTwoPi);
    for (std::size_t k = 0; k < m.size(); ++k)
        s += m.weight(k) * f.values[k] * std::exp(i2pi * z * m.position(k));
    return s;
}

std::vector<Complex> moment_sequence(const AtomicMeasure& m,
                                     std::size_t order) {
    MuFunction ones(std::vector<Complex>(m.size(), 1.0));
    return moment_sequence(m, ones, order);
}

std::vector<Complex> moment_sequence(const AtomicMeasure& m,
                                     const MuFunction& f, std::size_t order) {
    if (f.size() != m.size())
        throw std::invalid_argument("moment_sequence: length mismatch");
    const std::size_t d = m.size();
    std::vector<Complex> rot(d), pow(d), coef(d);
    for (std::size_t k = 0; k < d; ++k) {
        rot[k] = std::polar(1.0, -kTwoPi * m.position(k));
        pow[k] = 1.0;
        coef[k] = m.weight(k) * f.values[k];
    }
    std::vector<Complex> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < d; ++k) s += coef[k] * pow[k];
        out[n] = s;
        for (std::size_t k = 0; k < d; ++k) pow[k] *= rot[k];
        if ((n & 63u) == 63u)
            for (std::size_t k = 0; k < d; ++k)
                pow[k] = std::polar(
                    1.0, -kTwoPi * reduced_multiple(n + 1, m.position(k)));
    }
    return out;
}

Complex inner_product(const AtomicMeasure& m, const MuFunction& f,
                      const MuFunction& g) {
    if (f.size() != m.size() || g.size() != m.size())
        throw std::invalid_argument("inner_product: length mismatch");
    Complex s = 0.0;
    for (std::size_t k = 0; k < m.size(); ++k)
        s += m.weight(k) * f.values[k] * std::conj(g.values[k]);
    return s;
}

double norm_sq(const AtomicMeasure& m, const MuFunction& f) {
    if (f.size() != m.size())
        throw std::invalid_argument("norm_sq: length mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < m.size(); ++k)
        s += m.weight(k) * std::norm(f.values[k]);
    return s;
}

double norm(const AtomicMeasure& m, const MuFunction& f) {
    return std::sqrt(norm_sq(m, f));
}

AtomicMeasure ifs_refine(const IFSMeasure& s, int depth, std::size_t cap) {
    if (depth < 0) throw std::invalid_argument("ifs_refine: negative depth");
    const std::size_t branches = s.branch_count();
    double needed = 1.0;
    for (int k = 0; k < depth; ++k) {
        needed *= double(branches);
        if (needed > double(cap))
            throw std::runtime_error(
                "ifs_refine: depth " + std::to_string(depth) + " needs " +
                std::to_string(std::pow(double(branches), depth)) +
                " atoms, cap is " + std::to_string(cap));
    }
    // midpoint of [-B, B] is 0; unroll words breadth-first
    std::vector<Atom> cur{{0.0, 1.0}};
    for (int level = 0; level < depth; ++level) {
        std::vector<Atom> next;
        next.reserve(cur.size() * branches);
        for (const auto& a : cur)
            for (std::size_t j = 0; j < branches; ++j)
                next.push_back({s.ratio() * a.position + s.offsets()[j],
                                a.weight * s.probabilities()[j]});
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end(), [](const Atom& a, const Atom& b) {
        return a.position < b.position;
    });
    // merge exact duplicates (overlapping maps)
    std::vector<Atom> merged;
    merged.reserve(cur.size());
    for (const auto& a : cur) {
        if (!merged.empty() && merged.back().position == a.position)
            merged.back().weight += a.weight;
        else
            merged.push_back(a);
    }
    return AtomicMeasure(std::move(merged));
}

IfsMomentResult ifs_moment(const IFSMeasure& s, double t, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("ifs_moment: tol must be > 0");
    Complex value = 1.0;
    double scale = std::abs(t);
    int depth = 0;
    double arg = t;
    while (kTwoPi * scale * std::pow(s.ratio(), depth) * s.support_bound() >=
           tol) {
        Complex factor = 0.0;
        for (std::size_t j = 0; j < s.branch_count(); ++j)
            factor += s.probabilities()[j] *
                      std::polar(1.0, -kTwoPi * arg * s.offsets()[j]);
        value *= factor;
        arg *= s.ratio();
        ++depth;
        if (depth > 4096)
            throw std::runtime_error("ifs_moment: recursion failed to terminate");
    }
    return {value, depth,
            kTwoPi * scale * std::pow(s.ratio(), depth) * s.support_bound()};
}

}  // namespace mufourier
