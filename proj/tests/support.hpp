#pragma once

// Shared deterministic generators for the test suites.  Everything funnels
// through mufourier::Rng so a fixed seed reproduces the same instances on
// any platform.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "mufourier/measure.hpp"
#include "mufourier/rng.hpp"

namespace testsupport {

using mufourier::AtomicMeasure;
using mufourier::Complex;
using mufourier::MuFunction;
using mufourier::Rng;

// Atomic measure with `dmin`..`dmax` atoms, every position in
// [-1/2 + margin, 1/2 - margin], circular separation >= sep, and every
// weight >= wmin.  Rejection-samples the positions, so keep
// count * (sep + something) well below 1.
inline AtomicMeasure random_measure(Rng& rng, int dmin, int dmax, double sep,
                                    double wmin, double margin = 0.02) {
    const int count =
        dmin == dmax
            ? dmin
            : int(rng.integer(std::uint64_t(dmin), std::uint64_t(dmax)));
    std::vector<double> xs(count);
    for (;;) {
        for (auto& x : xs) x = rng.uniform(-0.5 + margin, 0.5 - margin);
        std::sort(xs.begin(), xs.end());
        double gap = xs.front() + 1.0 - xs.back();  // wrap-around gap
        for (int i = 1; i < count; ++i) gap = std::min(gap, xs[i] - xs[i - 1]);
        if (count == 1 || gap >= sep) break;
    }
    // wmin each, excess distributed proportionally to fresh uniforms
    std::vector<double> excess(count);
    double total = 0.0;
    for (auto& e : excess) {
        e = rng.uniform_pos();
        total += e;
    }
    std::vector<double> ws(count);
    for (int i = 0; i < count; ++i)
        ws[i] = wmin + excess[i] * (1.0 - count * wmin) / total;
    return AtomicMeasure(xs, ws);
}

inline MuFunction random_function(const AtomicMeasure& m, Rng& rng) {
    std::vector<Complex> v(m.size());
    for (auto& c : v) c = rng.normal_complex();
    return MuFunction(std::move(v));
}

inline MuFunction random_unit_function(const AtomicMeasure& m, Rng& rng) {
    MuFunction f = random_function(m, rng);
    const double n = mufourier::norm(m, f);
    for (auto& c : f.values) c /= n;
    return f;
}

inline double max_abs_diff(const std::vector<Complex>& a,
                           const std::vector<Complex>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    for (std::size_t i = n; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i]));
    for (std::size_t i = n; i < b.size(); ++i)
        worst = std::max(worst, std::abs(b[i]));
    return worst;
}

}  // namespace testsupport
