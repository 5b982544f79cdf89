#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mufourier/measure.hpp"
#include "mufourier/rng.hpp"
#include "support.hpp"

using namespace mufourier;
using testsupport::random_measure;
using testsupport::random_unit_function;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("atom positions reduce to [-1/2, 1/2)") {
    AtomicMeasure m(std::vector<Atom>{{0.75, 0.5}, {0.5, 0.5}});
    CHECK(m.position(0) == -0.5);
    CHECK(m.position(1) == -0.25);

    // -1/2 and 1/2 are the same circle point
    CHECK_THROWS_AS(AtomicMeasure(std::vector<Atom>{{0.5, 0.5}, {-0.5, 0.5}}),
                    std::invalid_argument);
}

TEST_CASE("measure validation") {
    CHECK_THROWS_AS(AtomicMeasure(std::vector<Atom>{{0.1, -0.2}, {0.2, 1.2}}),
                    std::invalid_argument);  // negative weight
    CHECK_THROWS_AS(AtomicMeasure(std::vector<Atom>{{0.1, 0.4}, {0.2, 0.4}}),
                    std::invalid_argument);  // weights sum to 0.8
    CHECK_THROWS_AS(AtomicMeasure(std::vector<Atom>{{0.1, 0.5}, {0.1, 0.5}}),
                    std::invalid_argument);  // duplicate position
    CHECK_THROWS_AS(AtomicMeasure(std::vector<Atom>{}), std::invalid_argument);

    AtomicMeasure sorted(
        std::vector<Atom>{{0.3, 0.25}, {-0.4, 0.25}, {0.0, 0.5}});
    CHECK(sorted.position(0) < sorted.position(1));
    CHECK(sorted.position(1) < sorted.position(2));
    CHECK(sorted.max_abs_position() == 0.4);
}

TEST_CASE("delta measure has constant moments") {
    auto d0 = AtomicMeasure::delta();
    for (long long n : {-5LL, -1LL, 0LL, 1LL, 7LL, 100LL}) {
        CHECK(std::abs(moment(d0, n) - Complex(1.0)) < 1e-15);
    }
    auto da = AtomicMeasure::delta(0.2);
    // |mu-hat| = 1 for every point mass
    for (long long n = -8; n <= 8; ++n)
        CHECK(std::abs(std::abs(moment(da, n)) - 1.0) < 1e-14);
}

TEST_CASE("roots-of-unity grids have arithmetic-progression moments") {
    for (int N : {2, 3, 4, 5, 8}) {
        auto m = AtomicMeasure::roots_of_unity(N);
        REQUIRE(m.size() == std::size_t(N));
        for (long long n = -2 * N; n <= 2 * N; ++n) {
            const Complex expect = (n % N == 0) ? 1.0 : 0.0;
            CHECK(std::abs(moment(m, n) - expect) < 1e-13);
        }
    }
}

TEST_CASE("shifted grid picks up a phase") {
    // uniform measure on {1/8 + k/4}: mu-hat(n) = e^{-2 pi i n/8} [4 | n]
    AtomicMeasure m({-3.0 / 8, -1.0 / 8, 1.0 / 8, 3.0 / 8},
                    {0.25, 0.25, 0.25, 0.25});
    for (long long n = -12; n <= 12; ++n) {
        Complex expect = 0.0;
        if (n % 4 == 0) expect = std::polar(1.0, -2.0 * kPi * double(n) / 8.0);
        CHECK(std::abs(moment(m, n) - expect) < 1e-14);
    }
    CHECK(std::abs(moment(m, 4) - Complex(-1.0)) < 1e-14);
    CHECK(std::abs(moment(m, 2)) < 1e-14);  // 4 does not divide 2
}

TEST_CASE("basic moment identities") {
    Rng rng(2024);
    for (int rep = 0; rep < 20; ++rep) {
        auto m = random_measure(rng, 2, 8, 0.03, 0.02);
        CHECK(std::abs(moment(m, 0) - Complex(1.0)) < 1e-14);
        for (long long n : {1LL, 3LL, 17LL, 64LL}) {
            const Complex mn = moment(m, n);
            CHECK(std::abs(mn) <= 1.0 + 1e-14);
            // mu-hat(-n) = conj(mu-hat(n)) for real measures
            CHECK(std::abs(moment(m, -n) - std::conj(mn)) < 1e-14);
            // agreement with the entire extension at integer arguments
            CHECK(std::abs(fourier_stieltjes(m, Complex(double(n))) - mn) <
                  1e-12);
        }
    }
}

TEST_CASE("moment_sequence matches per-frequency evaluation over long runs") {
    Rng rng(7);
    auto m = random_measure(rng, 2, 6, 0.05, 0.05);
    auto seq = moment_sequence(m, 2000);
    REQUIRE(seq.size() == 2001);
    double worst = 0.0;
    for (std::size_t n = 0; n <= 2000; n += 97)
        worst = std::max(worst, std::abs(seq[n] - moment(m, (long long)n)));
    CHECK(worst < 1e-13);  // incremental rotations stay renormalized

    auto f = random_unit_function(m, rng);
    auto fseq = moment_sequence(m, f, 500);
    for (std::size_t n = 0; n <= 500; n += 41)
        CHECK(std::abs(fseq[n] -
                       fourier_stieltjes(m, f, Complex(double(n)))) < 1e-12);
}

TEST_CASE("fourier_stieltjes closed forms") {
    auto d0 = AtomicMeasure::delta();
    CHECK(std::abs(fourier_stieltjes(d0, Complex(0.3, -1.7)) - Complex(1.0)) <
          1e-15);

    // single atom at 1/4: mu-hat(i) = e^{-2 pi i * i * 1/4} = e^{pi/2}
    auto da = AtomicMeasure::delta(0.25);
    CHECK(std::abs(fourier_stieltjes(da, Complex(0.0, 1.0)) -
                   Complex(std::exp(kPi / 2.0))) < 1e-12);

    // symmetric pair: mu-hat(z) = cos(2 pi a z), real for real z
    AtomicMeasure pair({-0.2, 0.2}, {0.5, 0.5});
    for (double z : {0.3, 1.1, 2.7}) {
        const Complex v = fourier_stieltjes(pair, Complex(z));
        CHECK(std::abs(v - Complex(std::cos(2.0 * kPi * 0.2 * z))) < 1e-13);
        CHECK(std::abs(v.imag()) < 1e-14);
    }
}

TEST_CASE("fourier_stieltjes obeys the exponential growth envelope") {
    Rng rng(99);
    for (int rep = 0; rep < 10; ++rep) {
        auto m = random_measure(rng, 2, 7, 0.03, 0.02);
        const double a = m.max_abs_position();
        for (int t = 0; t < 10; ++t) {
            const Complex z(rng.uniform(-5.0, 5.0), rng.uniform(-3.0, 3.0));
            const double envelope =
                std::exp(2.0 * kPi * a * std::abs(z.imag()));
            CHECK(std::abs(fourier_stieltjes(m, z)) <=
                  envelope * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("inner products") {
    AtomicMeasure pair({-0.25, 0.25}, {0.5, 0.5});
    MuFunction one(std::vector<Complex>{1.0, 1.0});
    CHECK(std::abs(inner_product(pair, one, one) - Complex(1.0)) < 1e-15);
    CHECK(norm(pair, one) == doctest::Approx(1.0));

    // <e_1, e_0> = mu-hat(1) = 0 on this measure
    MuFunction e1(std::vector<Complex>{
        std::polar(1.0, -2.0 * kPi * -0.25), std::polar(1.0, -2.0 * kPi * 0.25)});
    CHECK(std::abs(inner_product(pair, e1, one) - moment(pair, 1)) < 1e-15);

    Rng rng(3);
    auto m = random_measure(rng, 3, 6, 0.05, 0.05);
    auto f = testsupport::random_function(m, rng);
    auto g = testsupport::random_function(m, rng);
    const Complex fg = inner_product(m, f, g);
    CHECK(std::abs(fg - std::conj(inner_product(m, g, f))) < 1e-13);
    CHECK(std::abs(fg) <= norm(m, f) * norm(m, g) * (1.0 + 1e-12));

    MuFunction wrong(std::vector<Complex>{1.0});
    CHECK_THROWS_AS((void)inner_product(m, f, wrong), std::invalid_argument);
}

TEST_CASE("ifs validation") {
    CHECK_NOTHROW(IFSMeasure::middle_thirds_cantor());
    CHECK_THROWS_AS(IFSMeasure(1.0, {0.0}, {1.0}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(IFSMeasure(0.5, {0.0, 0.1}, {1.0}, 0.5),
                    std::invalid_argument);
    CHECK_THROWS_AS(IFSMeasure(0.5, {0.0}, {0.5}, 0.5),
                    std::invalid_argument);  // probabilities must sum to 1
    CHECK_THROWS_AS(IFSMeasure(1.0 / 3, {-1.0 / 3, 1.0 / 3}, {0.5, 0.5}, 0.6),
                    std::invalid_argument);  // support bound > 1/2
    // offset pushes the support image outside [-B, B]
    CHECK_THROWS_AS(IFSMeasure(0.5, {0.3}, {1.0}, 0.5), std::invalid_argument);
}

TEST_CASE("ifs_refine unrolls the maps") {
    auto cantor = IFSMeasure::middle_thirds_cantor();

    auto d0 = ifs_refine(cantor, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0.position(0) == 0.0);

    auto d1 = ifs_refine(cantor, 1);
    REQUIRE(d1.size() == 2);
    CHECK(d1.position(0) == doctest::Approx(-1.0 / 3));
    CHECK(d1.position(1) == doctest::Approx(1.0 / 3));
    CHECK(d1.weight(0) == doctest::Approx(0.5));

    auto d2 = ifs_refine(cantor, 2);
    REQUIRE(d2.size() == 4);
    CHECK(d2.position(0) == doctest::Approx(-4.0 / 9));
    CHECK(d2.position(3) == doctest::Approx(4.0 / 9));

    for (int depth : {3, 5, 8}) {
        auto r = ifs_refine(cantor, depth);
        CHECK(r.size() == std::size_t(1) << depth);
        double total = 0.0;
        for (std::size_t k = 0; k < r.size(); ++k) total += r.weight(k);
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        // refinement stays strictly inside the interval at finite depth
        CHECK(r.max_abs_position() < 0.5);
    }

    CHECK_THROWS_AS(ifs_refine(cantor, 30, 1u << 10), std::runtime_error);

    // coincident images merge: two copies of x/2 send the midpoint to 0 twice
    IFSMeasure degenerate(0.5, {0.0, 0.0}, {0.5, 0.5}, 0.5);
    auto r1 = ifs_refine(degenerate, 1);
    CHECK(r1.size() == 1);
    CHECK(r1.weight(0) == 1.0);
}

TEST_CASE("ifs_moment matches the infinite-product closed form") {
    auto cantor = IFSMeasure::middle_thirds_cantor();

    auto r0 = ifs_moment(cantor, 0.0, 1e-12);
    CHECK(std::abs(r0.value - Complex(1.0)) < 1e-15);

    // mu-hat(n) = prod_{k>=1} cos(2 pi n / 3^k); independent scalar loop
    for (double t : {1.0, 2.0, 5.0, 17.0}) {
        double prod = 1.0;
        double arg = 2.0 * kPi * t / 3.0;
        while (std::abs(arg) > 1e-18) {
            prod *= std::cos(arg);
            arg /= 3.0;
        }
        auto r = ifs_moment(cantor, t, 1e-12);
        CHECK(std::abs(r.value - Complex(prod)) < 1e-10);
        CHECK(std::abs(r.value.imag()) < 1e-12);
        CHECK(r.tail_bound < 1e-12);
        CHECK(std::abs(r.value) <= 1.0 + 1e-12);
    }

    // conjugate symmetry in t
    auto rp = ifs_moment(cantor, 7.0, 1e-12);
    auto rn = ifs_moment(cantor, -7.0, 1e-12);
    CHECK(std::abs(rp.value - std::conj(rn.value)) < 1e-14);

    // the certificate: deeper truncation tolerances shrink the tail bound
    auto loose = ifs_moment(cantor, 3.0, 1e-4);
    auto tight = ifs_moment(cantor, 3.0, 1e-10);
    CHECK(loose.depth <= tight.depth);
    CHECK(tight.tail_bound <= loose.tail_bound);
    // first-order certificate: 2 pi |t| r^d B at the reported depth
    const double expect_bound = 2.0 * kPi * 3.0 *
                                std::pow(cantor.ratio(), loose.depth) *
                                cantor.support_bound();
    CHECK(loose.tail_bound == doctest::Approx(expect_bound).epsilon(1e-12));
}

TEST_CASE("ifs_moment agrees with deep refinement") {
    auto cantor = IFSMeasure::middle_thirds_cantor();
    auto refined = ifs_refine(cantor, 12);
    double worst = 0.0;
    for (long long n = -16; n <= 16; ++n) {
        auto r = ifs_moment(cantor, double(n), 1e-10);
        worst = std::max(worst, std::abs(r.value - moment(refined, n)));
    }
    CHECK(worst < 1e-6);
}
