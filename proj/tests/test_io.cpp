#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "mufourier/io.hpp"
#include "mufourier/kaczmarz.hpp"
#include "mufourier/measure.hpp"
#include "mufourier/rng.hpp"
#include "mufourier/sampling.hpp"
#include "mufourier/transforms.hpp"
#include "support.hpp"

using namespace mufourier;
namespace fs = std::filesystem;

namespace {

// fresh scratch directory per process, removed eagerly at first use
fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "mufourier_io_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_text(const std::string& name, const std::string& text) {
    fs::path p = scratch() / name;
    write_file_atomic(p, text);
    return p;
}

std::string thrown_message(const std::function<void()>& op) {
    try {
        op();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("format_double round-trips doubles exactly") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.5) == "-0.5");
    for (double x : {0.1, -1.0 / 3.0, 1e300, 5e-324, 0.0, -2.5e-10,
                     123456789.123456789}) {
        const std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}

TEST_CASE("atomic measure JSON round trip is exact") {
    AtomicMeasure m({-0.375, 0.1, 1.0 / 3.0}, {0.25, 0.25, 0.5});
    const std::string text = measure_to_json(m);
    auto spec = parse_measure(text, "roundtrip");
    auto* back = std::get_if<AtomicMeasure>(&spec);
    REQUIRE(back != nullptr);
    REQUIRE(back->size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(back->position(k) == m.position(k));
        CHECK(back->weight(k) == m.weight(k));
    }
}

TEST_CASE("ifs measure JSON round trip is exact") {
    IFSMeasure cantor(1.0 / 3.0, {-1.0 / 3.0, 1.0 / 3.0}, {0.5, 0.5}, 0.5);
    const std::string text = measure_to_json(cantor);
    auto spec = parse_measure(text, "roundtrip");
    auto* back = std::get_if<IFSMeasure>(&spec);
    REQUIRE(back != nullptr);
    CHECK(back->ratio() == cantor.ratio());
    CHECK(back->offsets() == cantor.offsets());
    CHECK(back->probabilities() == cantor.probabilities());
    CHECK(back->support_bound() == cantor.support_bound());
}

TEST_CASE("measure parser rejects unknown and malformed fields") {
    auto msg = thrown_message([] {
        parse_measure(R"({"type":"atomic","atoms":[[0,1]],"extra":3})", "doc");
    });
    CHECK(msg.find("unknown field \"extra\"") != std::string::npos);

    CHECK_THROWS_AS(parse_measure(R"([1,2,3])", "doc"), std::runtime_error);
    CHECK_THROWS_AS(parse_measure(R"({"atoms":[[0,1]]})", "doc"),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_measure(R"({"type":"blue","atoms":[]})", "doc"),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_measure(R"({"type":"atomic","atoms":7})", "doc"),
                    std::runtime_error);
    CHECK_THROWS_AS(
        parse_measure(R"({"type":"atomic","atoms":[[0,1,2]]})", "doc"),
        std::runtime_error);
    CHECK_THROWS_AS(
        parse_measure(R"({"type":"atomic","atoms":[["0",1]]})", "doc"),
        std::runtime_error);
    CHECK_THROWS_AS(
        parse_measure(R"({"type":"ifs","offsets":[0],"probabilities":[1],"support_bound":0.5})",
                      "doc"),
        std::runtime_error);
    CHECK_THROWS_AS(
        parse_measure(R"({"type":"ifs","ratio":0.5,"offsets":1,"probabilities":[1],"support_bound":0.5})",
                      "doc"),
        std::runtime_error);
}

TEST_CASE("measure parser reports the line of a JSON syntax error") {
    const std::string text = "{\n  \"type\": \"atomic\",\n  #oops\n}\n";
    auto msg = thrown_message([&] { parse_measure(text, "mem"); });
    CHECK(msg.find("mem:3:") != std::string::npos);
}

TEST_CASE("semantic measure errors carry the document origin") {
    // positions 0.5 and -0.5 collide after reduction to [-1/2, 1/2)
    auto msg = thrown_message([] {
        parse_measure(R"({"type":"atomic","atoms":[[0.5,0.5],[-0.5,0.5]]})",
                      "doc.json");
    });
    CHECK(msg.find("doc.json") != std::string::npos);

    auto msg2 = thrown_message([] {
        parse_measure(
            R"({"type":"ifs","ratio":1.5,"offsets":[0],"probabilities":[1],"support_bound":0.5})",
            "doc.json");
    });
    CHECK(msg2.find("doc.json") != std::string::npos);
}

TEST_CASE("load_measure reads from disk") {
    AtomicMeasure m = AtomicMeasure::roots_of_unity(4);
    auto p = write_text("measure.json", measure_to_json(m));
    auto spec = load_measure(p);
    auto* back = std::get_if<AtomicMeasure>(&spec);
    REQUIRE(back != nullptr);
    CHECK(back->size() == 4);
    CHECK_THROWS_AS(load_measure(scratch() / "missing.json"),
                    std::runtime_error);
}

TEST_CASE("series CSV round trip is bitwise") {
    Rng rng(80);
    std::vector<Complex> cs(40);
    for (auto& c : cs) c = rng.normal_complex();
    PowerSeries p(cs);
    auto path = write_text("series.csv", series_to_csv(p));
    PowerSeries q = series_from_csv_file(path);
    REQUIRE(q.order() == p.order());
    for (std::size_t n = 0; n <= p.order(); ++n) CHECK(q[n] == p[n]);
    // serialize -> parse -> serialize is a fixed point
    CHECK(series_to_csv(q) == series_to_csv(p));
}

TEST_CASE("samples CSV round trip and blank-line tolerance") {
    Rng rng(81);
    std::vector<Complex> vs(17);
    for (auto& v : vs) v = rng.normal_complex();
    SampleSet s(vs);
    auto path = write_text("samples.csv", samples_to_csv(s));
    SampleSet t = samples_from_csv_file(path);
    CHECK(t.values == s.values);

    auto sparse = write_text("sparse.csv", "\n0, 1, 2\n\n1, 3, 4\n\n");
    SampleSet u = samples_from_csv_file(sparse);
    REQUIRE(u.values.size() == 2);
    CHECK(u.values[1] == Complex(3.0, 4.0));
}

TEST_CASE("indexed CSV errors are line-precise") {
    auto gap = write_text("gap.csv", "0, 1, 0\n2, 1, 0\n");
    auto msg = thrown_message([&] { samples_from_csv_file(gap); });
    CHECK(msg.find(":2:") != std::string::npos);
    CHECK(msg.find("contiguous") != std::string::npos);

    auto wide = write_text("wide.csv", "0, 1\n");
    msg = thrown_message([&] { series_from_csv_file(wide); });
    CHECK(msg.find(":1:") != std::string::npos);
    CHECK(msg.find("expected 3 fields") != std::string::npos);

    auto alpha = write_text("alpha_bad.csv", "0, 1, 0\n1, x, 0\n");
    msg = thrown_message([&] { series_from_csv_file(alpha); });
    CHECK(msg.find(":2:") != std::string::npos);
    CHECK(msg.find("not a number") != std::string::npos);

    auto empty = write_text("empty.csv", "");
    msg = thrown_message([&] { series_from_csv_file(empty); });
    CHECK(msg.find("empty CSV") != std::string::npos);
}

TEST_CASE("points CSV accepts optional references") {
    auto p = write_text("points.csv",
                        "1.5, 0\n0, 1, 0.25, -0.75\n-2, 0.5\n");
    auto pts = points_from_csv_file(p);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].z == Complex(1.5, 0.0));
    CHECK_FALSE(pts[0].reference.has_value());
    REQUIRE(pts[1].reference.has_value());
    CHECK(*pts[1].reference == Complex(0.25, -0.75));
    CHECK(pts[2].z == Complex(-2.0, 0.5));

    auto bad = write_text("points_bad.csv", "1, 2\n1, 2, 3\n");
    auto msg = thrown_message([&] { points_from_csv_file(bad); });
    CHECK(msg.find(":2:") != std::string::npos);
}

TEST_CASE("fourier CSV carries the running energy") {
    auto m = AtomicMeasure::roots_of_unity(4);
    Rng rng(82);
    auto f = testsupport::random_unit_function(m, rng);
    auto alpha = reciprocal_series(cauchy_series(m, 8));
    auto data = analyze(m, f, alpha, 8);
    const std::string csv = fourier_to_csv(data);

    std::istringstream in(csv);
    std::string line;
    std::size_t rows = 0;
    double last_cum = -1.0;
    while (std::getline(in, line)) {
        ++rows;
        double idx, re, im, cum;
        REQUIRE(std::sscanf(line.c_str(), "%lf, %lf, %lf, %lf", &idx, &re,
                            &im, &cum) == 4);
        CHECK(cum >= last_cum);  // cumulative energy is nondecreasing
        last_cum = cum;
    }
    CHECK(rows == 9);
    CHECK(last_cum == doctest::Approx(norm_sq(m, f)).epsilon(1e-10));
}

TEST_CASE("write_file_atomic replaces content and makes directories") {
    fs::path deep = scratch() / "a" / "b" / "out.txt";
    write_file_atomic(deep, "first\n");
    write_file_atomic(deep, "second\n");
    std::ifstream in(deep);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "second\n");
    // no stray temp files left behind
    std::size_t entries = 0;
    for ([[maybe_unused]] auto& e : fs::directory_iterator(deep.parent_path()))
        ++entries;
    CHECK(entries == 1);
}

TEST_CASE("reconstruction CSV has one six-field row per point") {
    auto m = AtomicMeasure::roots_of_unity(4);
    Rng rng(83);
    auto f = testsupport::random_unit_function(m, rng);
    SampleSet samples(moment_sequence(m, f, 16));
    auto alpha = reciprocal_series(cauchy_series(m, 16));
    std::vector<Complex> pts{Complex(1.5, 0.0), Complex(0.0, 1.0)};
    auto reports = reconstruct_many(samples, m, alpha, pts, 16);
    const std::string csv = reconstruction_to_csv(reports);

    std::istringstream in(csv);
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        double re, im, vre, vim, err;
        long ord;
        REQUIRE(std::sscanf(line.c_str(), "%lf, %lf, %lf, %lf, %lf, %ld", &re,
                            &im, &vre, &vim, &err, &ord) == 6);
        CHECK(Complex(re, im) == pts[rows]);
        ++rows;
    }
    CHECK(rows == 2);
}

TEST_CASE("plot rows serialize in long format") {
    std::vector<PlotRow> rows{{"defect", 1.0, 0.5}, {"defect", 2.0, 0.25}};
    CHECK(plotdata_to_csv(rows) == "defect, 1, 0.5\ndefect, 2, 0.25\n");
}
