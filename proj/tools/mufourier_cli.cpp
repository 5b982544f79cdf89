// Command-line driver: reproducible experiments over measure files, with
// CSV/JSON outputs.  Exit codes: 0 = verdict true / computed, 2 = verdict
// false, 1 = input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "mufourier/interpolation.hpp"
#include "mufourier/io.hpp"
#include "mufourier/kaczmarz.hpp"
#include "mufourier/measure.hpp"
#include "mufourier/rng.hpp"
#include "mufourier/sampling.hpp"
#include "mufourier/transforms.hpp"

namespace mf = mufourier;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Config {
    std::string measure_path;
    std::size_t order = 256;
    double tol = 1e-6;
    std::uint64_t seed = 1;
    std::string out;
    int depth = 8;
};

// Resolve the measure file to an atomic measure (IFS specs refine at the
// configured depth).
mf::AtomicMeasure atomic_from_config(const Config& cfg) {
    auto spec = mf::load_measure(cfg.measure_path);
    if (std::holds_alternative<mf::AtomicMeasure>(spec))
        return std::get<mf::AtomicMeasure>(spec);
    return mf::ifs_refine(std::get<mf::IFSMeasure>(spec), cfg.depth);
}

mf::MuFunction random_unit_function(const mf::AtomicMeasure& m, mf::Rng& rng) {
    std::vector<mf::Complex> v(m.size());
    for (auto& c : v) c = rng.normal_complex();
    mf::MuFunction f(std::move(v));
    const double n = mf::norm(m, f);
    for (auto& c : f.values) c /= n;
    return f;
}

fs::path out_dir(const Config& cfg) {
    if (!cfg.out.empty()) return cfg.out;
    if (const char* env = std::getenv("MUFOURIER_OUT")) return env;
    return ".";
}

void write_out(const Config& cfg, const std::string& name,
               const std::string& content) {
    mf::write_file_atomic(out_dir(cfg) / name, content);
}

int verdict_exit(bool ok) { return ok ? 0 : 2; }

// ---- verb implementations -------------------------------------------------

int run_moments(const Config& cfg) {
    auto m = atomic_from_config(cfg);
    auto seq = mf::moment_sequence(m, cfg.order);
    write_out(cfg, "moments.csv",
              mf::series_to_csv(mf::PowerSeries(std::move(seq))));
    return 0;
}

int run_alpha(const Config& cfg) {
    auto m = atomic_from_config(cfg);
    auto p = mf::cauchy_series(m, cfg.order);
    auto alpha = mf::reciprocal_series(p);
    const double residual = mf::reciprocal_residual(p, alpha);
    write_out(cfg, "alpha.csv", mf::series_to_csv(alpha));
    json side{{"order", cfg.order}, {"residual", residual}};
    write_out(cfg, "alpha.json", side.dump(2) + "\n");
    return 0;
}

int run_parseval(const Config& cfg) {
    auto m = atomic_from_config(cfg);
    mf::Rng rng(cfg.seed);
    auto f = random_unit_function(m, rng);
    auto alpha = mf::reciprocal_series(mf::cauchy_series(m, cfg.order));
    const auto t0 = std::chrono::steady_clock::now();
    auto run = mf::analyze_adaptive(m, f, alpha, cfg.tol, cfg.order);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    write_out(cfg, "fourier.csv", mf::fourier_to_csv(run.data));
    std::string curve;
    for (std::size_t n = 0; n < run.defect_curve.size(); ++n)
        curve += std::to_string(n) + ", " +
                 mf::format_double(run.defect_curve[n]) + "\n";
    write_out(cfg, "defect_curve.csv", curve);
    json rep{{"order", run.stop_order},
             {"defect", run.defect()},
             {"wall_time", wall}};
    write_out(cfg, "parseval.json", rep.dump(2) + "\n");
    return verdict_exit(run.defect() <= cfg.tol);
}

int run_kaczmarz_compare(const Config& cfg) {
    auto m = atomic_from_config(cfg);
    mf::Rng rng(cfg.seed);
    auto f = random_unit_function(m, rng);
    auto alpha = mf::reciprocal_series(mf::cauchy_series(m, cfg.order));
    auto data = mf::analyze(m, f, alpha, cfg.order);
    auto targets = mf::moment_sequence(m, f, cfg.order);
    auto iterates = mf::kaczmarz_iterate(m, targets, cfg.order);

    // cumulative first-expansion partial sums vs the iterates
    std::vector<mf::Complex> acc(m.size(), 0.0);
    std::vector<mf::Complex> rot(m.size()), pw(m.size(), 1.0);
    for (std::size_t k = 0; k < m.size(); ++k)
        rot[k] = std::polar(1.0, 2.0 * std::numbers::pi * m.position(k));
    double worst = 0.0;
    std::string csv;
    for (std::size_t n = 0; n <= cfg.order; ++n) {
        double diff = 0.0;
        for (std::size_t k = 0; k < m.size(); ++k) {
            acc[k] += data.coefficients[n] * pw[k];
            diff = std::max(diff, std::abs(acc[k] - iterates[n].values[k]));
        }
        for (std::size_t k = 0; k < m.size(); ++k) pw[k] *= rot[k];
        worst = std::max(worst, diff);
        csv += std::to_string(n) + ", " + mf::format_double(diff) + "\n";
    }
    write_out(cfg, "kaczmarz_compare.csv", csv);
    json rep{{"verdict", worst <= cfg.tol},
             {"max_diff", worst},
             {"order", cfg.order},
             {"bound", cfg.tol}};
    write_out(cfg, "kaczmarz_compare.json", rep.dump(2) + "\n");
    return verdict_exit(worst <= cfg.tol);
}

int run_reconstruct(const Config& cfg, const std::string& samples_path,
                    const std::string& points_path) {
    auto m = atomic_from_config(cfg);
    auto samples = mf::samples_from_csv_file(samples_path);
    auto entries = mf::points_from_csv_file(points_path);
    auto alpha = mf::reciprocal_series(
        mf::cauchy_series(m, std::min(cfg.order, samples.size() - 1)));

    std::vector<mf::Complex> pts;
    std::vector<mf::Complex> refs;
    bool have_refs = !entries.empty();
    for (const auto& e : entries) {
        pts.push_back(e.z);
        if (e.reference)
            refs.push_back(*e.reference);
        else
            have_refs = false;
    }
    const std::size_t order = std::min(cfg.order, samples.size() - 1);
    auto reports = mf::reconstruct_many(samples, m, alpha, pts, order,
                                        /*adaptive_tol=*/cfg.tol * 0.1,
                                        have_refs ? &refs : nullptr);
    write_out(cfg, "reconstruct.csv", mf::reconstruction_to_csv(reports));
    double max_err = 0.0;
    double max_bound = 0.0;
    for (const auto& r : reports) {
        if (have_refs) max_err = std::max(max_err, r.error());
        max_bound = std::max(max_bound, r.tail_bound);
    }
    json rep{{"verdict", !have_refs || max_err <= cfg.tol},
             {"order", order},
             {"bound", max_bound},
             {"max_error", have_refs ? json(max_err) : json(nullptr)}};
    write_out(cfg, "reconstruct.json", rep.dump(2) + "\n");
    return verdict_exit(!have_refs || max_err <= cfg.tol);
}

int run_vmu(const Config& cfg) {
    auto m = atomic_from_config(cfg);
    mf::Rng rng(cfg.seed);
    auto f = random_unit_function(m, rng);
    auto alpha = mf::reciprocal_series(mf::cauchy_series(m, cfg.order));
    auto cand = mf::nct_series(m, f, alpha, cfg.order);

    const double fn = mf::norm(m, f);
    double known = 0.0;
    for (std::size_t n = 0; n <= cand.series.order(); ++n)
        known += std::norm(cand.series[n]);
    const double tail = std::sqrt(std::max(0.0, fn * fn - known));

    std::string csv;
    double max_diff = 0.0, max_bound = 0.0;
    for (int ir = 1; ir <= 16; ++ir) {
        const double r = 0.9 * ir / 16.0;
        for (int ia = 0; ia < 16; ++ia) {
            const double th = 2.0 * std::numbers::pi * ia / 16.0;
            const mf::Complex z = std::polar(r, th);
            const mf::Complex q = mf::nct_quotient(m, f, z);
            const mf::Complex s = mf::series_eval(cand.series, z);
            const double bound = tail * std::pow(r, double(cfg.order + 1)) /
                                 std::sqrt(1.0 - r * r);
            const double diff = std::abs(q - s);
            max_diff = std::max(max_diff, diff);
            max_bound = std::max(max_bound, bound);
            csv += mf::format_double(z.real()) + ", " +
                   mf::format_double(z.imag()) + ", " +
                   mf::format_double(diff) + ", " + mf::format_double(bound) +
                   "\n";
        }
    }
    write_out(cfg, "vmu.csv", csv);
    const bool ok = max_diff <= cfg.tol;
    json rep{{"verdict", ok},
             {"max_diff", max_diff},
             {"bound", max_bound},
             {"order", cfg.order},
             {"norm_f", fn}};
    write_out(cfg, "vmu.json", rep.dump(2) + "\n");
    return verdict_exit(ok);
}

int run_membership(const Config& cfg, const std::string& candidate_path,
                   std::size_t window) {
    auto m = atomic_from_config(cfg);
    auto alpha = mf::reciprocal_series(mf::cauchy_series(m, cfg.order));
    auto b = mf::inner_function_series(alpha);
    mf::ModelCandidate cand;
    std::optional<double> hint;
    if (!candidate_path.empty()) {
        cand = {mf::series_from_csv_file(candidate_path),
                mf::Provenance::External};
    } else {
        mf::Rng rng(cfg.seed);
        auto f = random_unit_function(m, rng);
        cand = mf::nct_series(m, f, alpha, cfg.order);
        hint = mf::norm(m, f);
    }
    auto rep = mf::membership_test(cand, b, window, cfg.tol, hint);
    json j{{"verdict", rep.verdict},
           {"defect", rep.defect},
           {"bound", rep.bound},
           {"bound_certified", rep.bound_certified},
           {"order", rep.order},
           {"window", rep.window}};
    write_out(cfg, "membership.json", j.dump(2) + "\n");
    return verdict_exit(rep.verdict);
}

int run_moments_solve(const Config& cfg, const std::string& moments_path) {
    auto m = atomic_from_config(cfg);
    auto a = mf::samples_from_csv_file(moments_path);  // "n, re, im"
    const std::size_t order = std::max(cfg.order, 2 * (a.size() - 1));
    auto alpha = mf::reciprocal_series(mf::cauchy_series(m, order));
    auto b = mf::inner_function_series(alpha);
    auto sol = mf::solve_moment_problem(a.values, m, alpha, b, cfg.tol);
    json j{{"verdict", sol.feasible},
           {"defect", sol.membership.defect},
           {"bound", sol.membership.bound},
           {"order", sol.membership.order},
           {"window", sol.membership.window},
           {"moment_residual", sol.feasible ? json(sol.max_moment_residual)
                                            : json(nullptr)}};
    write_out(cfg, "moments_solve.json", j.dump(2) + "\n");
    if (sol.feasible) {
        std::string csv;
        for (std::size_t k = 0; k < m.size(); ++k)
            csv += std::to_string(k) + ", " +
                   mf::format_double(m.position(k)) + ", " +
                   mf::format_double(sol.f.values[k].real()) + ", " +
                   mf::format_double(sol.f.values[k].imag()) + "\n";
        write_out(cfg, "moments_solve.csv", csv);
    }
    return verdict_exit(sol.feasible);
}

int run_two_sided(const Config& cfg, const std::string& pos_path,
                  const std::string& neg_path) {
    auto m = atomic_from_config(cfg);
    auto pos = mf::samples_from_csv_file(pos_path);
    auto neg = mf::samples_from_csv_file(neg_path);
    const std::size_t order =
        std::min({cfg.order, pos.size() - 1, neg.size() - 1});
    auto alpha = mf::reciprocal_series(mf::cauchy_series(m, order));
    auto b = mf::inner_function_series(alpha);
    auto rep = mf::two_sided_check(pos, neg, m, alpha, b, cfg.tol);
    json j{{"verdict", rep.verdict},
           {"defect_pos", rep.membership_pos.defect},
           {"defect_neg", rep.membership_neg.defect},
           {"bound_pos", rep.membership_pos.bound},
           {"bound_neg", rep.membership_neg.bound},
           {"mismatch", rep.mismatch},
           {"order", order},
           {"tol", cfg.tol}};
    write_out(cfg, "two_sided.json", j.dump(2) + "\n");
    return verdict_exit(rep.verdict);
}

int run_growth(const Config& cfg, double ymax, int ycount) {
    auto m = atomic_from_config(cfg);
    mf::Rng rng(cfg.seed);
    auto f = random_unit_function(m, rng);
    std::vector<double> ys(ycount);
    for (int i = 0; i < ycount; ++i) ys[i] = ymax * (i + 1) / double(ycount);
    auto rep = mf::growth_envelope_check(m, f, ys, cfg.tol);
    std::string csv;
    for (std::size_t i = 0; i < ys.size(); ++i)
        csv += mf::format_double(ys[i]) + ", " +
               mf::format_double(rep.ratio_pos[i]) + ", " +
               mf::format_double(rep.ratio_neg[i]) + "\n";
    write_out(cfg, "growth.csv", csv);
    json j{{"verdict", rep.verdict},
           {"final_ratio_pos", rep.ratio_pos.back()},
           {"final_ratio_neg", rep.ratio_neg.back()},
           {"bound", rep.tol},
           {"order", ycount}};
    write_out(cfg, "growth.json", j.dump(2) + "\n");
    return verdict_exit(rep.verdict);
}

int run_cantor_check(const Config& cfg, int depth, int nmax) {
    mf::IFSMeasure cantor = mf::IFSMeasure::middle_thirds_cantor();
    if (!cfg.measure_path.empty()) {
        auto spec = mf::load_measure(cfg.measure_path);
        if (!std::holds_alternative<mf::IFSMeasure>(spec))
            throw std::runtime_error(
                "cantor-check: measure must be an ifs spec");
        cantor = std::get<mf::IFSMeasure>(spec);
    }
    auto refined = mf::ifs_refine(cantor, depth);
    double worst = 0.0;
    std::string csv;
    for (int n = -nmax; n <= nmax; ++n) {
        auto im = mf::ifs_moment(cantor, double(n), 1e-10);
        auto rm = mf::moment(refined, n);
        const double diff = std::abs(im.value - rm);
        worst = std::max(worst, diff);
        csv += std::to_string(n) + ", " + mf::format_double(im.value.real()) +
               ", " + mf::format_double(im.value.imag()) + ", " +
               mf::format_double(rm.real()) + ", " +
               mf::format_double(rm.imag()) + ", " + mf::format_double(diff) +
               "\n";
    }
    write_out(cfg, "cantor_check.csv", csv);
    const bool ok = worst <= cfg.tol;
    json j{{"verdict", ok},
           {"max_diff", worst},
           {"depth", depth},
           {"order", nmax},
           {"bound", cfg.tol}};
    write_out(cfg, "cantor_check.json", j.dump(2) + "\n");
    return verdict_exit(ok);
}

// Long-format plot rows from a previously written report CSV.  The source
// kind is inferred from the column count: 2 = defect curve, 3 = growth,
// 6 = reconstruction.
int run_plotdata(const Config& cfg, const std::string& report_path) {
    std::ifstream in(report_path);
    if (!in)
        throw std::runtime_error("cannot open report " + report_path);
    std::vector<mf::PlotRow> rows;
    std::string line;
    std::size_t lineno = 0, index = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> parts;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                parts.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
        parts.push_back(cur);
        auto num = [&](const std::string& s) {
            char* end = nullptr;
            double v = std::strtod(s.c_str(), &end);
            if (end != s.c_str() + s.size())
                throw std::runtime_error(report_path + ":" +
                                         std::to_string(lineno) +
                                         ": not a number: \"" + s + "\"");
            return v;
        };
        if (parts.size() == 2) {
            rows.push_back({"defect", num(parts[0]), num(parts[1])});
        } else if (parts.size() == 3) {
            rows.push_back({"ratio_pos", num(parts[0]), num(parts[1])});
            rows.push_back({"ratio_neg", num(parts[0]), num(parts[2])});
        } else if (parts.size() == 6) {
            rows.push_back({"err", double(index), num(parts[4])});
        } else {
            throw std::runtime_error(report_path + ":" +
                                     std::to_string(lineno) +
                                     ": unrecognized report row");
        }
        ++index;
    }
    if (rows.empty())
        throw std::runtime_error(report_path + ": empty report");
    write_out(cfg, "plotdata.csv", mf::plotdata_to_csv(rows));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier analysis of singular measures on the torus"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--measure", cfg.measure_path, "measure JSON file");
    app.add_option("--order", cfg.order, "order cap (default 256)");
    app.add_option("--tol", cfg.tol, "tolerance (default 1e-6)");
    app.add_option("--seed", cfg.seed, "RNG seed (default 1)");
    app.add_option("--out", cfg.out,
                   "output directory (default $MUFOURIER_OUT or .)");
    app.add_option("--depth", cfg.depth,
                   "refinement depth for ifs measures (default 8)");

    auto* v_moments = app.add_subcommand("moments", "moment sequence CSV");
    auto* v_alpha = app.add_subcommand("alpha", "reciprocal series + residual");
    auto* v_parseval =
        app.add_subcommand("parseval", "Parseval defect for a random f");
    auto* v_kacz = app.add_subcommand(
        "kaczmarz-compare", "iterates vs cumulative partial sums");
    auto* v_rec = app.add_subcommand("reconstruct",
                                     "sampling reconstruction at points");
    std::string samples_path, points_path;
    v_rec->add_option("--samples", samples_path, "samples CSV (j, re, im)")
        ->required();
    v_rec->add_option("--points", points_path,
                      "points CSV (re, im[, ref_re, ref_im])")
        ->required();
    auto* v_vmu = app.add_subcommand(
        "vmu", "normalized Cauchy transform: quotient vs series");
    auto* v_mem = app.add_subcommand("membership", "H(b) membership defect");
    std::string candidate_path;
    std::size_t window = 32;
    v_mem->add_option("--candidate", candidate_path,
                      "candidate series CSV (default: V_mu of a random f)");
    v_mem->add_option("--window", window, "defect window (default 32)");
    auto* v_solve =
        app.add_subcommand("moments-solve", "trigonometric moment problem");
    std::string moments_path;
    v_solve->add_option("--moments", moments_path, "moment CSV (n, re, im)")
        ->required();
    auto* v_two = app.add_subcommand("two-sided",
                                     "two-sided frequency consistency check");
    std::string pos_path, neg_path;
    v_two->add_option("--pos", pos_path, "samples F(n), n >= 0")->required();
    v_two->add_option("--neg", neg_path, "samples conj(F(-n)), n >= 0")
        ->required();
    auto* v_growth =
        app.add_subcommand("growth", "imaginary-axis growth envelope");
    double ymax = 10.0;
    int ycount = 16;
    v_growth->add_option("--ymax", ymax, "largest y (default 10)");
    v_growth->add_option("--ycount", ycount, "number of y values (default 16)");
    auto* v_cantor =
        app.add_subcommand("cantor-check", "ifs_moment vs atomic refinement");
    int cantor_depth = 12;
    int nmax = 32;
    v_cantor->add_option("--check-depth", cantor_depth,
                         "refinement depth (default 12)");
    v_cantor->add_option("--nmax", nmax, "frequency range (default 32)");
    auto* v_plot = app.add_subcommand("plotdata", "long-format plot CSV");
    std::string report_path;
    v_plot->add_option("--report", report_path, "report CSV to transform")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (v_moments->parsed()) return run_moments(cfg);
        if (v_alpha->parsed()) return run_alpha(cfg);
        if (v_parseval->parsed()) return run_parseval(cfg);
        if (v_kacz->parsed()) return run_kaczmarz_compare(cfg);
        if (v_rec->parsed())
            return run_reconstruct(cfg, samples_path, points_path);
        if (v_vmu->parsed()) return run_vmu(cfg);
        if (v_mem->parsed()) return run_membership(cfg, candidate_path, window);
        if (v_solve->parsed()) return run_moments_solve(cfg, moments_path);
        if (v_two->parsed()) return run_two_sided(cfg, pos_path, neg_path);
        if (v_growth->parsed()) return run_growth(cfg, ymax, ycount);
        if (v_cantor->parsed()) return run_cantor_check(cfg, cantor_depth, nmax);
        if (v_plot->parsed()) return run_plotdata(cfg, report_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
