#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "mufourier/kaczmarz.hpp"
#include "mufourier/measure.hpp"
#include "mufourier/sampling.hpp"
#include "mufourier/transforms.hpp"

// File formats:
//   measure JSON   {"type": "atomic", "atoms": [[x, w], ...]} or
//                  {"type": "ifs", "ratio": r, "offsets": [...],
//                   "probabilities": [...], "support_bound": s}
//                  -- exact field names, unknown fields rejected.
//   series CSV     rows "n, re, im"
//   fourier CSV    rows "n, re, im, cumulative_energy"
//   samples CSV    rows "j, re, im"
//   points CSV     rows "re, im" or "re, im, ref_re, ref_im"
// All numbers are written with %.17g; files are written to a temp name in
// the target directory and renamed into place.

namespace mufourier {

using MeasureSpec = std::variant<AtomicMeasure, IFSMeasure>;

// Parse a measure document; throws std::runtime_error with a line-precise
// message on malformed input.
MeasureSpec load_measure(const std::filesystem::path& file);
MeasureSpec parse_measure(const std::string& text, const std::string& origin);

std::string measure_to_json(const AtomicMeasure& m);
std::string measure_to_json(const IFSMeasure& s);

// Atomic (temp + rename) whole-file write.
void write_file_atomic(const std::filesystem::path& file,
                       const std::string& content);

std::string format_double(double x);  // %.17g

std::string series_to_csv(const PowerSeries& p);
PowerSeries series_from_csv_file(const std::filesystem::path& file);

std::string fourier_to_csv(const FourierData& d);

std::string samples_to_csv(const SampleSet& s);
SampleSet samples_from_csv_file(const std::filesystem::path& file);

struct PointEntry {
    Complex z;
    std::optional<Complex> reference;
};
std::vector<PointEntry> points_from_csv_file(const std::filesystem::path& file);

std::string reconstruction_to_csv(const std::vector<ReconstructionReport>& r);

// Long-format plot rows "series_name, x, y".
struct PlotRow {
    std::string series;
    double x;
    double y;
};
std::string plotdata_to_csv(const std::vector<PlotRow>& rows);

}  // namespace mufourier
