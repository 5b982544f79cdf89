#include "mufourier/io.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mufourier {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, std::size_t line,
                       const std::string& what) {
    throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + what);
}

std::size_t line_of_offset(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

void reject_unknown_fields(const json& j, const std::string& origin,
                           std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) ok = true;
        if (!ok)
            throw std::runtime_error(origin + ": unknown field \"" + it.key() +
                                     "\"");
    }
}

double require_number(const json& j, const char* field,
                      const std::string& origin) {
    if (!j.contains(field))
        throw std::runtime_error(origin + ": missing field \"" +
                                 std::string(field) + "\"");
    if (!j[field].is_number())
        throw std::runtime_error(origin + ": field \"" + std::string(field) +
                                 "\" must be a number");
    return j[field].get<double>();
}

std::vector<double> require_number_array(const json& j, const char* field,
                                         const std::string& origin) {
    if (!j.contains(field) || !j[field].is_array())
        throw std::runtime_error(origin + ": field \"" + std::string(field) +
                                 "\" must be an array");
    std::vector<double> out;
    for (const auto& v : j[field]) {
        if (!v.is_number())
            throw std::runtime_error(origin + ": field \"" +
                                     std::string(field) +
                                     "\" must contain numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Split a CSV line on commas, trimming spaces.
std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_number(const std::string& s, const std::string& origin,
                    std::size_t line) {
    if (s.empty()) fail(origin, line, "empty number field");
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        fail(origin, line, "not a number: \"" + s + "\"");
    return v;
}

// Indexed complex CSV "idx, re, im" with contiguous indices from 0.
std::vector<Complex> indexed_complex_csv(const std::filesystem::path& file) {
    const std::string origin = file.string();
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + origin);
    std::vector<Complex> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto parts = split_csv(line);
        if (parts.size() != 3)
            fail(origin, lineno, "expected 3 fields: idx, re, im");
        double idx = parse_number(parts[0], origin, lineno);
        if (idx != double(out.size()))
            fail(origin, lineno,
                 "indices must be contiguous from 0 (got " + parts[0] +
                     ", expected " + std::to_string(out.size()) + ")");
        out.emplace_back(parse_number(parts[1], origin, lineno),
                         parse_number(parts[2], origin, lineno));
    }
    if (out.empty()) throw std::runtime_error(origin + ": empty CSV");
    return out;
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

MeasureSpec parse_measure(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(origin, line_of_offset(text, e.byte), e.what());
    }
    if (!j.is_object())
        throw std::runtime_error(origin + ": measure document must be an object");
    if (!j.contains("type") || !j["type"].is_string())
        throw std::runtime_error(origin + ": missing string field \"type\"");
    const std::string type = j["type"].get<std::string>();
    if (type == "atomic") {
        reject_unknown_fields(j, origin, {"type", "atoms"});
        if (!j.contains("atoms") || !j["atoms"].is_array())
            throw std::runtime_error(origin + ": field \"atoms\" must be an array");
        std::vector<Atom> atoms;
        for (const auto& pair : j["atoms"]) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                !pair[1].is_number())
                throw std::runtime_error(
                    origin + ": each atom must be a [position, weight] pair");
            atoms.push_back({pair[0].get<double>(), pair[1].get<double>()});
        }
        try {
            return AtomicMeasure(std::move(atoms));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(origin + ": " + e.what());
        }
    }
    if (type == "ifs") {
        reject_unknown_fields(
            j, origin,
            {"type", "ratio", "offsets", "probabilities", "support_bound"});
        try {
            return IFSMeasure(require_number(j, "ratio", origin),
                              require_number_array(j, "offsets", origin),
                              require_number_array(j, "probabilities", origin),
                              require_number(j, "support_bound", origin));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(origin + ": " + e.what());
        }
    }
    throw std::runtime_error(origin + ": unknown measure type \"" + type +
                             "\" (expected \"atomic\" or \"ifs\")");
}

MeasureSpec load_measure(const std::filesystem::path& file) {
    return parse_measure(read_file(file), file.string());
}

std::string measure_to_json(const AtomicMeasure& m) {
    json atoms = json::array();
    for (const auto& a : m.atoms()) atoms.push_back({a.position, a.weight});
    json j{{"type", "atomic"}, {"atoms", atoms}};
    return j.dump(2) + "\n";
}

std::string measure_to_json(const IFSMeasure& s) {
    json j{{"type", "ifs"},
           {"ratio", s.ratio()},
           {"offsets", s.offsets()},
           {"probabilities", s.probabilities()},
           {"support_bound", s.support_bound()}};
    return j.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& file,
                       const std::string& content) {
    auto dir = file.parent_path();
    if (dir.empty()) dir = ".";
    std::filesystem::create_directories(dir);
    static std::mt19937_64 nonce(std::random_device{}());
    const auto tmp =
        dir / (file.filename().string() + ".tmp" + std::to_string(nonce()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

std::string series_to_csv(const PowerSeries& p) {
    std::string out;
    for (std::size_t n = 0; n <= p.order(); ++n)
        out += std::to_string(n) + ", " + format_double(p[n].real()) + ", " +
               format_double(p[n].imag()) + "\n";
    return out;
}

PowerSeries series_from_csv_file(const std::filesystem::path& file) {
    return PowerSeries(indexed_complex_csv(file));
}

std::string fourier_to_csv(const FourierData& d) {
    std::string out;
    auto cum = d.cumulative_energy();
    for (std::size_t n = 0; n <= d.order; ++n)
        out += std::to_string(n) + ", " +
               format_double(d.coefficients[n].real()) + ", " +
               format_double(d.coefficients[n].imag()) + ", " +
               format_double(cum[n]) + "\n";
    return out;
}

std::string samples_to_csv(const SampleSet& s) {
    std::string out;
    for (std::size_t j = 0; j < s.values.size(); ++j)
        out += std::to_string(j) + ", " + format_double(s.values[j].real()) +
               ", " + format_double(s.values[j].imag()) + "\n";
    return out;
}

SampleSet samples_from_csv_file(const std::filesystem::path& file) {
    return SampleSet(indexed_complex_csv(file));
}

std::vector<PointEntry> points_from_csv_file(
    const std::filesystem::path& file) {
    const std::string origin = file.string();
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + origin);
    std::vector<PointEntry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto parts = split_csv(line);
        if (parts.size() != 2 && parts.size() != 4)
            fail(origin, lineno,
                 "expected \"re, im\" or \"re, im, ref_re, ref_im\"");
        PointEntry e;
        e.z = {parse_number(parts[0], origin, lineno),
               parse_number(parts[1], origin, lineno)};
        if (parts.size() == 4)
            e.reference = Complex(parse_number(parts[2], origin, lineno),
                                  parse_number(parts[3], origin, lineno));
        out.push_back(e);
    }
    if (out.empty()) throw std::runtime_error(origin + ": empty CSV");
    return out;
}

std::string reconstruction_to_csv(const std::vector<ReconstructionReport>& r) {
    std::string out;
    for (const auto& rep : r) {
        out += format_double(rep.point.real()) + ", " +
               format_double(rep.point.imag()) + ", " +
               format_double(rep.reconstructed.real()) + ", " +
               format_double(rep.reconstructed.imag()) + ", " +
               format_double(rep.error()) + ", " +
               std::to_string(rep.truncation_order) + "\n";
    }
    return out;
}

std::string plotdata_to_csv(const std::vector<PlotRow>& rows) {
    std::string out;
    for (const auto& r : rows)
        out += r.series + ", " + format_double(r.x) + ", " +
               format_double(r.y) + "\n";
    return out;
}

}  // namespace mufourier
