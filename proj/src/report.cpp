#include "hyperball/report.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hyperball {

void VerificationReport::note(const std::string& s) {
    if (!notes.empty()) notes += "; ";
    notes += s;
}

namespace {

nlohmann::ordered_json complex_json(cplx z) {
    nlohmann::ordered_json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["params"] = r.params;
    j["lhs"] = complex_json(r.lhs);
    if (r.rhs_variants.empty()) {
        j["rhs"] = complex_json(r.rhs);
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const RhsVariant& v : r.rhs_variants) {
            nlohmann::ordered_json e;
            e["label"] = v.label;
            e["re"] = v.value.real();
            e["im"] = v.value.imag();
            arr.push_back(e);
        }
        j["rhs_variants"] = arr;
    }
    j["ratio"] = complex_json(r.ratio);
    j["ratio_cv"] = r.ratio_cv;
    j["abs_err"] = r.abs_err;
    j["rel_err"] = r.rel_err;
    j["nodes"] = r.quadrature_diag.nodes;
    j["lambda_max"] = r.lambda_max;
    j["seed"] = r.seed;
    j["passed"] = r.passed;
    j["notes"] = r.notes;
    return j;
}

std::string to_json_string(const VerificationReport& r) { return to_json(r).dump(2) + "\n"; }

RatioStats ratio_stats(const std::vector<cplx>& ratios) {
    RatioStats s;
    if (ratios.empty()) return s;
    cplx sum = 0.0;
    for (const cplx& r : ratios) sum += r;
    s.mean = sum / static_cast<double>(ratios.size());
    double var = 0.0;
    for (const cplx& r : ratios) var += std::norm(r - s.mean);
    var /= static_cast<double>(ratios.size());
    s.cv = std::abs(s.mean) > 0.0 ? std::sqrt(var) / std::abs(s.mean) : INFINITY;
    return s;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"')
            quoted = !quoted;
        else if (ch == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r')
            cur += ch;
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::vector<CsvRow> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    const std::vector<std::string> header = split_csv_line(line);
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size()) throw std::runtime_error(path + ": ragged row");
        CsvRow row;
        for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = cells[i];
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string fixture_directory() {
    if (const char* env = std::getenv("HYPERBALL_FIXTURES"); env && *env) return env;
#ifdef HYPERBALL_FIXTURE_DIR
    return HYPERBALL_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

}  // namespace hyperball
