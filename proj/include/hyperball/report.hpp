#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperball/common.hpp"
#include "hyperball/quad.hpp"

namespace hyperball {

struct RhsVariant {
    std::string label;
    cplx value;
};

struct VerificationReport {
    std::string check;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    cplx lhs;
    cplx rhs;
    std::vector<RhsVariant> rhs_variants;  // non-empty: serialized instead of rhs
    cplx ratio;
    double ratio_cv = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    QuadDiagnostics quadrature_diag;
    double lambda_max = 0.0;
    std::uint64_t seed = 0;
    bool passed = false;
    std::string notes;

    void note(const std::string& s);
};

// Field names and order are part of the output contract.
nlohmann::ordered_json to_json(const VerificationReport& r);
std::string to_json_string(const VerificationReport& r);

// Mean and coefficient of variation (population σ over |mean|) of complex samples.
struct RatioStats {
    cplx mean;
    double cv = 0.0;
};
RatioStats ratio_stats(const std::vector<cplx>& ratios);

// Read-only CSV rows keyed by header name; handles double-quoted fields.
using CsvRow = std::map<std::string, std::string>;
std::vector<CsvRow> read_csv(const std::string& path);

// HYPERBALL_FIXTURES if set, else the fixtures/ directory of the source tree.
std::string fixture_directory();

}  // namespace hyperball
