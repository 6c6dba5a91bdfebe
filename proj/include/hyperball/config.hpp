#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hyperball/params.hpp"
#include "hyperball/quad.hpp"

namespace hyperball {

enum class OutputFormat { csv, json };

// Run settings for the CLI. A JSON file supplies defaults; command-line flags override them.
struct RunConfig {
    Parameters params;
    bool params_given = false;  // params came from the file or a flag, not the defaults
    QuadratureSpec spec;
    std::uint64_t seed = 7;
    std::string output;  // empty: stdout for CSV, the working directory for reports
    OutputFormat format = OutputFormat::csv;
};

// Expected shape:
//   {"params": {"n": 1, "nu": 2.5}, "spec": {"rel_tol": ..., "abs_tol": ..., "lambda_max": ...,
//    "panel_points": ..., "accel_terms": ...}, "seed": 7, "output": "out.csv", "format": "csv"}
// Every key is optional; unknown keys throw DomainError, as do invalid values.
RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

nlohmann::ordered_json to_json(const RunConfig& c);

void validate(const RunConfig& c);

}  // namespace hyperball
