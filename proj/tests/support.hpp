#pragma once

#include <doctest.h>

#include <cmath>
#include <string>

#include "hyperball/format.hpp"
#include "hyperball/report.hpp"

namespace hyperball::test {

inline double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// Rows of fixtures/kernel_oracle.csv with the given case name.
inline std::vector<CsvRow> oracle_rows(const std::string& kind) {
    std::vector<CsvRow> out;
    for (const CsvRow& r : read_csv(fixture_directory() + "/kernel_oracle.csv"))
        if (r.at("case") == kind) out.push_back(r);
    REQUIRE_FALSE(out.empty());
    return out;
}

inline double num(const CsvRow& r, const char* key) { return parse_double(r.at(key)); }
inline cplx cnum(const CsvRow& r, const std::string& stem) {
    return {num(r, (stem + "_re").c_str()), num(r, (stem + "_im").c_str())};
}

}  // namespace hyperball::test
