#pragma once

#include "hodgeforge/complex.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hodgeforge::cli {

struct SelftestOptions {
    /// Case-insensitive substring matched against criterion ids.
    std::string filter;
    /// Replacement for the embedded icosahedron facet list.
    std::optional<std::vector<std::vector<VertexId>>> icosahedron;
};

struct CriterionResult {
    std::string id;
    bool passed = false;
    std::vector<std::string> details;  // one line per check, deterministic
};

std::vector<std::string> selftest_ids();
std::vector<CriterionResult> run_selftest(const SelftestOptions& options);

/// Writes the report; returns true when every selected criterion passed.
bool write_selftest_report(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace hodgeforge::cli
