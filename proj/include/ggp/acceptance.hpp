#pragma once

#include <iosfwd>
#include <string>

namespace ggp {

struct AcceptanceOptions {
    std::string golden_dir; // directory with the table golden files
    std::string cli_path;   // ggp executable for byte-identical table checks
};

// Runs every acceptance criterion, printing one PASS/FAIL line per
// criterion; returns true when all pass.
bool run_acceptance(std::ostream& out, const AcceptanceOptions& opts);

} // namespace ggp
