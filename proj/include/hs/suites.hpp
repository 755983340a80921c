#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "hs/bounds.hpp"
#include "hs/random_maps.hpp"
#include "hs/report.hpp"

namespace hs {

enum class Suite {
    All,
    Classical,
    Heinz,
    Gradient,
    Modulus,
    Contraction,
    Qc,
    AnalyticBall,
    Strip,
    Counterexample,
    Sharpness,
};

enum class OutputFormat { Json, Csv };

const char* suite_name(Suite s);
Suite suite_from_name(const std::string& name);

struct RunConfig {
    Suite suite = Suite::All;
    std::uint64_t seed = 42;
    int trials = 50;
    GridSpec grid;
    std::map<std::string, double> tolerances;  // inequality, identity, classical, heinz
    std::string out_path;
    OutputFormat format = OutputFormat::Json;

    double tol(const std::string& name, double fallback) const;
};

struct CheckStat {
    long executed = 0;
    long failures = 0;
    long skipped = 0;  // singular / degenerate points
    double worst_ratio = 0.0;
};

struct SuiteSummary {
    std::map<std::string, CheckStat> stats;  // keyed by check name (sorted)
    long total_checks = 0;
    long total_failures = 0;
    std::vector<std::string> suites_run;
    std::vector<BoundReport> records;   // per-trial worst reports, in trial order
    std::vector<BoundReport> failures;  // every failing report
};

/// Executes the selected checkers over seeded inputs and grids. Deterministic
/// in (config, seed) independent of thread count; failures are collected, not
/// fatal. Does not write files; see write_summary_*.
SuiteSummary run_suite(const RunConfig& config);

void write_summary_json(std::ostream& out, const RunConfig& config,
                        const SuiteSummary& summary);
void write_summary_csv(std::ostream& out, const SuiteSummary& summary);

/// Ratio field of a named check ("gradient", "modulus" or "heinz") for the
/// given map; writes the r,theta,ratio CSV when out_path is non-empty.
RatioField emit_ratio_field(const std::string& check, const HarmonicMap& map,
                            const GridSpec& grid, const std::string& out_path);

/// Per-trial sub-seed derivation (splitmix64 of base ^ stream ^ index).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

}  // namespace hs
