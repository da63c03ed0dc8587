#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gre/report.hpp"

namespace gre {

/// The verification suites exposed by the CLI.
enum class Suite {
    CsumIdentities,
    TransformsRoundtrip,
    Theorem1,
    Theorem2,
    Theorem3,
    Theorem4,
    Corollary1,
    Corollary2,
    Counterexample,
    ZeroExpansions,
    Remark7,
    Remark8,
};

const char* suite_name(Suite suite);
std::optional<Suite> suite_from_name(std::string_view name);
const std::vector<Suite>& all_suites();

enum class ReportFormat { Json, Csv };

struct SuiteConfig {
    Suite suite = Suite::CsumIdentities;
    int64_t sieve_limit = 1'000'000;
    double eta = 1.5;
    int64_t p0 = 5;
    uint64_t seed = 1;
    std::string output_path; // empty writes to stdout
    ReportFormat format = ReportFormat::Json;
};

/// Runs one suite. Deterministic given the config: repeated runs serialize
/// byte-identically. Invalid configuration throws std::invalid_argument;
/// exhausted search budgets throw resource_error.
Report run_suite(const SuiteConfig& config);

/// Serializes a suite report. JSON is the full report; CSV projects the
/// suite's primary statistics table (the report's own rows, or the first
/// part's when the top level has none).
void write_report(const Report& report, ReportFormat format, std::ostream& os);

} // namespace gre
