#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gre/suites.hpp"

namespace {

using gre::Report;
using gre::Suite;
using gre::SuiteConfig;

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

std::string dump_suite(const SuiteConfig& config, gre::ReportFormat format) {
    const Report report = gre::run_suite(config);
    std::ostringstream os;
    gre::write_report(report, format, os);
    return os.str();
}

TEST(SuiteNames, RoundTripAllTwelve) {
    const auto& suites = gre::all_suites();
    ASSERT_EQ(suites.size(), 12u);
    const char* expected[] = {
        "csum-identities", "transforms-roundtrip", "theorem1", "theorem2",
        "theorem3",        "theorem4",             "corollary1", "corollary2",
        "counterexample",  "zero-expansions",      "remark7",  "remark8",
    };
    for (size_t i = 0; i < suites.size(); ++i) {
        EXPECT_STREQ(gre::suite_name(suites[i]), expected[i]);
        const auto back = gre::suite_from_name(expected[i]);
        ASSERT_TRUE(back.has_value()) << expected[i];
        EXPECT_EQ(*back, suites[i]);
    }
    EXPECT_FALSE(gre::suite_from_name("theorem9").has_value());
    EXPECT_FALSE(gre::suite_from_name("").has_value());
    EXPECT_FALSE(gre::suite_from_name("Theorem1").has_value());
}

TEST(SuiteConfig, ValidationRejectsBadInputs) {
    SuiteConfig config;
    config.suite = Suite::CsumIdentities;
    config.sieve_limit = 255; // below this suite's minimum of 256
    EXPECT_THROW(gre::run_suite(config), std::invalid_argument);
    config.sieve_limit = 200'000'000; // above the supported sieve maximum
    EXPECT_THROW(gre::run_suite(config), std::invalid_argument);

    SuiteConfig eta_config;
    eta_config.suite = Suite::Theorem1;
    eta_config.sieve_limit = 20000;
    eta_config.eta = 0.0;
    EXPECT_THROW(gre::run_suite(eta_config), std::invalid_argument);
    eta_config.eta = -1.5;
    EXPECT_THROW(gre::run_suite(eta_config), std::invalid_argument);

    SuiteConfig p0_config;
    p0_config.suite = Suite::Counterexample;
    p0_config.sieve_limit = 1000;
    p0_config.p0 = 2000; // not below the sieve limit
    EXPECT_THROW(gre::run_suite(p0_config), std::invalid_argument);
    p0_config.p0 = 4; // not prime
    EXPECT_THROW(gre::run_suite(p0_config), std::invalid_argument);
    p0_config.p0 = 2; // not odd
    EXPECT_THROW(gre::run_suite(p0_config), std::invalid_argument);
}

TEST(CsumSuite, PassesAtTheDocumentedSmallSieve) {
    SuiteConfig config;
    config.suite = Suite::CsumIdentities;
    config.sieve_limit = 300;
    const Report report = gre::run_suite(config);
    EXPECT_EQ(report.verdict, gre::Verdict::Pass);
    EXPECT_TRUE(report.passed());
    // One row per identity check, each with zero failures.
    ASSERT_EQ(report.statistics.size(), 8u);
    for (const gre::Json& row : report.statistics.items()) {
        EXPECT_EQ(row.find("failures")->as_int(), 0)
            << row.find("check")->as_string();
        EXPECT_GT(row.find("cases")->as_int(), 0);
        EXPECT_TRUE(row.find("ok")->as_bool());
    }
    // The config echo makes reports self-describing.
    const gre::Json* echoed = report.hypothesis.find("config");
    ASSERT_NE(echoed, nullptr);
    EXPECT_EQ(echoed->find("suite")->as_string(), "csum-identities");
    EXPECT_EQ(echoed->find("sieve_limit")->as_int(), 300);
}

TEST(CounterexampleSuite, PartOrderAndCsvProjection) {
    SuiteConfig config;
    config.suite = Suite::Counterexample;
    config.sieve_limit = 1000;
    config.p0 = 5;
    const Report report = gre::run_suite(config);
    EXPECT_EQ(report.claim, "counterexample");
    EXPECT_EQ(report.verdict, gre::Verdict::Pass);
    ASSERT_EQ(report.parts.size(), 3u);
    EXPECT_EQ(report.parts[0].claim, "reef-gap");
    EXPECT_EQ(report.parts[1].claim, "counterexample-identity");
    EXPECT_EQ(report.parts[2].claim, "correlation-periodicity");
    EXPECT_EQ(report.hypothesis.find("n0")->as_int(), 19);

    // The top level has no rows of its own, so the CSV projection picks the
    // first part with statistics: the REEF gap table.
    std::ostringstream os;
    gre::write_report(report, gre::ReportFormat::Csv, os);
    const auto lines = lines_of(os.str());
    ASSERT_EQ(lines.size(), 21u); // header + a = 1..20
    EXPECT_EQ(lines[0], "a,lhs_re,lhs_im,rhs_re,rhs_im,equal");
    EXPECT_EQ(lines[1], "1,4,0,0.25,0,0");
    EXPECT_EQ(lines[5], "5,-1,0,-1,0,1");
}

TEST(Theorem1Suite, CsvProjectionUsesItsOwnRows) {
    SuiteConfig config;
    config.suite = Suite::Theorem1;
    config.sieve_limit = 20000;
    const auto lines = lines_of(dump_suite(config, gre::ReportFormat::Csv));
    ASSERT_EQ(lines.size(), 5u); // header + d in {10, 100, 1000, 10000}
    EXPECT_EQ(lines[0], "d,fprime_re,fprime_im,statistic,tail_bound,within_envelope");
    EXPECT_EQ(lines[1].substr(0, 3), "10,");
    EXPECT_EQ(lines[4].substr(0, 6), "10000,");
}

TEST(ZeroExpansionsSuite, SingleCheckpointIsTrendOnly) {
    SuiteConfig config;
    config.suite = Suite::ZeroExpansions;
    config.sieve_limit = 1000;
    const Report report = gre::run_suite(config);
    // With one checkpoint there are no consecutive pairs to compare, so the
    // monotone-decrease claim holds vacuously; the verdict stays trend-only
    // because partial sums cannot prove convergence.
    EXPECT_EQ(report.verdict, gre::Verdict::TrendOnly);
    EXPECT_TRUE(report.passed());
    ASSERT_EQ(report.statistics.size(), 8u);
    const gre::Json& first = report.statistics.items().front();
    EXPECT_EQ(first.find("family")->as_string(), "ramanujan-r0");
    EXPECT_NE(first.find("err_1"), nullptr);
    EXPECT_EQ(first.find("err_2"), nullptr);
    EXPECT_TRUE(first.find("decreasing")->as_bool());
}

TEST(ZeroExpansionsSuite, HonestFailureAtLargerCheckpoints) {
    SuiteConfig config;
    config.suite = Suite::ZeroExpansions;
    config.sieve_limit = 100000;
    const Report report = gre::run_suite(config);
    // The measured partial sums do not shrink monotonically for every
    // family/argument pair; the suite reports that honestly.
    EXPECT_EQ(report.verdict, gre::Verdict::Fail);
    EXPECT_FALSE(report.passed());
    bool saw_hardy_note = false;
    for (const std::string& note : report.notes) {
        if (note.find("hardy-h0 at a=2") != std::string::npos) saw_hardy_note = true;
    }
    EXPECT_TRUE(saw_hardy_note);

    bool saw_nondecreasing_row = false;
    for (const gre::Json& row : report.statistics.items()) {
        if (!row.find("decreasing")->as_bool()) saw_nondecreasing_row = true;
    }
    EXPECT_TRUE(saw_nondecreasing_row);
}

TEST(Remark7Suite, TrendOnlyWithFrozenEnvelope) {
    SuiteConfig config;
    config.suite = Suite::Remark7;
    config.sieve_limit = 10000;
    const Report report = gre::run_suite(config);
    EXPECT_EQ(report.verdict, gre::Verdict::TrendOnly);
    EXPECT_TRUE(report.passed());
    EXPECT_NEAR(report.hypothesis.find("fitted_constant")->as_double(), 0.654782, 1e-6);
    ASSERT_EQ(report.statistics.size(), 499u); // q = 2..500
    for (const gre::Json& row : report.statistics.items()) {
        EXPECT_TRUE(row.find("within_envelope")->as_bool());
        const int64_t q = row.find("q")->as_int();
        if (q == 100) EXPECT_NEAR(row.find("statistic")->as_double(), 0.038271, 1e-6);
        if (q == 500) EXPECT_NEAR(row.find("statistic")->as_double(), 0.015942, 1e-6);
    }
}

TEST(Suites, DeterministicSerialization) {
    SuiteConfig csum;
    csum.suite = Suite::CsumIdentities;
    csum.sieve_limit = 300;
    EXPECT_EQ(dump_suite(csum, gre::ReportFormat::Json), dump_suite(csum, gre::ReportFormat::Json));

    // Seeded randomness is still reproducible end to end.
    SuiteConfig t2;
    t2.suite = Suite::Theorem2;
    t2.sieve_limit = 2000;
    t2.seed = 7;
    const std::string first = dump_suite(t2, gre::ReportFormat::Json);
    EXPECT_EQ(first, dump_suite(t2, gre::ReportFormat::Json));
    EXPECT_NE(first.find("\"seed\": 7"), std::string::npos);
}

TEST(Suites, JsonReportShape) {
    SuiteConfig config;
    config.suite = Suite::Counterexample;
    config.sieve_limit = 1000;
    const std::string text = dump_suite(config, gre::ReportFormat::Json);
    EXPECT_EQ(text.back(), '\n');
    EXPECT_NE(text.find("\"claim\": \"counterexample\""), std::string::npos);
    EXPECT_NE(text.find("\"verdict\": \"pass\""), std::string::npos);
    EXPECT_NE(text.find("\"claim\": \"reef-gap\""), std::string::npos);
}

} // namespace
