// Standalone acceptance gate: nine timed criteria covering the library's
// pinned behavior, one PASS/FAIL line each. Exits nonzero when any criterion
// fails its predicate or its time budget.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gre/correlation.hpp"
#include "gre/expansion.hpp"
#include "gre/factor_table.hpp"
#include "gre/ramanujan_sum.hpp"
#include "gre/suites.hpp"

namespace {

using gre::cdouble;
using gre::FactorTable;
using gre::RamanujanCoefficients;
using gre::Report;

struct Criterion {
    int number;
    std::string description;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool criterion_sum_methods(std::string& detail) {
    const FactorTable t(1024);
    for (int64_t q = 1; q <= 256; ++q) {
        for (int64_t a = 1; a <= 256; ++a) {
            const int64_t kluyver = gre::cq_kluyver(q, a, t);
            const int64_t holder = gre::cq_holder(q, a, t);
            const double direct = gre::cq_direct(q, a);
            if (holder != kluyver ||
                std::abs(direct - static_cast<double>(kluyver)) > 1e-6) {
                detail = "method disagreement at q=" + std::to_string(q) +
                         " a=" + std::to_string(a);
                return false;
            }
            if (std::abs(kluyver) > std::gcd(q, a)) {
                detail = "gcd bound violated at q=" + std::to_string(q) +
                         " a=" + std::to_string(a);
                return false;
            }
        }
    }
    for (int64_t q1 = 1; q1 <= 200; ++q1) {
        for (int64_t q2 = q1; q2 <= 200; ++q2) {
            if (q1 * q2 > 200 || std::gcd(q1, q2) != 1) continue;
            for (int64_t a = 1; a <= 60; ++a) {
                if (gre::cq_kluyver(q1 * q2, a, t) !=
                    gre::cq_kluyver(q1, a, t) * gre::cq_kluyver(q2, a, t)) {
                    detail = "multiplicativity fails at q1=" + std::to_string(q1) +
                             " q2=" + std::to_string(q2) + " a=" + std::to_string(a);
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_counterexample_identity(std::string& detail) {
    const FactorTable t(10000);
    for (int64_t p0 : {3, 5, 7, 11, 13}) {
        const auto ce = gre::build_counterexample_one(p0, t);
        const Report report = gre::verify_counterexample_identity(ce, 4 * p0, t);
        if (report.verdict != gre::Verdict::Pass) {
            detail = "identity report failed for p0=" + std::to_string(p0);
            return false;
        }
        const auto spec = gre::counterexample_spec(ce, t);
        if (gre::correlation(spec, 1) != cdouble{static_cast<double>(p0 - 1), 0.0} ||
            gre::correlation(spec, 2) != cdouble{-1.0, 0.0}) {
            detail = "spot values C(N,1), C(N,2) wrong for p0=" + std::to_string(p0);
            return false;
        }
    }
    return true;
}

bool criterion_reef_gap(std::string& detail) {
    const FactorTable t(10000);
    for (int64_t p0 : {3, 5, 7, 11, 13}) {
        const Report report = gre::reef_gap_report(gre::build_counterexample_one(p0, t), 4 * p0, t);
        if (report.verdict != gre::Verdict::Pass) {
            detail = "REEF gap report failed for p0=" + std::to_string(p0);
            return false;
        }
        for (const gre::Json& row : report.statistics.items()) {
            const int64_t a = row.find("a")->as_int();
            if (row.find("equal")->as_bool() != (a % p0 == 0)) {
                detail = "equality pattern wrong at p0=" + std::to_string(p0) +
                         " a=" + std::to_string(a);
                return false;
            }
        }
    }
    return true;
}

bool criterion_theorem2_suite(std::string& detail) {
    gre::SuiteConfig config;
    config.suite = gre::Suite::Theorem2;
    config.sieve_limit = 2000;
    config.seed = 1;
    const Report report = gre::run_suite(config);
    if (report.verdict != gre::Verdict::Pass) {
        detail = "theorem2 suite verdict: " + std::string(gre::to_string(report.verdict));
        return false;
    }
    int64_t trials = 0;
    for (const gre::Json& row : report.statistics.items()) {
        ++trials;
        if (row.find("max_wintner_residual")->as_double() >= 1e-9 ||
            row.find("max_carmichael_residual")->as_double() >= 1e-9) {
            detail = "residual above 1e-9 in trial " + std::to_string(trials);
            return false;
        }
    }
    if (trials != 20) {
        detail = "expected 20 trials, saw " + std::to_string(trials);
        return false;
    }
    return true;
}

bool criterion_theorem4(std::string& detail) {
    const FactorTable t(100000);
    const auto ce = gre::build_counterexample_one(5, t);
    const Report report = gre::theorem4_verifier(gre::counterexample_correlation(ce, t), 25, t);
    if (report.verdict != gre::Verdict::Pass) {
        detail = "theorem4 verifier did not pass";
        return false;
    }
    int64_t rows = 0;
    for (const gre::Json& row : report.statistics.items()) {
        ++rows;
        const double expected = row.find("class")->as_string() == "witness" ? -5.0 : 0.0;
        if (row.find("fprime_re")->as_double() != expected ||
            row.find("fprime_im")->as_double() != 0.0) {
            detail = "transform value not exactly " + std::to_string(expected) + " at p=" +
                     std::to_string(row.find("p")->as_int());
            return false;
        }
    }
    if (rows != 50) {
        detail = "expected 25 primes per class, saw " + std::to_string(rows) + " rows";
        return false;
    }
    return true;
}

bool criterion_decay_verifiers(std::string& detail) {
    const FactorTable t(1'000'000);
    const auto G = RamanujanCoefficients::power_log_decay(1.5);
    constexpr int64_t kDValues[] = {10, 100, 1000, 10000};
    const Report t1 = gre::verify_theorem1(G, 1.5, kDValues, 20000, t);
    if (t1.verdict != gre::Verdict::Pass) {
        detail = "theorem1 envelope check failed";
        return false;
    }
    for (int64_t a0 : {1, 2, 6}) {
        const Report c1 = gre::verify_corollary1(G, 1.5, a0, 1200, 100000, t);
        if (c1.verdict != gre::Verdict::Pass) {
            detail = "corollary1 failed at a0=" + std::to_string(a0);
            return false;
        }
    }
    return true;
}

bool criterion_roundtrip_suite(std::string& detail) {
    gre::SuiteConfig config;
    config.suite = gre::Suite::TransformsRoundtrip;
    config.sieve_limit = 2000;
    config.seed = 1;
    const Report report = gre::run_suite(config);
    if (report.verdict != gre::Verdict::Pass) {
        detail = "roundtrip suite verdict: " + std::string(gre::to_string(report.verdict));
        return false;
    }
    int64_t integer_trials = 0;
    for (const gre::Json& row : report.statistics.items()) {
        if (row.find("mode")->as_string() != "integer") continue;
        ++integer_trials;
        if (row.find("max_abs_error")->as_double() != 0.0) {
            detail = "integer roundtrip not exact in one trial";
            return false;
        }
    }
    if (integer_trials != 100) {
        detail = "expected 100 integer trials, saw " + std::to_string(integer_trials);
        return false;
    }
    return true;
}

bool criterion_zero_expansions(std::string& detail) {
    gre::SuiteConfig config;
    config.suite = gre::Suite::ZeroExpansions;
    config.sieve_limit = 1'000'000;
    const Report report = gre::run_suite(config);
    if (report.verdict != gre::Verdict::TrendOnly) {
        std::ostringstream os;
        os << "verdict " << gre::to_string(report.verdict);
        for (const std::string& note : report.notes) os << "; " << note;
        detail = os.str();
        return false;
    }
    return true;
}

bool criterion_remark7_suite(std::string& detail) {
    gre::SuiteConfig config;
    config.suite = gre::Suite::Remark7;
    config.sieve_limit = 10000;
    const Report report = gre::run_suite(config);
    if (!report.passed()) {
        detail = "remark7 suite verdict: " + std::string(gre::to_string(report.verdict));
        return false;
    }
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1,
         "cq_direct/cq_holder/cq_kluyver agree on the 256x256 grid, obey the gcd "
         "bound, and are multiplicative for coprime moduli up to 200",
         5.0, criterion_sum_methods},
        {2,
         "counterexample correlation equals c_{p0}(a-1) exactly for p0 in "
         "{3,5,7,11,13}, a <= 4 p0, with spot values phi(p0) and mu(p0)",
         1.0, criterion_counterexample_identity},
        {3,
         "REEF gap report holds for p0 in {3,5,7,11,13}: |LHS| >= 1, RHS = "
         "1/phi(p0) off the zero class, equality exactly on it",
         1.0, criterion_reef_gap},
        {4,
         "theorem2 suite: 20 seeded finite expansions recovered with Wintner and "
         "Carmichael residuals below 1e-9",
         10.0, criterion_theorem2_suite},
        {5,
         "theorem4 verifier at p0=5 with 25 primes per class: transform exactly "
         "-5 on the witness class and 0 on the unit class",
         1.0, criterion_theorem4},
        {6,
         "theorem1 envelope over d in {10,100,1000,10000} and corollary1 at a0 in "
         "{1,2,6} for the eta=1.5 power-log family",
         30.0, criterion_decay_verifiers},
        {7, "transforms-roundtrip suite: 100 seeded integer roundtrips exact to the bit", 5.0,
         criterion_roundtrip_suite},
        {8,
         "zero-expansions suite: null-expansion errors decrease strictly across "
         "checkpoints 1e3..1e6",
         60.0, criterion_zero_expansions},
        {9,
         "remark7 suite: Wintner statistic over q <= 500 stays inside the "
         "envelope fitted on q <= 100",
         30.0, criterion_remark7_suite},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > criterion.budget_seconds) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += "time budget exceeded";
        }
        std::printf("%s criterion %d: %s [%.2fs <= %.0fs]%s%s\n", ok ? "PASS" : "FAIL",
                    criterion.number, criterion.description.c_str(), elapsed,
                    criterion.budget_seconds, detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
