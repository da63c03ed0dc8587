#include "gre/suites.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <utility>

#include "gre/arithmetic_function.hpp"
#include "gre/coefficients.hpp"
#include "gre/correlation.hpp"
#include "gre/eratosthenes.hpp"
#include "gre/errors.hpp"
#include "gre/expansion.hpp"
#include "gre/factor_table.hpp"
#include "gre/ramanujan_sum.hpp"

namespace gre {
namespace {

struct SuiteName {
    Suite suite;
    const char* name;
};

constexpr SuiteName kSuiteNames[] = {
    {Suite::CsumIdentities, "csum-identities"},
    {Suite::TransformsRoundtrip, "transforms-roundtrip"},
    {Suite::Theorem1, "theorem1"},
    {Suite::Theorem2, "theorem2"},
    {Suite::Theorem3, "theorem3"},
    {Suite::Theorem4, "theorem4"},
    {Suite::Corollary1, "corollary1"},
    {Suite::Corollary2, "corollary2"},
    {Suite::Counterexample, "counterexample"},
    {Suite::ZeroExpansions, "zero-expansions"},
    {Suite::Remark7, "remark7"},
    {Suite::Remark8, "remark8"},
};

// Deterministic generator with a platform-stable mapping to doubles.
struct Rng {
    explicit Rng(uint64_t seed) : gen(seed) {}

    uint64_t bits() { return gen(); }

    bool coin() { return (bits() & 1u) != 0; }

    int64_t uniform_int(int64_t lo, int64_t hi) {
        const auto span = static_cast<uint64_t>(hi - lo + 1);
        return lo + static_cast<int64_t>(bits() % span);
    }

    double uniform(double lo, double hi) {
        const double unit = static_cast<double>(bits() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }

    std::mt19937_64 gen;
};

Json config_json(const SuiteConfig& config) {
    Json j = Json::object();
    j["suite"] = suite_name(config.suite);
    j["sieve_limit"] = config.sieve_limit;
    j["eta"] = config.eta;
    j["p0"] = config.p0;
    j["seed"] = static_cast<int64_t>(config.seed);
    return j;
}

int64_t min_sieve_limit(Suite suite) {
    switch (suite) {
    case Suite::CsumIdentities: return 256;
    case Suite::TransformsRoundtrip: return 2000;
    case Suite::Theorem1: return 20000;
    case Suite::Theorem2: return 256;
    case Suite::Theorem3: return 10000;
    case Suite::Theorem4: return 1000;
    case Suite::Corollary1: return 100000;
    case Suite::Corollary2: return 10000;
    case Suite::Counterexample: return 1000;
    case Suite::ZeroExpansions: return 1000;
    case Suite::Remark7: return 8192;
    case Suite::Remark8: return 10000;
    }
    return 1000;
}

bool uses_eta(Suite suite) {
    switch (suite) {
    case Suite::Theorem1:
    case Suite::Theorem3:
    case Suite::Corollary1:
    case Suite::Corollary2:
    case Suite::Remark7:
    case Suite::Remark8:
        return true;
    default:
        return false;
    }
}

bool uses_p0(Suite suite) {
    return suite == Suite::Theorem4 || suite == Suite::Counterexample;
}

void validate(const SuiteConfig& config) {
    const int64_t min_limit = min_sieve_limit(config.suite);
    if (config.sieve_limit < min_limit) {
        throw std::invalid_argument("sieve limit too small for suite " +
                                    std::string(suite_name(config.suite)) + ": need at least " +
                                    std::to_string(min_limit));
    }
    if (config.sieve_limit > FactorTable::kMaxSieveLimit) {
        throw std::invalid_argument("sieve limit exceeds the supported maximum");
    }
    if (uses_eta(config.suite) && !(config.eta > 0.0)) {
        throw std::invalid_argument("eta must be positive");
    }
    if (uses_p0(config.suite)) {
        if (config.p0 <= 2 || config.p0 >= config.sieve_limit) {
            throw std::invalid_argument("p0 must be an odd prime below the sieve limit");
        }
    }
}

// ---------------------------------------------------------------------------
// csum-identities
// ---------------------------------------------------------------------------

Report suite_csum_identities(const SuiteConfig& config, const FactorTable& table) {
    Report report;
    report.claim = "csum-identities";
    report.hypothesis["q_max"] = 256;
    report.hypothesis["a_max"] = 256;

    struct Check {
        std::string name;
        int64_t cases = 0;
        int64_t failures = 0;
    };
    std::vector<Check> checks;

    {
        Check agree{"triple-agreement"};
        Check gcd_bound{"gcd-bound"};
        for (int64_t q = 1; q <= 256; ++q) {
            for (int64_t a = 1; a <= 256; ++a) {
                const double direct = cq_direct(q, a);
                const int64_t holder = cq_holder(q, a, table);
                const int64_t kluyver = cq_kluyver(q, a, table);
                ++agree.cases;
                if (holder != kluyver ||
                    std::abs(direct - static_cast<double>(kluyver)) > 1e-6) {
                    ++agree.failures;
                }
                ++gcd_bound.cases;
                if (std::abs(kluyver) > std::gcd(q, a)) ++gcd_bound.failures;
            }
        }
        checks.push_back(agree);
        checks.push_back(gcd_bound);
    }

    {
        Check periodic{"periodicity"};
        for (int64_t q = 1; q <= 64; ++q) {
            for (int64_t a = 1; a <= 3 * q; ++a) {
                ++periodic.cases;
                if (cq_kluyver(q, a, table) != cq_kluyver(q, a + q, table)) ++periodic.failures;
            }
        }
        checks.push_back(periodic);
    }

    {
        Check dichotomy{"prime-dichotomy"};
        for (int64_t p : table.primes()) {
            if (p > 256) break;
            for (int64_t a = 1; a <= 3 * p; ++a) {
                ++dichotomy.cases;
                const int64_t expected = (a % p == 0) ? p - 1 : -1;
                if (cq_kluyver(p, a, table) != expected) ++dichotomy.failures;
            }
        }
        checks.push_back(dichotomy);
    }

    {
        Check mult{"multiplicativity"};
        for (int64_t q1 = 1; q1 <= 200; ++q1) {
            for (int64_t q2 = q1; q2 <= 200; ++q2) {
                if (q1 * q2 > 200 || std::gcd(q1, q2) != 1) continue;
                for (int64_t a = 1; a <= 60; ++a) {
                    ++mult.cases;
                    if (cq_kluyver(q1 * q2, a, table) !=
                        cq_kluyver(q1, a, table) * cq_kluyver(q2, a, table)) {
                        ++mult.failures;
                    }
                }
            }
        }
        checks.push_back(mult);
    }

    {
        Check ortho{"orthogonality"};
        std::vector<std::vector<int64_t>> cycle(31);
        for (int64_t q = 1; q <= 30; ++q) {
            cycle[static_cast<size_t>(q)].resize(static_cast<size_t>(q));
            for (int64_t r = 0; r < q; ++r) {
                cycle[static_cast<size_t>(q)][static_cast<size_t>(r)] =
                    cq_kluyver(q, r == 0 ? q : r, table);
            }
        }
        for (int64_t q = 1; q <= 30; ++q) {
            for (int64_t r = 1; r <= 30; ++r) {
                const int64_t period = std::lcm(q, r);
                int64_t sum = 0;
                for (int64_t a = 1; a <= period; ++a) {
                    sum += cycle[static_cast<size_t>(q)][static_cast<size_t>(a % q)] *
                           cycle[static_cast<size_t>(r)][static_cast<size_t>(a % r)];
                }
                const int64_t expected = (q == r) ? totient(q, table) * period : 0;
                ++ortho.cases;
                if (sum != expected) ++ortho.failures;
            }
        }
        checks.push_back(ortho);
    }

    {
        // Seeded spot checks beyond the dense grid.
        Check spot{"seeded-spot-agreement"};
        Rng rng(config.seed);
        const int64_t q_cap = std::min<int64_t>(4096, table.limit());
        for (int i = 0; i < 1000; ++i) {
            const int64_t q = rng.uniform_int(1, q_cap);
            const int64_t a = rng.uniform_int(1, 1'000'000);
            ++spot.cases;
            if (cq_holder(q, a, table) != cq_kluyver(q, a, table)) ++spot.failures;
        }
        checks.push_back(spot);
    }

    {
        Check build{"table-build-validation"};
        build.cases = 1;
        try {
            const RamanujanSumTable cq_table = build_cq_table(128, 128, table);
            for (int64_t q = 1; q <= 128 && build.failures == 0; ++q) {
                for (int64_t a = 1; a <= 128; ++a) {
                    if (cq_table.at(q, a) != cq_kluyver(q, a, table)) {
                        ++build.failures;
                        break;
                    }
                }
            }
        } catch (const consistency_error&) {
            ++build.failures;
        }
        checks.push_back(build);
    }

    bool all_ok = true;
    for (const Check& check : checks) {
        Json row = Json::object();
        row["check"] = check.name;
        row["cases"] = check.cases;
        row["failures"] = check.failures;
        row["ok"] = (check.failures == 0);
        report.statistics.push_back(std::move(row));
        if (check.failures != 0) {
            all_ok = false;
            report.notes.push_back(check.name + " failed on " + std::to_string(check.failures) +
                                   " of " + std::to_string(check.cases) + " cases");
        }
    }
    report.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    return report;
}

// ---------------------------------------------------------------------------
// transforms-roundtrip
// ---------------------------------------------------------------------------

Report suite_transforms_roundtrip(const SuiteConfig& config, const FactorTable& table) {
    Report report;
    report.claim = "transforms-roundtrip";
    constexpr int64_t kDomain = 2000;
    constexpr int kIntegerTrials = 100;
    report.hypothesis["domain_max"] = kDomain;
    report.hypothesis["integer_trials"] = kIntegerTrials;
    report.hypothesis["float_trials"] = 1;

    Rng rng(config.seed);
    bool all_ok = true;

    auto run_trial = [&](int trial, bool integer_valued) {
        auto values = std::make_shared<std::vector<cdouble>>(static_cast<size_t>(kDomain) + 1);
        for (int64_t a = 1; a <= kDomain; ++a) {
            cdouble v;
            if (integer_valued) {
                v = cdouble(static_cast<double>(rng.uniform_int(-50, 50)),
                            static_cast<double>(rng.uniform_int(-50, 50)));
            } else {
                v = cdouble(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            }
            (*values)[static_cast<size_t>(a)] = v;
        }
        ArithmeticFunctionView view;
        view.label = integer_valued ? "random-integer" : "random-float";
        view.evaluate = [values](int64_t a) { return (*values)[static_cast<size_t>(a)]; };

        const EratosthenesTable transform = eratosthenes_transform(view, kDomain, table);
        double max_error = 0.0;
        for (int64_t a = 1; a <= kDomain; ++a) {
            const cdouble back = inverse_eratosthenes(transform, a);
            max_error = std::max(max_error, std::abs(back - (*values)[static_cast<size_t>(a)]));
        }
        const bool ok = integer_valued ? (max_error == 0.0) : (max_error <= 1e-9);
        Json row = Json::object();
        row["trial"] = trial;
        row["mode"] = integer_valued ? "integer" : "float";
        row["max_abs_error"] = max_error;
        row["ok"] = ok;
        report.statistics.push_back(std::move(row));
        if (!ok) {
            all_ok = false;
            report.notes.push_back("roundtrip mismatch in trial " + std::to_string(trial));
        }
    };

    for (int trial = 0; trial < kIntegerTrials; ++trial) run_trial(trial, true);
    run_trial(kIntegerTrials, false);

    report.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    return report;
}

// ---------------------------------------------------------------------------
// theorem2: random finite expansions recovered exactly by both transforms
// ---------------------------------------------------------------------------

Report suite_theorem2(const SuiteConfig& config, const FactorTable& table) {
    Report report;
    report.claim = "theorem2";
    constexpr int kTrials = 20;
    constexpr int64_t kModulusMax = 12;
    report.hypothesis["trials"] = kTrials;
    report.hypothesis["modulus_max"] = kModulusMax;
    report.hypothesis["tolerance"] = 1e-9;

    // Ramanujan sum cycles for every modulus in play.
    std::vector<std::vector<int64_t>> cycle(static_cast<size_t>(kModulusMax) + 1);
    for (int64_t q = 1; q <= kModulusMax; ++q) {
        cycle[static_cast<size_t>(q)].resize(static_cast<size_t>(q));
        for (int64_t r = 0; r < q; ++r) {
            cycle[static_cast<size_t>(q)][static_cast<size_t>(r)] =
                cq_kluyver(q, r == 0 ? q : r, table);
        }
    }

    Rng rng(config.seed);
    bool all_ok = true;

    for (int trial = 0; trial < kTrials; ++trial) {
        std::vector<int64_t> support;
        std::vector<double> weight(static_cast<size_t>(kModulusMax) + 1, 0.0);
        for (int64_t q = 1; q <= kModulusMax; ++q) {
            if (rng.coin()) support.push_back(q);
        }
        if (support.empty()) support.push_back(rng.uniform_int(1, kModulusMax));
        for (int64_t q : support) weight[static_cast<size_t>(q)] = rng.uniform(-5.0, 5.0);

        int64_t period = 1;
        for (int64_t q : support) period = std::lcm(period, q);

        // Tabulate one period of F(a) = sum_q weight(q) c_q(a).
        auto f_values = std::make_shared<std::vector<double>>(static_cast<size_t>(period));
        for (int64_t a = 1; a <= period; ++a) {
            double sum = 0.0;
            for (int64_t q : support) {
                sum += weight[static_cast<size_t>(q)] *
                       static_cast<double>(cycle[static_cast<size_t>(q)][static_cast<size_t>(a % q)]);
            }
            (*f_values)[static_cast<size_t>((a - 1) % period)] = sum;
        }
        ArithmeticFunctionView view;
        view.label = "random-even-function";
        view.period_hint = period;
        view.evaluate = [f_values, period](int64_t a) {
            return cdouble((*f_values)[static_cast<size_t>((a - 1) % period)], 0.0);
        };

        const int64_t d_max = 64;
        const EratosthenesTable transform = eratosthenes_transform(view, d_max, table);

        double max_win_residual = 0.0;
        double max_car_residual = 0.0;
        bool carmichael_exact = true;
        for (int64_t q = 1; q <= kModulusMax; ++q) {
            const double expected = weight[static_cast<size_t>(q)];
            const CoefficientEstimate win = wintner_coefficient(transform, q);
            max_win_residual = std::max(max_win_residual,
                                        std::abs(win.value - cdouble(expected, 0.0)));
            const CoefficientEstimate car = carmichael_coefficient(view, q, {}, table);
            max_car_residual = std::max(max_car_residual,
                                        std::abs(car.value - cdouble(expected, 0.0)));
            if (!car.exact) carmichael_exact = false;
        }

        const bool ok = max_win_residual <= 1e-9 && max_car_residual <= 1e-9 && carmichael_exact;
        Json row = Json::object();
        row["trial"] = trial;
        row["support_size"] = static_cast<int64_t>(support.size());
        row["period"] = period;
        row["max_wintner_residual"] = max_win_residual;
        row["max_carmichael_residual"] = max_car_residual;
        row["carmichael_exact"] = carmichael_exact;
        row["ok"] = ok;
        report.statistics.push_back(std::move(row));
        if (!ok) {
            all_ok = false;
            report.notes.push_back("coefficient recovery failed in trial " + std::to_string(trial));
        }
    }

    report.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    return report;
}

// ---------------------------------------------------------------------------
// theorem4 and its companion prime-class table
// ---------------------------------------------------------------------------

Report prime_class_table_report(const CounterexampleOne& witness, const FactorTable& table) {
    Report report;
    report.claim = "correlation-eratosthenes-classes";
    report.hypothesis["p0"] = witness.p0;
    report.hypothesis["n0"] = witness.n0;

    const int64_t p0 = witness.p0;
    constexpr int64_t kPrimesPerClass = 10;
    const PrimesInAp unit_class = primes_in_ap(p0, 1, kPrimesPerClass, table.limit(), table);
    const PrimesInAp witness_class = primes_in_ap(p0, 2 % p0, kPrimesPerClass, table.limit(), table);
    if (unit_class.exhausted_bound || witness_class.exhausted_bound) {
        throw resource_error("sieve limit too small to collect prime classes");
    }
    report.hypothesis["primes_per_class"] = kPrimesPerClass;

    int64_t d_max = 1;
    for (int64_t p : unit_class.primes) d_max = std::max(d_max, p);
    for (int64_t p : witness_class.primes) d_max = std::max(d_max, p);

    const CorrelationSpec spec = counterexample_spec(witness, table);
    const EratosthenesTable transform = correlation_eratosthenes(spec, d_max, table);

    // F(a) = c_{p0}(a - 1), so F'(p) = F(p) - F(1) = c_{p0}(p - 1) - phi(p0).
    bool all_ok = true;
    auto emit = [&](const char* klass, int64_t p, double expected) {
        const cdouble value = transform.at(p);
        const bool ok = std::abs(value - cdouble(expected, 0.0)) <= 1e-9;
        Json row = Json::object();
        row["class"] = klass;
        row["p"] = p;
        row["fprime_re"] = value.real();
        row["fprime_im"] = value.imag();
        row["expected"] = expected;
        row["ok"] = ok;
        report.statistics.push_back(std::move(row));
        if (!ok) all_ok = false;
    };
    const double phi_p0 = static_cast<double>(totient(p0, table));
    for (int64_t p : unit_class.primes) emit("unit", p, 0.0);
    for (int64_t p : witness_class.primes) {
        const double expected =
            static_cast<double>(cq_kluyver(p0, reduce_into_period(p - 1, p0), table)) - phi_p0;
        emit("witness", p, expected);
    }

    report.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    if (!all_ok) report.notes.push_back("transform values disagree with the periodic model");
    return report;
}

Report suite_theorem4(const SuiteConfig& config, const FactorTable& table) {
    const CounterexampleOne witness = build_counterexample_one(config.p0, table);
    const PeriodicFunction correlation_values = counterexample_correlation(witness, table);

    Report report;
    report.claim = "theorem4";
    report.hypothesis["p0"] = config.p0;
    report.hypothesis["n0"] = witness.n0;
    report.parts.push_back(theorem4_verifier(correlation_values, 25, table));
    report.parts.push_back(prime_class_table_report(witness, table));

    bool all_ok = true;
    for (const Report& part : report.parts) {
        if (!part.passed()) all_ok = false;
    }
    report.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    return report;
}

// ---------------------------------------------------------------------------
// corollary1: wrap the verifier for several base points
// ---------------------------------------------------------------------------

Report suite_corollary1(const SuiteConfig& config, const FactorTable& table) {
    Report report;
    report.claim = "corollary1";
    const RamanujanCoefficients coefficients = RamanujanCoefficients::power_log_decay(config.eta);
    constexpr int64_t kPrimeCount = 1200;
    constexpr int64_t kEvaluationBound = 100000;
    report.hypothesis["family"] = "power-log-decay";
    report.hypothesis["eta"] = config.eta;
    report.hypothesis["prime_count"] = kPrimeCount;
    report.hypothesis["evaluation_bound"] = kEvaluationBound;

    constexpr int64_t kBasePoints[] = {1, 2, 6};
    bool all_ok = true;
    for (int64_t a0 : kBasePoints) {
        Report part = verify_corollary1(coefficients, config.eta, a0, kPrimeCount,
                                        kEvaluationBound, table);
        double max_statistic = 0.0;
        int64_t worst_p = 0;
        for (const Json& prime_row : part.statistics.items()) {
            const double stat = prime_row.find("statistic")->as_double();
            if (stat > max_statistic) {
                max_statistic = stat;
                worst_p = prime_row.find("p")->as_int();
            }
        }
        Json row = Json::object();
        row["a0"] = a0;
        row["fitted_constant"] = part.hypothesis["fitted_constant"];
        row["max_statistic"] = max_statistic;
        row["worst_p"] = worst_p;
        row["passed"] = part.passed();
        report.statistics.push_back(std::move(row));
        if (!part.passed()) all_ok = false;
        report.parts.push_back(std::move(part));
    }
    report.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    return report;
}

// ---------------------------------------------------------------------------
// corollary2: uniqueness through the zero expansion
// ---------------------------------------------------------------------------

Report corollary2_null_recovery(const FactorTable& table) {
    Report report;
    report.claim = "null-expansion-recovery";
    report.hypothesis["q_max"] = 50;
    report.hypothesis["tolerance"] = 1e-9;

    // The identically zero function: period 1, value 0.
    const PeriodicFunction zero({0.0}, "zero");
    const ArithmeticFunctionView view = zero.view();

    double max_abs_f = 0.0;
    const ExpansionEvaluator evaluator(RamanujanCoefficients::table({}), 10000, table);
    constexpr int64_t kExpansionTick[] = {10000};
    for (int64_t a = 1; a <= 50; ++a) {
        max_abs_f = std::max(max_abs_f, std::abs(evaluator.at(a, kExpansionTick).value()));
    }
    report.hypothesis["max_abs_expansion"] = max_abs_f;

    const EratosthenesTable transform = eratosthenes_transform(view, 400, table);
    bool all_ok = max_abs_f <= 1e-12;
    for (int64_t q = 1; q <= 50; ++q) {
        const CoefficientEstimate win = wintner_coefficient(transform, q);
        const CoefficientEstimate car = carmichael_coefficient(view, q, {}, table);
        const bool ok = std::abs(win.value) <= 1e-9 && std::abs(car.value) <= 1e-9 &&
                        win.exact && car.exact;
        Json row = Json::object();
        row["q"] = q;
        row["wintner_re"] = win.value.real();
        row["wintner_im"] = win.value.imag();
        row["carmichael_re"] = car.value.real();
        row["carmichael_im"] = car.value.imag();
        row["ok"] = ok;
        report.statistics.push_back(std::move(row));
        if (!ok) all_ok = false;
    }
    report.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    return report;
}

Report corollary2_nonzero_contrapositive(double eta, const FactorTable& table) {
    Report report;
    report.claim = "nonzero-coefficients-nonzero-function";
    report.hypothesis["family"] = "power-log-decay";
    report.hypothesis["eta"] = eta;
    if (!(eta > 1.0)) {
        report.verdict = Verdict::HypothesisNotMet;
        report.notes.push_back("uniqueness needs eta above one; got a smaller decay exponent");
        return report;
    }
    const RamanujanCoefficients coefficients = RamanujanCoefficients::power_log_decay(eta);
    constexpr int64_t kTicks[] = {1000, 10000};
    const ExpansionEvaluation eval = evaluate_expansion(coefficients, 1, kTicks, table);
    const double abs_f1 = std::abs(eval.value());
    Json row = Json::object();
    row["a"] = 1;
    row["abs_f"] = abs_f1;
    row["ok"] = abs_f1 > 0.5;
    report.statistics.push_back(row);
    report.verdict = abs_f1 > 0.5 ? Verdict::Pass : Verdict::Fail;
    if (report.verdict == Verdict::Fail) {
        report.notes.push_back("expansion of a nonzero coefficient family evaluated near zero");
    }
    return report;
}

Report corollary2_r0_gate(double eta, const FactorTable& table) {
    Report report;
    report.claim = "r0-hypothesis-gate";
    constexpr int64_t kDValues[] = {10, 100};
    Report inner = verify_theorem1(RamanujanCoefficients::ramanujan_r0(), eta, kDValues,
                                   2000, table);
    const bool gated = inner.verdict == Verdict::HypothesisNotMet;
    report.parts.push_back(std::move(inner));
    report.verdict = gated ? Verdict::Pass : Verdict::Fail;
    report.notes.push_back(gated
                               ? "R0 is rejected by the decay gate, so uniqueness does not apply to it"
                               : "R0 unexpectedly satisfied the decay hypothesis");
    return report;
}

Report suite_corollary2(const SuiteConfig& config, const FactorTable& table) {
    Report report;
    report.claim = "corollary2";
    report.hypothesis["eta"] = config.eta;
    report.parts.push_back(corollary2_null_recovery(table));
    report.parts.push_back(corollary2_nonzero_contrapositive(config.eta, table));
    report.parts.push_back(corollary2_r0_gate(config.eta, table));

    bool all_ok = true;
    for (const Report& part : report.parts) {
        if (!part.passed()) all_ok = false;
    }
    report.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    return report;
}

// ---------------------------------------------------------------------------
// counterexample
// ---------------------------------------------------------------------------

Report correlation_periodicity_report(const CounterexampleOne& witness, const FactorTable& table) {
    Report report;
    report.claim = "correlation-periodicity";
    report.hypothesis["p0"] = witness.p0;
    report.hypothesis["a_max"] = 4 * witness.p0;
    const CorrelationSpec spec = counterexample_spec(witness, table);
    bool all_ok = true;
    for (int64_t a = 1; a <= 4 * witness.p0; ++a) {
        const cdouble lhs = correlation(spec, a);
        const cdouble rhs = correlation(spec, a + witness.p0);
        const bool ok = lhs == rhs;
        Json row = Json::object();
        row["a"] = a;
        row["ok"] = ok;
        report.statistics.push_back(std::move(row));
        if (!ok) all_ok = false;
    }
    report.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    return report;
}

Report suite_counterexample(const SuiteConfig& config, const FactorTable& table) {
    const CounterexampleOne witness = build_counterexample_one(config.p0, table);
    const int64_t a_max = 4 * witness.p0;

    Report report;
    report.claim = "counterexample";
    report.hypothesis["p0"] = witness.p0;
    report.hypothesis["n0"] = witness.n0;
    report.hypothesis["length"] = witness.length;
    report.parts.push_back(reef_gap_report(witness, a_max, table));
    report.parts.push_back(verify_counterexample_identity(witness, a_max, table));
    report.parts.push_back(correlation_periodicity_report(witness, table));

    bool all_ok = true;
    for (const Report& part : report.parts) {
        if (!part.passed()) all_ok = false;
    }
    report.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    return report;
}

// ---------------------------------------------------------------------------
// zero-expansions: partial sums of the three classical null expansions
// ---------------------------------------------------------------------------

Report suite_zero_expansions(const SuiteConfig& config, const FactorTable& table) {
    Report report;
    report.claim = "zero-expansions";

    std::vector<int64_t> checkpoints;
    for (int64_t x : {1000, 10000, 100000, 1000000}) {
        if (x <= config.sieve_limit) checkpoints.push_back(x);
    }
    const int64_t x_max = checkpoints.back();
    Json checkpoint_json = Json::array();
    for (int64_t x : checkpoints) checkpoint_json.push_back(x);
    report.hypothesis["checkpoints"] = std::move(checkpoint_json);

    struct Series {
        const char* family;
        RamanujanCoefficients coefficients;
        std::vector<int64_t> arguments;
        // Target of the partial sums: 0 for R0/H0, d(a) for the divisor-log family.
        bool target_is_num_divisors;
    };
    const std::vector<Series> series = {
        {"ramanujan-r0", RamanujanCoefficients::ramanujan_r0(), {1, 2, 6}, false},
        {"hardy-h0", RamanujanCoefficients::hardy_h0(), {1, 2, 6}, false},
        {"divisor-log", RamanujanCoefficients::divisor_log(), {1, 2}, true},
    };

    bool all_decreasing = true;
    for (const Series& s : series) {
        const ExpansionEvaluator evaluator(s.coefficients, x_max, table);
        for (int64_t a : s.arguments) {
            const ExpansionEvaluation eval = evaluator.at(a, checkpoints);
            const double target =
                s.target_is_num_divisors ? static_cast<double>(num_divisors(a, table)) : 0.0;
            std::vector<double> errors;
            errors.reserve(eval.checkpoints.size());
            for (const auto& [x, value] : eval.checkpoints) {
                errors.push_back(std::abs(value - cdouble(target, 0.0)));
            }
            bool decreasing = true;
            for (size_t i = 1; i < errors.size(); ++i) {
                if (!(errors[i] < errors[i - 1])) decreasing = false;
            }
            Json row = Json::object();
            row["family"] = s.family;
            row["a"] = a;
            row["target"] = target;
            for (size_t i = 0; i < errors.size(); ++i) {
                row["err_" + std::to_string(i + 1)] = errors[i];
            }
            row["decreasing"] = decreasing;
            report.statistics.push_back(std::move(row));
            if (!decreasing) {
                all_decreasing = false;
                report.notes.push_back(std::string(s.family) + " at a=" + std::to_string(a) +
                                       " does not shrink monotonically across the checkpoints");
            }
        }
    }

    report.verdict = all_decreasing ? Verdict::TrendOnly : Verdict::Fail;
    return report;
}

// ---------------------------------------------------------------------------
// remark7: Wintner coefficients recovered from a Lucht series table
// ---------------------------------------------------------------------------

Report suite_remark7(const SuiteConfig& config, const FactorTable& table) {
    Report report;
    report.claim = "remark7";
    const double eta = config.eta;
    constexpr int64_t kTransformBound = 5000;
    constexpr int64_t kLuchtKMax = 8192;
    constexpr int64_t kModulusBound = 500;
    constexpr int64_t kCalibrationBound = 100;
    constexpr double kMargin = 1.05;
    report.hypothesis["family"] = "power-log-decay";
    report.hypothesis["eta"] = eta;
    report.hypothesis["transform_bound"] = kTransformBound;
    report.hypothesis["k_max"] = kLuchtKMax;
    report.hypothesis["q_max"] = kModulusBound;

    const RamanujanCoefficients coefficients = RamanujanCoefficients::power_log_decay(eta);
    const EratosthenesTable transform = lucht_table(coefficients, kTransformBound, kLuchtKMax, table);

    std::vector<std::pair<int64_t, cdouble>> values;
    double fitted = 0.0;
    for (int64_t q = 2; q <= kModulusBound; ++q) {
        const CoefficientEstimate win = wintner_coefficient(transform, q);
        values.emplace_back(q, win.value);
        if (q <= kCalibrationBound) {
            const double stat = std::abs(win.value) * static_cast<double>(q) *
                                std::pow(std::log(static_cast<double>(q)), eta - 1.0);
            fitted = std::max(fitted, stat);
        }
    }
    const double envelope = kMargin * fitted + 1e-12;
    report.hypothesis["calibration_bound"] = kCalibrationBound;
    report.hypothesis["margin"] = kMargin;
    report.hypothesis["fitted_constant"] = fitted;

    bool all_ok = true;
    for (const auto& [q, value] : values) {
        const double stat = std::abs(value) * static_cast<double>(q) *
                            std::pow(std::log(static_cast<double>(q)), eta - 1.0);
        const bool ok = stat <= envelope;
        Json row = Json::object();
        row["q"] = q;
        row["win_re"] = value.real();
        row["win_im"] = value.imag();
        row["statistic"] = stat;
        row["within_envelope"] = ok;
        report.statistics.push_back(std::move(row));
        if (!ok) all_ok = false;
    }
    report.verdict = all_ok ? Verdict::TrendOnly : Verdict::Fail;
    if (!all_ok) report.notes.push_back("statistic escaped the calibrated envelope");
    return report;
}

// ---------------------------------------------------------------------------
// remark8: absolute convergence under decay, with a divergent control
// ---------------------------------------------------------------------------

Report remark8_r0_control(const FactorTable& table) {
    Report report;
    report.claim = "r0-weighted-sum-control";
    const SeriesProbe probe =
        weighted_coefficient_sum(RamanujanCoefficients::ramanujan_r0(), 10000, table);
    report.hypothesis["q_max"] = 10000;
    report.hypothesis["series_verdict"] = to_string(probe.verdict);
    for (const auto& [x, value] : probe.partial_sums) {
        Json row = Json::object();
        row["x"] = x;
        row["partial_sum"] = value;
        report.statistics.push_back(std::move(row));
    }
    const bool diverging = probe.verdict == SeriesVerdict::Diverging;
    report.verdict = diverging ? Verdict::Pass : Verdict::Fail;
    report.notes.push_back(diverging
                               ? "the weighted R0 sum grows like a harmonic series, as expected"
                               : "expected the weighted R0 sum to diverge");
    return report;
}

Report suite_remark8(const SuiteConfig& config, const FactorTable& table) {
    Report report;
    report.claim = "remark8-suite";
    report.hypothesis["eta"] = config.eta;
    const RamanujanCoefficients coefficients = RamanujanCoefficients::power_log_decay(config.eta);
    constexpr int64_t kArguments[] = {1, 2, 6, 12};
    report.parts.push_back(verify_absolute_convergence(coefficients, kArguments, 10000, table));
    report.parts.push_back(remark8_r0_control(table));

    bool all_ok = true;
    for (const Report& part : report.parts) {
        if (!part.passed()) all_ok = false;
    }
    report.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    return report;
}

// ---------------------------------------------------------------------------

const Report* primary_statistics(const Report& report) {
    if (report.statistics.is_array() && report.statistics.size() > 0) return &report;
    for (const Report& part : report.parts) {
        if (const Report* found = primary_statistics(part)) return found;
    }
    return nullptr;
}

} // namespace

const char* suite_name(Suite suite) {
    for (const SuiteName& entry : kSuiteNames) {
        if (entry.suite == suite) return entry.name;
    }
    return "unknown";
}

std::optional<Suite> suite_from_name(std::string_view name) {
    for (const SuiteName& entry : kSuiteNames) {
        if (name == entry.name) return entry.suite;
    }
    return std::nullopt;
}

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites = [] {
        std::vector<Suite> out;
        for (const SuiteName& entry : kSuiteNames) out.push_back(entry.suite);
        return out;
    }();
    return suites;
}

Report run_suite(const SuiteConfig& config) {
    validate(config);
    const FactorTable table(config.sieve_limit);

    Report report;
    switch (config.suite) {
    case Suite::CsumIdentities:
        report = suite_csum_identities(config, table);
        break;
    case Suite::TransformsRoundtrip:
        report = suite_transforms_roundtrip(config, table);
        break;
    case Suite::Theorem1: {
        constexpr int64_t kDValues[] = {10, 100, 1000, 10000};
        report = verify_theorem1(RamanujanCoefficients::power_log_decay(config.eta),
                                 config.eta, kDValues, 20000, table);
        break;
    }
    case Suite::Theorem2:
        report = suite_theorem2(config, table);
        break;
    case Suite::Theorem3: {
        constexpr int64_t kAValues[] = {1, 2, 6, 12, 30, 210};
        report = verify_theorem3(RamanujanCoefficients::power_log_decay(config.eta),
                                 config.eta, kAValues, 10000, table);
        break;
    }
    case Suite::Theorem4:
        report = suite_theorem4(config, table);
        break;
    case Suite::Corollary1:
        report = suite_corollary1(config, table);
        break;
    case Suite::Corollary2:
        report = suite_corollary2(config, table);
        break;
    case Suite::Counterexample:
        report = suite_counterexample(config, table);
        break;
    case Suite::ZeroExpansions:
        report = suite_zero_expansions(config, table);
        break;
    case Suite::Remark7:
        report = suite_remark7(config, table);
        break;
    case Suite::Remark8:
        report = suite_remark8(config, table);
        break;
    }
    report.hypothesis["config"] = config_json(config);
    return report;
}

void write_report(const Report& report, ReportFormat format, std::ostream& os) {
    if (format == ReportFormat::Json) {
        os << report.to_json().dump(2) << '\n';
        return;
    }
    if (const Report* primary = primary_statistics(report)) {
        write_statistics_csv(*primary, os);
    }
}

} // namespace gre
