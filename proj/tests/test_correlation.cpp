#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "gre/correlation.hpp"
#include "gre/eratosthenes.hpp"
#include "gre/factor_table.hpp"
#include "gre/ramanujan_sum.hpp"

namespace {

using gre::cdouble;
using gre::FactorTable;
using gre::PeriodicFunction;

gre::ArithmeticFunctionView von_mangoldt_view(const FactorTable& t) {
    gre::ArithmeticFunctionView v;
    v.evaluate = [&t](int64_t n) { return cdouble{gre::von_mangoldt(n, t), 0.0}; };
    v.label = "Lambda";
    return v;
}

TEST(PeriodicFunction, EvaluatesWithReductionIntoPeriod) {
    const PeriodicFunction F({cdouble{1.0, 0.0}, cdouble{2.0, 0.0}, cdouble{3.0, 0.0}}, "F3");
    EXPECT_EQ(F.period(), 3);
    EXPECT_EQ(F.at(1), (cdouble{1.0, 0.0}));
    EXPECT_EQ(F.at(3), (cdouble{3.0, 0.0}));
    EXPECT_EQ(F.at(4), (cdouble{1.0, 0.0}));
    EXPECT_EQ(F.at(302), (cdouble{2.0, 0.0}));
    EXPECT_THROW(F.at(0), std::invalid_argument);
    EXPECT_THROW(PeriodicFunction({}), std::invalid_argument);

    const auto view = F.view();
    ASSERT_TRUE(view.period_hint.has_value());
    EXPECT_EQ(*view.period_hint, 3);
    EXPECT_EQ(view(5), (cdouble{2.0, 0.0}));
}

TEST(DivertsValues, ClassifiesReducedResiduePatterns) {
    // Non-constant, but constant on the reduced residues {1, 3} of 4.
    const PeriodicFunction mono(
        {cdouble{1.0, 0.0}, cdouble{7.0, 0.0}, cdouble{1.0, 0.0}, cdouble{9.0, 0.0}});
    const auto mono_result = gre::diverts_values(mono);
    EXPECT_EQ(mono_result.pattern, gre::ValuePattern::Monochromatic);
    EXPECT_EQ(mono_result.witness, 0);

    const PeriodicFunction div(
        {cdouble{1.0, 0.0}, cdouble{5.0, 0.0}, cdouble{9.0, 0.0}});
    const auto div_result = gre::diverts_values(div);
    EXPECT_EQ(div_result.pattern, gre::ValuePattern::Diverting);
    EXPECT_EQ(div_result.witness, 2);

    const PeriodicFunction too_short({cdouble{1.0, 0.0}, cdouble{2.0, 0.0}});
    EXPECT_THROW(gre::diverts_values(too_short), std::invalid_argument);
}

TEST(Correlation, IndicatorShiftsAndValidation) {
    gre::ArithmeticFunctionView f;
    f.evaluate = [](int64_t n) { return cdouble{n == 5 ? 1.0 : 0.0, 0.0}; };
    f.support_hint = std::vector<int64_t>{5};
    gre::ArithmeticFunctionView g;
    g.evaluate = [](int64_t n) { return cdouble{static_cast<double>(n * n), 0.0}; };

    // N < 5 leaves the support empty.
    EXPECT_EQ(gre::correlation({f, g, 1}, 3), (cdouble{0.0, 0.0}));
    // N >= 5 picks out g(5 + a).
    EXPECT_EQ(gre::correlation({f, g, 10}, 3), (cdouble{64.0, 0.0}));
    EXPECT_EQ(gre::correlation({f, g, 5}, 1), (cdouble{36.0, 0.0}));

    EXPECT_THROW(gre::correlation({f, g, 10}, 0), std::invalid_argument);
    EXPECT_THROW(gre::correlation({f, g, 0}, 1), std::invalid_argument);
}

TEST(Correlation, VonMangoldtPairMatchesBruteForce) {
    const FactorTable t(200);
    const auto lambda = von_mangoldt_view(t);
    const gre::CorrelationSpec spec{lambda, lambda, 100};
    double brute = 0.0;
    for (int64_t n = 1; n <= 100; ++n) {
        brute += gre::von_mangoldt(n, t) * gre::von_mangoldt(n + 2, t);
    }
    const cdouble got = gre::correlation(spec, 2);
    EXPECT_NEAR(got.real(), brute, 1e-12);
    EXPECT_NEAR(got.real(), 112.88796742895666, 1e-9);
    EXPECT_EQ(got.imag(), 0.0);
}

TEST(CounterexampleOne, BuildsSmallestValidPrimePair) {
    const FactorTable t(10000);
    const struct {
        int64_t p0;
        int64_t n0;
    } expected[] = {{3, 5}, {5, 19}, {7, 13}, {11, 43}, {13, 103}};
    for (const auto& e : expected) {
        const auto ce = gre::build_counterexample_one(e.p0, t);
        EXPECT_EQ(ce.p0, e.p0);
        EXPECT_EQ(ce.n0, e.n0) << "p0=" << e.p0;
        EXPECT_EQ(ce.length, e.n0);
        EXPECT_EQ(ce.n0 % ce.p0, ce.p0 - 1);
        EXPECT_TRUE(t.is_prime(ce.n0));
    }

    EXPECT_THROW(gre::build_counterexample_one(4, t), std::invalid_argument);
    EXPECT_THROW(gre::build_counterexample_one(2, t), std::invalid_argument);
    EXPECT_THROW(gre::build_counterexample_one(20000, t), std::out_of_range);

    // No prime = -1 (mod 13) above 13 fits under a sieve limit of 100.
    const FactorTable tiny(100);
    EXPECT_THROW(gre::build_counterexample_one(13, tiny), gre::resource_error);
}

TEST(CounterexampleOne, CorrelationEqualsShiftedRamanujanSum) {
    const FactorTable t(1000);
    const auto ce = gre::build_counterexample_one(5, t);
    const auto spec = gre::counterexample_spec(ce, t);

    // C(N, a) = c_5(a - 1): spot values phi(5) = 4 at a = 1 and mu(5) = -1
    // at a = 2.
    EXPECT_EQ(gre::correlation(spec, 1), (cdouble{4.0, 0.0}));
    EXPECT_EQ(gre::correlation(spec, 2), (cdouble{-1.0, 0.0}));
    for (int64_t a = 1; a <= 25; ++a) {
        const int64_t expected =
            gre::cq_kluyver(5, gre::reduce_into_period(a - 1, 5), t);
        EXPECT_EQ(gre::correlation(spec, a).real(), static_cast<double>(expected)) << "a=" << a;
    }

    const PeriodicFunction C = gre::counterexample_correlation(ce, t);
    EXPECT_EQ(C.period(), 5);
    const auto dv = gre::diverts_values(C);
    EXPECT_EQ(dv.pattern, gre::ValuePattern::Diverting);
    EXPECT_EQ(dv.witness, 2);
}

TEST(CounterexampleIdentity, ExactForAllSmallOddPrimes) {
    const FactorTable t(10000);
    for (int64_t p0 : {3, 5, 7, 11, 13}) {
        const auto ce = gre::build_counterexample_one(p0, t);
        const auto report = gre::verify_counterexample_identity(ce, 4 * p0, t);
        EXPECT_EQ(report.verdict, gre::Verdict::Pass) << "p0=" << p0;
        EXPECT_TRUE(report.hypothesis.find("spot_values_ok")->as_bool());
        EXPECT_EQ(report.statistics.size(), static_cast<size_t>(4 * p0));
    }

    const auto ce5 = gre::build_counterexample_one(5, t);
    const auto report = gre::verify_counterexample_identity(ce5, 10, t);
    const auto& rows = report.statistics.items();
    EXPECT_EQ(rows[0].find("correlation")->as_int(), 4);
    EXPECT_EQ(rows[1].find("correlation")->as_int(), -1);
    EXPECT_EQ(rows[5].find("correlation")->as_int(), 4); // a = 6, a - 1 = 0 (mod 5)
    for (const gre::Json& row : rows) {
        EXPECT_TRUE(row.find("equal")->as_bool());
    }

    EXPECT_THROW(gre::verify_counterexample_identity(ce5, 0, t), std::invalid_argument);
}

TEST(Reef, RhsClosedForms) {
    const FactorTable t(1000);
    const auto ce = gre::build_counterexample_one(5, t);
    const auto spec = gre::counterexample_spec(ce, t);

    // Empty coefficient set: the RHS vanishes identically.
    const gre::ReefSpec empty;
    EXPECT_EQ(gre::reef_rhs(spec.f, empty, ce.length, 7, t), (cdouble{0.0, 0.0}));

    // g_hat = indicator{p0}: RHS(a) = -c_5(a)/4, so 1/4 off the zero class
    // and -1 on it.
    gre::ReefSpec reef;
    reef.g_hat = {{5, cdouble{1.0, 0.0}}};
    reef.q_trunc = 5;
    const gre::ReefEvaluator evaluator(spec.f, reef, ce.length, t);
    for (int64_t a = 1; a <= 20; ++a) {
        const double expected = (a % 5 == 0) ? -1.0 : 0.25;
        EXPECT_NEAR(evaluator.rhs(a).real(), expected, 1e-12) << "a=" << a;
        EXPECT_EQ(evaluator.rhs(a).imag(), 0.0);
    }
    EXPECT_THROW(evaluator.rhs(0), std::invalid_argument);

    gre::ReefSpec bad;
    bad.g_hat = {{5, cdouble{1.0, 0.0}}};
    bad.q_trunc = 3;
    EXPECT_THROW(gre::ReefEvaluator(spec.f, bad, ce.length, t), std::invalid_argument);
}

TEST(ReefGap, ExactRationalVerdictsForAllSmallOddPrimes) {
    const FactorTable t(10000);
    for (int64_t p0 : {3, 5, 7, 11, 13}) {
        const auto ce = gre::build_counterexample_one(p0, t);
        const auto report = gre::reef_gap_report(ce, 4 * p0, t);
        EXPECT_EQ(report.verdict, gre::Verdict::Pass) << "p0=" << p0;
        EXPECT_EQ(report.hypothesis.find("phi_p0")->as_int(), p0 - 1);
        EXPECT_NEAR(report.hypothesis.find("rhs_off_class")->as_double(),
                    1.0 / static_cast<double>(p0 - 1), 1e-15);
        for (const gre::Json& row : report.statistics.items()) {
            const int64_t a = row.find("a")->as_int();
            EXPECT_EQ(row.find("equal")->as_bool(), a % p0 == 0) << "p0=" << p0 << " a=" << a;
        }
    }

    const auto ce5 = gre::build_counterexample_one(5, t);
    const auto report = gre::reef_gap_report(ce5, 10, t);
    const auto& rows = report.statistics.items();
    EXPECT_EQ(rows[0].find("lhs_re")->as_double(), 4.0);
    EXPECT_EQ(rows[0].find("rhs_re")->as_double(), 0.25);
    EXPECT_FALSE(rows[0].find("equal")->as_bool());
    EXPECT_EQ(rows[4].find("lhs_re")->as_double(), -1.0);
    EXPECT_EQ(rows[4].find("rhs_re")->as_double(), -1.0);
    EXPECT_TRUE(rows[4].find("equal")->as_bool());

    EXPECT_THROW(gre::reef_gap_report(ce5, 9, t), std::invalid_argument);
}

TEST(CorrelationEratosthenes, ConstantCorrelationHasTrivialTransform) {
    const FactorTable t(200);
    gre::ArithmeticFunctionView f;
    f.evaluate = [](int64_t n) { return cdouble{n == 1 ? 1.0 : 0.0, 0.0}; };
    f.support_hint = std::vector<int64_t>{1};
    gre::ArithmeticFunctionView g;
    g.evaluate = [](int64_t) { return cdouble{1.0, 0.0}; };
    const auto E = gre::correlation_eratosthenes({f, g, 10}, 50, t);
    EXPECT_EQ(E.at(1), (cdouble{1.0, 0.0}));
    EXPECT_EQ(E.last_nonzero(), 1);
}

TEST(CorrelationEratosthenes, CounterexamplePrimeClassesSplit) {
    const FactorTable t(1000);
    const auto ce = gre::build_counterexample_one(5, t);
    const auto spec = gre::counterexample_spec(ce, t);
    const auto E = gre::correlation_eratosthenes(spec, 50, t);
    EXPECT_EQ(E.at(1), (cdouble{4.0, 0.0}));
    for (int64_t p : t.primes()) {
        if (p > 50) break;
        const double expected = (p % 5 == 1) ? 0.0 : -5.0;
        EXPECT_EQ(E.at(p).real(), expected) << "p=" << p;
        EXPECT_EQ(E.at(p).imag(), 0.0);
    }
}

TEST(Theorem4, DivertingCorrelationBlocksExpansions) {
    const FactorTable t(100000);
    const auto ce = gre::build_counterexample_one(5, t);
    const PeriodicFunction C = gre::counterexample_correlation(ce, t);
    const auto report = gre::theorem4_verifier(C, 10, t);
    EXPECT_EQ(report.verdict, gre::Verdict::Pass);
    EXPECT_EQ(report.hypothesis.find("witness")->as_int(), 2);
    EXPECT_EQ(report.hypothesis.find("fprime_witness_re")->as_double(), -5.0);
    EXPECT_STREQ(report.hypothesis.find("conclusion")->as_string().c_str(), "no-GRE-possible");
    ASSERT_EQ(report.statistics.size(), 20u);
    for (const gre::Json& row : report.statistics.items()) {
        EXPECT_TRUE(row.find("ok")->as_bool());
        const double expected =
            row.find("class")->as_string() == "witness" ? -5.0 : 0.0;
        EXPECT_NEAR(row.find("fprime_re")->as_double(), expected, 1e-12);
    }
}

TEST(Theorem4, PeriodThreeClassLimits) {
    const FactorTable t(10000);
    const auto ce = gre::build_counterexample_one(3, t);
    const PeriodicFunction C = gre::counterexample_correlation(ce, t);
    const auto report = gre::theorem4_verifier(C, 5, t);
    EXPECT_EQ(report.verdict, gre::Verdict::Pass);
    EXPECT_EQ(report.hypothesis.find("fprime_witness_re")->as_double(), -3.0);
    for (const gre::Json& row : report.statistics.items()) {
        const double expected = row.find("class")->as_string() == "unit" ? 0.0 : -3.0;
        EXPECT_NEAR(row.find("fprime_re")->as_double(), expected, 1e-12);
    }
}

TEST(Theorem4, MonochromaticInputIsNotApplicable) {
    const FactorTable t(1000);
    const PeriodicFunction mono(
        {cdouble{2.0, 0.0}, cdouble{9.0, 0.0}, cdouble{2.0, 0.0}, cdouble{9.0, 0.0}});
    const auto report = gre::theorem4_verifier(mono, 5, t);
    EXPECT_EQ(report.verdict, gre::Verdict::HypothesisNotMet);
    EXPECT_FALSE(report.passed());
    ASSERT_FALSE(report.notes.empty());
    EXPECT_NE(report.notes.front().find("not-applicable"), std::string::npos);

    EXPECT_THROW(gre::theorem4_verifier(mono, 0, t), std::invalid_argument);
}

TEST(Ippify, SquarefreeDivisorProjection) {
    const FactorTable t(200);
    // F = number-of-divisors: F' is identically 1, so inversion recovers
    // d(a) while the IPP route counts only square-free divisors.
    gre::ArithmeticFunctionView F;
    F.evaluate = [&t](int64_t a) {
        return cdouble{static_cast<double>(gre::num_divisors(a, t)), 0.0};
    };
    const auto E = gre::eratosthenes_transform(F, 60, t);
    EXPECT_EQ(gre::ippify(E, 4, t), (cdouble{2.0, 0.0}));
    EXPECT_EQ(gre::inverse_eratosthenes(E, 4), (cdouble{3.0, 0.0}));
    // On square-free arguments every divisor is square-free, so the two
    // routes agree.
    for (int64_t a : {1, 2, 3, 5, 6, 10, 15, 30}) {
        EXPECT_EQ(gre::ippify(E, a, t), gre::inverse_eratosthenes(E, a)) << "a=" << a;
    }

    EXPECT_THROW(gre::ippify(E, 0, t), std::invalid_argument);
    EXPECT_THROW(gre::ippify(E, 61, t), std::out_of_range);
}

TEST(Ippify, CounterexampleStaysDiverting) {
    const FactorTable t(1000);
    const auto ce = gre::build_counterexample_one(5, t);
    const auto spec = gre::counterexample_spec(ce, t);
    const auto E = gre::correlation_eratosthenes(spec, 20, t);
    // Divisors of 1 and 2 are all square-free, so IPPification changes
    // nothing there and the diverting pair 4, -1 survives.
    EXPECT_EQ(gre::ippify(E, 1, t), (cdouble{4.0, 0.0}));
    EXPECT_EQ(gre::ippify(E, 2, t), (cdouble{-1.0, 0.0}));
}

} // namespace
