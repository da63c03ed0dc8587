#include "gre/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace gre {

namespace {

// One period of c_q, indexed by residue 1..q at positions 0..q-1.
std::vector<int64_t> cq_cycle(int64_t q, const FactorTable& table) {
    std::vector<int64_t> cycle(static_cast<size_t>(q));
    for (int64_t r = 1; r <= q; ++r) {
        cycle[static_cast<size_t>(r - 1)] = cq_kluyver(q, r, table);
    }
    return cycle;
}

} // namespace

PeriodicFunction::PeriodicFunction(std::vector<cdouble> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
    if (values_.empty()) {
        throw std::invalid_argument("PeriodicFunction needs at least period 1");
    }
}

cdouble PeriodicFunction::at(int64_t a) const {
    if (a < 1) throw std::invalid_argument("periodic functions are defined on a >= 1");
    return values_[static_cast<size_t>((a - 1) % period())];
}

ArithmeticFunctionView PeriodicFunction::view() const {
    ArithmeticFunctionView v;
    v.evaluate = [values = values_](int64_t a) {
        return values[static_cast<size_t>((a - 1) % static_cast<int64_t>(values.size()))];
    };
    v.period_hint = period();
    v.label = label_;
    return v;
}

DivertsResult diverts_values(const PeriodicFunction& F, double tolerance) {
    const int64_t q = F.period();
    if (q <= 2) {
        throw std::invalid_argument("diverting values are undefined for period <= 2");
    }
    const cdouble base = F.at(1);
    for (int64_t a = 2; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        if (std::abs(F.at(a) - base) > tolerance) {
            return {ValuePattern::Diverting, a};
        }
    }
    return {ValuePattern::Monochromatic, 0};
}

cdouble correlation(const CorrelationSpec& spec, int64_t a) {
    if (a < 1) throw std::invalid_argument("correlation shift must be >= 1");
    if (spec.length < 1) throw std::invalid_argument("correlation length must be >= 1");
    cdouble sum{0.0, 0.0};
    if (spec.f.support_hint) {
        for (int64_t n : *spec.f.support_hint) {
            if (n >= 1 && n <= spec.length) sum += spec.f(n) * spec.g(n + a);
        }
        return sum;
    }
    for (int64_t n = 1; n <= spec.length; ++n) {
        sum += spec.f(n) * spec.g(n + a);
    }
    return sum;
}

CounterexampleOne build_counterexample_one(int64_t p0, const FactorTable& table) {
    if (p0 > table.limit()) throw std::out_of_range("p0 exceeds sieve limit");
    if (p0 <= 2 || !table.is_prime(p0)) {
        throw std::invalid_argument("counterexample needs a prime p0 > 2");
    }
    // Only p0 - 1 itself could be a prime below p0 in this class, so the
    // first two class members always contain the wanted prime if it is in
    // range at all.
    const PrimesInAp found = primes_in_ap(p0, p0 - 1, 2, table.limit(), table);
    for (int64_t p : found.primes) {
        if (p > p0) return CounterexampleOne{p0, p, p};
    }
    throw resource_error("no prime = -1 (mod p0) above p0 within the sieve; raise the limit");
}

CorrelationSpec counterexample_spec(const CounterexampleOne& ce, const FactorTable& table) {
    ArithmeticFunctionView f;
    f.evaluate = [n0 = ce.n0](int64_t a) { return cdouble{a == n0 ? 1.0 : 0.0, 0.0}; };
    f.support_hint = std::vector<int64_t>{ce.n0};
    f.label = "indicator{n0}";

    auto cycle = cq_cycle(ce.p0, table);
    auto g_eval = [cycle = std::move(cycle), p0 = ce.p0](int64_t a) {
        return cdouble{
            static_cast<double>(cycle[static_cast<size_t>(reduce_into_period(a, p0) - 1)]), 0.0};
    };
    ArithmeticFunctionView g = make_periodic_view(std::move(g_eval), ce.p0, "c_{p0}");

    return CorrelationSpec{std::move(f), std::move(g), ce.length};
}

PeriodicFunction counterexample_correlation(const CounterexampleOne& ce,
                                            const FactorTable& table) {
    const CorrelationSpec spec = counterexample_spec(ce, table);
    std::vector<cdouble> values(static_cast<size_t>(ce.p0));
    for (int64_t a = 1; a <= ce.p0; ++a) {
        values[static_cast<size_t>(a - 1)] = correlation(spec, a);
    }
    return PeriodicFunction(std::move(values), "C_{f0,g0}(N,.)");
}

Report verify_counterexample_identity(const CounterexampleOne& ce, int64_t a_max,
                                      const FactorTable& table) {
    if (a_max < 1) throw std::invalid_argument("a_max must be >= 1");
    Report report;
    report.claim = "counterexample-identity";
    report.hypothesis["p0"] = ce.p0;
    report.hypothesis["n0"] = ce.n0;
    report.hypothesis["N"] = ce.length;
    report.hypothesis["a_max"] = a_max;

    const CorrelationSpec spec = counterexample_spec(ce, table);
    bool all_equal = true;
    for (int64_t a = 1; a <= a_max; ++a) {
        const cdouble c = correlation(spec, a);
        // Both factors take small integer values, so the sum is exact.
        const int64_t actual = static_cast<int64_t>(std::nearbyint(c.real()));
        if (c.imag() != 0.0 || c.real() != static_cast<double>(actual)) {
            throw consistency_error("counterexample correlation is not an exact integer at a=" +
                                    std::to_string(a));
        }
        const int64_t expected = cq_kluyver(ce.p0, reduce_into_period(a - 1, ce.p0), table);
        const bool equal = actual == expected;
        if (!equal) {
            all_equal = false;
            report.notes.push_back("identity fails at a=" + std::to_string(a));
        }
        Json row = Json::object();
        row["a"] = a;
        row["correlation"] = actual;
        row["expected"] = expected;
        row["equal"] = equal;
        report.statistics.push_back(std::move(row));
    }

    // Spot values pinned by the construction: C(N,1) = phi(p0), C(N,2) = mu(p0).
    const cdouble c1 = correlation(spec, 1);
    const cdouble c2 = correlation(spec, 2);
    const bool spot_ok = c1 == cdouble{static_cast<double>(ce.p0 - 1), 0.0} &&
                         c2 == cdouble{-1.0, 0.0};
    report.hypothesis["spot_values_ok"] = spot_ok;
    if (!spot_ok) report.notes.push_back("spot values C(N,1), C(N,2) do not match phi/mu");

    report.verdict = (all_equal && spot_ok) ? Verdict::Pass : Verdict::Fail;
    return report;
}

ReefEvaluator::ReefEvaluator(const ArithmeticFunctionView& f, ReefSpec reef, int64_t length,
                             const FactorTable& table) {
    if (length < 1) throw std::invalid_argument("reef evaluator needs length >= 1");
    for (const auto& [q, coefficient] : reef.g_hat) {
        if (q < 1 || q > reef.q_trunc) {
            throw std::invalid_argument("reef coefficient index outside 1..q_trunc");
        }
        Term term;
        term.q = q;
        term.cq_cycle = cq_cycle(q, table);
        cdouble inner{0.0, 0.0};
        for (int64_t n = 1; n <= length; ++n) {
            inner += f(n) *
                     static_cast<double>(term.cq_cycle[static_cast<size_t>(
                         reduce_into_period(n, q) - 1)]);
        }
        term.weight = coefficient / static_cast<double>(totient(q, table)) * inner;
        terms_.push_back(std::move(term));
    }
}

cdouble ReefEvaluator::rhs(int64_t a) const {
    if (a < 1) throw std::invalid_argument("reef shift must be >= 1");
    cdouble sum{0.0, 0.0};
    for (const Term& term : terms_) {
        sum += term.weight *
               static_cast<double>(
                   term.cq_cycle[static_cast<size_t>(reduce_into_period(a, term.q) - 1)]);
    }
    return sum;
}

cdouble reef_rhs(const ArithmeticFunctionView& f, const ReefSpec& reef, int64_t length,
                 int64_t a, const FactorTable& table) {
    return ReefEvaluator(f, reef, length, table).rhs(a);
}

Report reef_gap_report(const CounterexampleOne& ce, int64_t a_max, const FactorTable& table) {
    if (a_max < 2 * ce.p0) {
        throw std::invalid_argument("reef_gap_report needs a_max >= 2 p0");
    }
    Report report;
    report.claim = "reef-gap";
    const int64_t phi_p0 = ce.p0 - 1;
    report.hypothesis["p0"] = ce.p0;
    report.hypothesis["phi_p0"] = phi_p0;
    report.hypothesis["mu_p0"] = -1;
    report.hypothesis["a_max"] = a_max;
    report.hypothesis["rhs_off_class"] = 1.0 / static_cast<double>(phi_p0);

    const CorrelationSpec spec = counterexample_spec(ce, table);
    ReefSpec reef;
    reef.g_hat = {{ce.p0, cdouble{1.0, 0.0}}};
    reef.q_trunc = ce.p0;
    const ReefEvaluator evaluator(spec.f, reef, spec.length, table);

    bool ok = true;
    int64_t failure_count = 0;
    const auto fail = [&](int64_t a, const std::string& what) {
        ok = false;
        report.notes.push_back(what + " at a=" + std::to_string(a));
    };
    for (int64_t a = 1; a <= a_max; ++a) {
        const int64_t lhs = cq_kluyver(ce.p0, reduce_into_period(a - 1, ce.p0), table);
        const int64_t cq_a = cq_kluyver(ce.p0, reduce_into_period(a, ce.p0), table);
        // Exact comparison over the common denominator phi(p0):
        // LHS = lhs, RHS = mu(p0) cq_a / phi(p0) = -cq_a / phi(p0).
        const int64_t lhs_num = checked_mul(lhs, phi_p0);
        const int64_t rhs_num = -cq_a;
        const bool equal = lhs_num == rhs_num;
        if (!equal) ++failure_count;

        const cdouble rhs_float = evaluator.rhs(a);
        if (std::abs(rhs_float - cdouble{static_cast<double>(rhs_num) /
                                             static_cast<double>(phi_p0),
                                         0.0}) > 1e-9) {
            throw consistency_error("reef evaluator disagrees with the exact rational route");
        }

        if (std::abs(lhs) < 1) fail(a, "|LHS| < 1");
        if (a % ce.p0 != 0 && rhs_num != 1) fail(a, "RHS != 1/(p0-1) off the zero class");
        if (a % ce.p0 == 0 && !equal) fail(a, "relative REEF equality missing");
        if (a % ce.p0 != 0 && equal) fail(a, "unexpected equality off the zero class");

        Json row = Json::object();
        row["a"] = a;
        row["lhs_re"] = static_cast<double>(lhs);
        row["lhs_im"] = 0.0;
        row["rhs_re"] = rhs_float.real();
        row["rhs_im"] = rhs_float.imag();
        row["equal"] = equal;
        report.statistics.push_back(std::move(row));
    }
    if (failure_count == 0) {
        ok = false;
        report.notes.push_back("no REEF failure found; expected failures off the zero class");
    }
    report.hypothesis["failure_count"] = failure_count;
    report.verdict = ok ? Verdict::Pass : Verdict::Fail;
    return report;
}

EratosthenesTable correlation_eratosthenes(const CorrelationSpec& spec, int64_t d_max,
                                           const FactorTable& table) {
    ArithmeticFunctionView view;
    view.evaluate = [spec](int64_t a) { return correlation(spec, a); };
    view.label = "C(N,.)";
    return eratosthenes_transform(view, d_max, table);
}

Report theorem4_verifier(const PeriodicFunction& F, int64_t primes_per_class,
                         const FactorTable& table) {
    if (primes_per_class < 1) {
        throw std::invalid_argument("theorem4_verifier needs at least one prime per class");
    }
    Report report;
    report.claim = "theorem4";
    const int64_t q = F.period();
    report.hypothesis["period"] = q;
    report.hypothesis["primes_per_class"] = primes_per_class;

    const DivertsResult dv = diverts_values(F);
    report.hypothesis["pattern"] =
        dv.pattern == ValuePattern::Diverting ? "diverting" : "monochromatic";
    if (dv.pattern == ValuePattern::Monochromatic) {
        report.verdict = Verdict::HypothesisNotMet;
        report.notes.push_back("not-applicable: F is monochromatic on the reduced residues");
        return report;
    }
    report.hypothesis["witness"] = dv.witness;
    const cdouble base = F.at(1);
    const cdouble target = F.at(dv.witness) - base;
    report.hypothesis["fprime_witness_re"] = target.real();
    report.hypothesis["fprime_witness_im"] = target.imag();

    const PrimesInAp witness_class =
        primes_in_ap(q, dv.witness % q, primes_per_class, table.limit(), table);
    const PrimesInAp unit_class = primes_in_ap(q, 1, primes_per_class, table.limit(), table);
    if (witness_class.exhausted_bound || unit_class.exhausted_bound) {
        throw resource_error("not enough primes in the residue classes; raise the sieve limit");
    }

    bool ok = true;
    const auto add_rows = [&](const char* cls, const std::vector<int64_t>& primes,
                              cdouble expected) {
        for (int64_t p : primes) {
            const cdouble fprime = F.at(p) - base;
            const bool row_ok = std::abs(fprime - expected) <= 1e-9;
            ok = ok && row_ok;
            Json row = Json::object();
            row["class"] = cls;
            row["p"] = p;
            row["fprime_re"] = fprime.real();
            row["fprime_im"] = fprime.imag();
            row["ok"] = row_ok;
            report.statistics.push_back(std::move(row));
        }
    };
    add_rows("witness", witness_class.primes, target);
    add_rows("unit", unit_class.primes, cdouble{0.0, 0.0});

    // The witness transform value must be genuinely nonzero for the
    // obstruction to bite (guaranteed by the diverting witness).
    if (std::abs(target) <= 1e-9) ok = false;

    report.verdict = ok ? Verdict::Pass : Verdict::Fail;
    if (ok) report.hypothesis["conclusion"] = "no-GRE-possible";
    return report;
}

cdouble ippify(const EratosthenesTable& E, int64_t a, const FactorTable& table) {
    if (a < 1) throw std::invalid_argument("ippify: a must be >= 1");
    if (a > E.d_max()) throw std::out_of_range("ippify: a exceeds the table range");
    cdouble sum{0.0, 0.0};
    for (int64_t d : divisors(a, table)) {
        if (mobius(d, table) != 0) sum += E.at(d);
    }
    return sum;
}

} // namespace gre
