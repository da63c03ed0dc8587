#pragma once

#include <map>
#include <string>
#include <vector>

#include "gre/arithmetic_function.hpp"
#include "gre/eratosthenes.hpp"
#include "gre/factor_table.hpp"
#include "gre/ramanujan_sum.hpp"
#include "gre/report.hpp"

namespace gre {

/// A Q-periodic function tabulated on 1..Q. Q is as declared, not necessarily
/// the minimal period.
class PeriodicFunction {
public:
    PeriodicFunction(std::vector<cdouble> values, std::string label = "F");

    int64_t period() const noexcept { return static_cast<int64_t>(values_.size()); }
    const std::string& label() const noexcept { return label_; }

    /// Evaluation at any a >= 1, reduced into 1..period.
    cdouble at(int64_t a) const;

    /// The same function as an evaluable view carrying the period hint.
    ArithmeticFunctionView view() const;

private:
    std::vector<cdouble> values_;
    std::string label_;
};

enum class ValuePattern { Diverting, Monochromatic };

struct DivertsResult {
    ValuePattern pattern = ValuePattern::Monochromatic;
    /// Smallest a in Z_Q^* with a != 1 and F(a) != F(1); 0 when monochromatic.
    int64_t witness = 0;
};

/// Classifies F on the reduced residues of its period Q. Requires Q > 2 (the
/// notion is undefined otherwise).
DivertsResult diverts_values(const PeriodicFunction& F, double tolerance = 1e-9);

/// Correlation data C_{f,g}(N, a) = sum over n <= N of f(n) g(n + a).
struct CorrelationSpec {
    ArithmeticFunctionView f;
    ArithmeticFunctionView g;
    int64_t length = 1; // N
};

/// The finite correlation sum; exact in integers when f and g are
/// integer-valued. Uses f's support hint to restrict the sum when present.
cdouble correlation(const CorrelationSpec& spec, int64_t a);

/// The explicit diverting correlation: p0 an odd prime, n0 the smallest prime
/// above p0 congruent to -1 mod p0, length N = n0, f = indicator of {n0},
/// g = c_{p0}. Its correlation equals c_{p0}(a - 1) for every shift a.
struct CounterexampleOne {
    int64_t p0 = 3;
    int64_t n0 = 5;
    int64_t length = 5; // N = n0, the minimal valid choice
};

CounterexampleOne build_counterexample_one(int64_t p0, const FactorTable& table);

/// The correlation spec (f, g, N) realizing the counterexample.
CorrelationSpec counterexample_spec(const CounterexampleOne& ce, const FactorTable& table);

/// The correlation tabulated as a p0-periodic function of the shift.
PeriodicFunction counterexample_correlation(const CounterexampleOne& ce,
                                            const FactorTable& table);

/// Asserts correlation(spec, a) = c_{p0}(a - 1) as exact integers for all
/// a <= a_max, where the argument is reduced into 1..p0 (a = 1 reads
/// c_{p0}(p0) = phi(p0)).
Report verify_counterexample_identity(const CounterexampleOne& ce, int64_t a_max,
                                      const FactorTable& table);

/// Truncated expansion coefficients for a REEF right-hand side.
struct ReefSpec {
    std::map<int64_t, cdouble> g_hat; // q -> coefficient, keys <= q_trunc
    int64_t q_trunc = 1;
};

/// RHS of the fixed-length expansion formula:
/// sum over q <= q_trunc of (g_hat(q)/phi(q)) (sum over n <= N of f(n)c_q(n))
/// c_q(a). Inner sums are cached per q across many shifts by ReefEvaluator.
class ReefEvaluator {
public:
    ReefEvaluator(const ArithmeticFunctionView& f, ReefSpec reef, int64_t length,
                  const FactorTable& table);

    cdouble rhs(int64_t a) const;

private:
    struct Term {
        int64_t q;
        cdouble weight;                // g_hat(q)/phi(q) * inner sum
        std::vector<int64_t> cq_cycle; // one period of c_q
    };
    std::vector<Term> terms_;
};

cdouble reef_rhs(const ArithmeticFunctionView& f, const ReefSpec& reef, int64_t length,
                 int64_t a, const FactorTable& table);

/// Compares LHS = c_{p0}(a - 1) against the REEF RHS with coefficients
/// g_hat = indicator{p0} for all a <= a_max (a_max >= 2 p0). Equality is
/// decided in exact rational arithmetic over the common denominator phi(p0);
/// the report asserts |LHS| >= 1 everywhere, RHS = 1/(p0 - 1) off the zero
/// class, exact equality on a = 0 (mod p0), and failure everywhere else.
Report reef_gap_report(const CounterexampleOne& ce, int64_t a_max, const FactorTable& table);

/// Eratosthenes transform of the correlation viewed as a function of the
/// shift. Costs d_max evaluations of the correlation, each O(N).
EratosthenesTable correlation_eratosthenes(const CorrelationSpec& spec, int64_t d_max,
                                           const FactorTable& table);

/// Checks the diverting-values obstruction: along primes p = witness (mod Q)
/// the transform F'(p) = F(p) - F(1) is constantly F(witness) - F(1) != 0,
/// and along p = 1 (mod Q) constantly 0, so F' is not infinitesimal and no
/// expansion with eta-decay can exist. Monochromatic input yields verdict
/// hypothesis-not-met (not applicable).
Report theorem4_verifier(const PeriodicFunction& F, int64_t primes_per_class,
                         const FactorTable& table);

/// The IPPified value: same Eratosthenes transform, summed over square-free
/// divisors only.
cdouble ippify(const EratosthenesTable& E, int64_t a, const FactorTable& table);

} // namespace gre
