#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gre/arithmetic_function.hpp"
#include "gre/coefficients.hpp"
#include "gre/factor_table.hpp"
#include "gre/report.hpp"

namespace gre {

/// How an EratosthenesTable was produced: by Moebius-inverting a function F
/// (F' = F * mu on 1..d_max) or by summing the Lucht series of a coefficient
/// family.
enum class Provenance { InvertedFromF, LuchtSeries };

/// Tabulated Eratosthenes transform F'(d) for d = 1..d_max. Immutable.
class EratosthenesTable {
public:
    EratosthenesTable(std::vector<cdouble> values, Provenance provenance,
                      int64_t lucht_k_max = 0);

    int64_t d_max() const noexcept { return static_cast<int64_t>(values_.size()) - 1; }
    cdouble at(int64_t d) const;
    Provenance provenance() const noexcept { return provenance_; }

    /// Largest d with F'(d) != 0, or 0 for the zero table.
    int64_t last_nonzero() const noexcept { return last_nonzero_; }

    /// Truncation point of the Lucht series (0 unless provenance is
    /// LuchtSeries).
    int64_t lucht_k_max() const noexcept { return lucht_k_max_; }

private:
    std::vector<cdouble> values_; // index 0 unused
    Provenance provenance_;
    int64_t last_nonzero_ = 0;
    int64_t lucht_k_max_ = 0;
};

/// F'(d) = sum over e | d of mu(d/e) F(e), for d = 1..d_max. Evaluates F on
/// 1..d_max exactly once each. Requires d_max <= table.limit().
EratosthenesTable eratosthenes_transform(const ArithmeticFunctionView& F, int64_t d_max,
                                         const FactorTable& table);

/// Moebius inversion F(a) = sum over d | a of F'(d). Requires a <= E.d_max().
cdouble inverse_eratosthenes(const EratosthenesTable& E, int64_t a);

/// A truncated-series estimate of one expansion coefficient, with the partial
/// values observed along the way. `exact` is only set when the computation
/// provably saw the whole series (finite support, or a periodic average over
/// a full period).
struct CoefficientEstimate {
    int64_t q = 1;
    cdouble value{0.0, 0.0};
    std::vector<std::pair<int64_t, cdouble>> checkpoints; // (truncation point, partial value)
    std::optional<double> tail_bound;
    bool converged = false;
    bool exact = false;
};

Json to_json(const CoefficientEstimate& estimate);

/// Wintner coefficient Win_q F = sum over d = 0 (mod q), d <= d_max of
/// F'(d)/d, with partial values at d_max/8, d_max/4, d_max/2, d_max.
/// `converged` means the last two partials differ by less than `tolerance`;
/// `exact` is set when the stored transform vanishes on the upper half of its
/// range, which certifies the truncation whenever the table holds the full
/// support.
CoefficientEstimate wintner_coefficient(const EratosthenesTable& E, int64_t q,
                                        double tolerance = 1e-9);

/// Carmichael coefficient Car_q F = (1/phi(q)) lim (1/x) sum_{a<=x} F(a)
/// c_q(a). When F carries a period hint the limit is computed exactly as the
/// average over x = lcm(q, period) and x_checkpoints may be empty; otherwise
/// averages are reported at each requested x and `converged` compares the
/// last two.
CoefficientEstimate carmichael_coefficient(const ArithmeticFunctionView& F, int64_t q,
                                           std::span<const int64_t> x_checkpoints,
                                           const FactorTable& table, double tolerance = 1e-9);

/// Three-way outcome of a numerical convergence probe. A truncated series can
/// never prove convergence, so the positive answer is only "plausibly
/// finite"; "diverging" means the tail windows still grow like the harmonic
/// series or worse.
enum class SeriesVerdict { PlausiblyFinite, Diverging, Inconclusive };

const char* to_string(SeriesVerdict v);

struct SeriesProbeOptions {
    /// Last-window increment below this reads as settling.
    double settle_tolerance = 0.05;
    /// Last-window increment at or above this fraction of the harmonic window
    /// sum (about log 2) reads as diverging.
    double harmonic_fraction = 0.25;
};

struct SeriesProbe {
    std::vector<std::pair<int64_t, double>> partial_sums; // absolute partial sums
    double last_increment = 0.0;
    double harmonic_increment = 0.0; // sum of 1/n over the last window
    SeriesVerdict verdict = SeriesVerdict::Inconclusive;
};

Json to_json(const SeriesProbe& probe);

/// The truncation grid {x/8, x/4, x/2, x} used by checkpointed series,
/// deduplicated and restricted to >= 1.
std::vector<int64_t> dyadic_checkpoints(int64_t x);

/// Sum of 1/n over lo < n <= hi, the divergence yardstick of the probes.
double harmonic_window(int64_t lo, int64_t hi);

/// Applies the three-way verdict rule to checkpointed absolute partial sums;
/// harmonic_increment is the harmonic window over the last checkpoint gap.
SeriesProbe classify_partial_sums(std::vector<std::pair<int64_t, double>> partial_sums,
                                  double harmonic_increment,
                                  const SeriesProbeOptions& options = {});

/// Probes the Wintner hypothesis sum over d of |F'(d)|/d on the table's
/// range.
SeriesProbe wintner_assumption_check(const EratosthenesTable& E,
                                     const SeriesProbeOptions& options = {});

/// Probes sum over q <= q_max of |G(q)| 2^omega(q), the weighted coefficient
/// sum controlling absolute convergence of expansions.
SeriesProbe weighted_coefficient_sum(const RamanujanCoefficients& G, int64_t q_max,
                                     const FactorTable& table,
                                     const SeriesProbeOptions& options = {});

} // namespace gre
