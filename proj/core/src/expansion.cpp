#include "gre/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gre {

namespace {

void require_checkpoints(std::span<const int64_t> checkpoints, int64_t x_max) {
    if (checkpoints.empty()) {
        throw std::invalid_argument("expansion evaluation needs at least one checkpoint");
    }
    for (size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1 || (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
            throw std::invalid_argument("checkpoints must be ascending and >= 1");
        }
    }
    if (checkpoints.back() > x_max) {
        throw std::out_of_range("checkpoint exceeds the evaluator range");
    }
}

// Gate shared by the eta-hypothesis verifiers.
bool decay_gate(const RamanujanCoefficients& G, Report* report) {
    if (G.has_decay_hypothesis()) return true;
    report->verdict = Verdict::HypothesisNotMet;
    report->notes.push_back("coefficient family '" + G.label() +
                            "' declares no eta-decay and no finite support; the claim's "
                            "hypothesis is not met");
    return false;
}

} // namespace

ExpansionEvaluator::ExpansionEvaluator(const RamanujanCoefficients& G, int64_t x_max,
                                       const FactorTable& table)
    : table_(&table), x_max_(x_max) {
    if (x_max < 1) throw std::invalid_argument("evaluator range must be >= 1");
    if (x_max > table.limit()) {
        throw std::out_of_range("evaluator range exceeds sieve limit");
    }
    try {
        mu_.resize(static_cast<size_t>(x_max) + 1);
        coef_.resize(static_cast<size_t>(x_max) + 1);
    } catch (const std::bad_alloc&) {
        throw resource_error("expansion evaluator allocation failed");
    }
    for (int64_t m = 1; m <= x_max; ++m) {
        mu_[static_cast<size_t>(m)] = static_cast<signed char>(mobius(m, table));
    }
    for (int64_t q = 1; q <= x_max; ++q) {
        coef_[static_cast<size_t>(q)] = G(q, table);
    }
}

ExpansionEvaluation ExpansionEvaluator::at(int64_t a, std::span<const int64_t> x_checkpoints) const {
    if (a < 1) throw std::invalid_argument("expansion argument must be >= 1");
    if (a > table_->limit()) {
        throw std::out_of_range("expansion argument exceeds the sieve limit");
    }
    require_checkpoints(x_checkpoints, x_max_);
    const int64_t x = x_checkpoints.back();

    // c_q(a) for every q <= x at once: scatter d * mu(m) onto q = d m for each
    // divisor d of a. Exact integers (Kluyver's formula).
    std::vector<int64_t> cq(static_cast<size_t>(x) + 1, 0);
    for (int64_t d : divisors(a, *table_)) {
        if (d > x) break;
        for (int64_t m = 1; d * m <= x; ++m) {
            const int mu_m = mu_[static_cast<size_t>(m)];
            if (mu_m != 0) cq[static_cast<size_t>(d * m)] += d * mu_m;
        }
    }

    ExpansionEvaluation eval;
    eval.a = a;
    cdouble sum{0.0, 0.0};
    double abs_sum = 0.0;
    size_t tick_index = 0;
    for (int64_t q = 1; q <= x; ++q) {
        const double c = static_cast<double>(cq[static_cast<size_t>(q)]);
        if (c != 0.0) {
            const cdouble term = coef_[static_cast<size_t>(q)] * c;
            sum += term;
            abs_sum += std::abs(term);
        }
        while (tick_index < x_checkpoints.size() && q == x_checkpoints[tick_index]) {
            eval.checkpoints.emplace_back(q, sum);
            eval.abs_checkpoints.emplace_back(q, abs_sum);
            ++tick_index;
        }
    }
    return eval;
}

ExpansionEvaluation evaluate_expansion(const RamanujanCoefficients& G, int64_t a,
                                       std::span<const int64_t> x_checkpoints,
                                       const FactorTable& table) {
    if (x_checkpoints.empty()) {
        throw std::invalid_argument("evaluate_expansion needs at least one checkpoint");
    }
    const int64_t x_max = *std::max_element(x_checkpoints.begin(), x_checkpoints.end());
    ExpansionEvaluator evaluator(G, x_max, table);
    return evaluator.at(a, x_checkpoints);
}

CoefficientEstimate lucht_expansion(const RamanujanCoefficients& G, int64_t d, int64_t k_max,
                                    const FactorTable& table, double tolerance) {
    if (d < 1) throw std::invalid_argument("lucht_expansion: d must be >= 1");
    if (k_max < 1) throw std::invalid_argument("lucht_expansion: k_max must be >= 1");
    if (k_max > table.limit()) {
        throw std::out_of_range("lucht_expansion: k_max exceeds sieve limit");
    }

    const std::vector<int64_t> raw_ticks{k_max / 4, k_max / 2, k_max};
    std::vector<int64_t> ticks;
    for (int64_t t : raw_ticks) {
        if (t >= 1 && (ticks.empty() || t > ticks.back())) ticks.push_back(t);
    }

    CoefficientEstimate est;
    est.q = d;
    cdouble sum{0.0, 0.0};
    size_t tick_index = 0;
    for (int64_t k = 1; k <= k_max; ++k) {
        const int mu_k = mobius(k, table);
        if (mu_k != 0) {
            sum += static_cast<double>(mu_k) * G(checked_mul(d, k), table);
        }
        while (tick_index < ticks.size() && k == ticks[tick_index]) {
            est.checkpoints.emplace_back(k, static_cast<double>(d) * sum);
            ++tick_index;
        }
    }
    est.value = static_cast<double>(d) * sum;

    if (const auto support = G.support_end()) {
        // Terms with K > k_max vanish once d (k_max + 1) passes the support.
        if (checked_mul(d, k_max + 1) > *support) {
            est.exact = true;
            est.tail_bound = 0.0;
        }
    } else if (G.kind() == RamanujanCoefficients::Kind::PowerLogDecay && k_max >= 2) {
        // |G(q)| = s / (q log^(1+eta)(q+1)), so the tail beyond X = k_max is
        //   d sum_{K>X} |G(dK)| <= s sum_{K>X} 1 / (K log^(1+eta)(dK))
        // split at K = d with log(dK) >= max(log d, log K):
        //   middle (X < K <= d): <= s log(d/X) / log^(1+eta)(d)
        //   far    (K > max(X,d)): <= s / (eta log^eta(max(X,d)))
        const double eta = *G.decay_eta();
        const double s = G.decay_scale();
        double bound = 0.0;
        if (k_max < d) {
            bound += s * std::log(static_cast<double>(d) / static_cast<double>(k_max)) /
                     std::pow(std::log(static_cast<double>(d)), 1.0 + eta);
        }
        const double y = static_cast<double>(std::max(k_max, d));
        bound += s / (eta * std::pow(std::log(y), eta));
        est.tail_bound = bound;
    }

    const size_t n = est.checkpoints.size();
    est.converged =
        est.exact ||
        (n >= 2 && std::abs(est.checkpoints[n - 1].second - est.checkpoints[n - 2].second) <
                       tolerance);
    return est;
}

EratosthenesTable lucht_table(const RamanujanCoefficients& G, int64_t d_max, int64_t k_max,
                              const FactorTable& table) {
    if (d_max < 1) throw std::invalid_argument("lucht_table: d_max must be >= 1");
    if (k_max < 1 || k_max > table.limit()) {
        throw std::out_of_range("lucht_table: k_max outside 1..sieve limit");
    }
    std::vector<signed char> mu(static_cast<size_t>(k_max) + 1);
    for (int64_t k = 1; k <= k_max; ++k) {
        mu[static_cast<size_t>(k)] = static_cast<signed char>(mobius(k, table));
    }
    std::vector<cdouble> values(static_cast<size_t>(d_max) + 1);
    for (int64_t d = 1; d <= d_max; ++d) {
        cdouble sum{0.0, 0.0};
        for (int64_t k = 1; k <= k_max; ++k) {
            const int mu_k = mu[static_cast<size_t>(k)];
            if (mu_k != 0) sum += static_cast<double>(mu_k) * G(checked_mul(d, k), table);
        }
        values[static_cast<size_t>(d)] = static_cast<double>(d) * sum;
    }
    return EratosthenesTable(std::move(values), Provenance::LuchtSeries, k_max);
}

DecayProfile eta_decay_profile(const RamanujanCoefficients& G, double eta, int64_t q_limit,
                               const FactorTable& table) {
    if (!(eta > 0.0)) throw std::invalid_argument("eta_decay_profile: eta must be > 0");
    if (q_limit < 2) throw std::invalid_argument("eta_decay_profile: range must reach q >= 2");
    DecayProfile profile;
    profile.eta_tested = eta;
    profile.q_limit = q_limit;
    for (int64_t q = 2; q <= q_limit; ++q) {
        const double logq = std::log(static_cast<double>(q));
        const double stat =
            std::abs(G(q, table)) * static_cast<double>(q) * std::pow(logq, 1.0 + eta);
        if (stat > profile.sup_statistic) {
            profile.sup_statistic = stat;
            profile.q_argmax = q;
        }
    }
    return profile;
}

Json to_json(const DecayProfile& profile) {
    Json j = Json::object();
    j["eta_tested"] = profile.eta_tested;
    j["sup_statistic"] = profile.sup_statistic;
    j["q_argmax"] = profile.q_argmax;
    j["Q"] = profile.q_limit;
    return j;
}

Report verify_theorem1(const RamanujanCoefficients& G, double eta,
                       std::span<const int64_t> d_values, int64_t k_max, const FactorTable& table,
                       const FitOptions& fit) {
    Report report;
    report.claim = "theorem1";
    report.hypothesis["family"] = G.label();
    report.hypothesis["eta"] = eta;
    report.hypothesis["k_max"] = k_max;
    report.hypothesis["calibration_bound"] = fit.calibration_bound;
    report.hypothesis["margin"] = fit.margin;
    if (!decay_gate(G, &report)) return report;
    if (d_values.empty()) throw std::invalid_argument("verify_theorem1: empty d range");

    report.hypothesis["decay_profile"] =
        to_json(eta_decay_profile(G, eta, std::min<int64_t>(10'000, table.limit()), table));

    struct Row {
        int64_t d;
        CoefficientEstimate est;
        double statistic;
    };
    std::vector<Row> rows;
    double fitted = 0.0;
    bool calibrated = false;
    for (int64_t d : d_values) {
        CoefficientEstimate est = lucht_expansion(G, d, k_max, table);
        const double statistic =
            std::abs(est.value) * std::pow(std::log(static_cast<double>(d)), eta);
        if (d <= fit.calibration_bound) {
            fitted = std::max(fitted, statistic);
            calibrated = true;
        }
        rows.push_back({d, std::move(est), statistic});
    }
    if (!calibrated) {
        report.verdict = Verdict::Fail;
        report.notes.push_back("no d values inside the calibration range");
        return report;
    }
    const double envelope = fit.margin * fitted + 1e-12;
    report.hypothesis["fitted_constant"] = fitted;

    bool all_within = true;
    for (const Row& row : rows) {
        Json stat_row = Json::object();
        stat_row["d"] = row.d;
        stat_row["fprime_re"] = row.est.value.real();
        stat_row["fprime_im"] = row.est.value.imag();
        stat_row["statistic"] = row.statistic;
        stat_row["tail_bound"] = row.est.tail_bound ? Json(*row.est.tail_bound) : Json();
        const bool within = row.statistic <= envelope;
        stat_row["within_envelope"] = within;
        all_within = all_within && within;
        report.statistics.push_back(std::move(stat_row));
    }
    report.verdict = all_within ? Verdict::Pass : Verdict::Fail;
    return report;
}

Report verify_corollary1(const RamanujanCoefficients& G, double eta, int64_t a0,
                         int64_t prime_count, int64_t x_eval, const FactorTable& table,
                         const FitOptions& fit) {
    Report report;
    report.claim = "corollary1";
    report.hypothesis["family"] = G.label();
    report.hypothesis["eta"] = eta;
    report.hypothesis["a0"] = a0;
    report.hypothesis["prime_count"] = prime_count;
    report.hypothesis["x_eval"] = x_eval;
    report.hypothesis["calibration_bound"] = fit.calibration_bound;
    report.hypothesis["margin"] = fit.margin;
    if (!decay_gate(G, &report)) return report;
    if (a0 < 1) throw std::invalid_argument("verify_corollary1: a0 must be >= 1");
    if (prime_count < 1) throw std::invalid_argument("verify_corollary1: prime_count must be >= 1");

    std::vector<int64_t> primes;
    for (uint32_t p : table.primes()) {
        if (a0 % static_cast<int64_t>(p) == 0) continue;
        primes.push_back(p);
        if (static_cast<int64_t>(primes.size()) == prime_count) break;
    }
    if (static_cast<int64_t>(primes.size()) < prime_count) {
        throw resource_error("verify_corollary1: sieve holds too few primes coprime to a0");
    }
    if (checked_mul(a0, primes.back()) > table.limit()) {
        throw resource_error("verify_corollary1: a0 * p exceeds the sieve limit; raise it");
    }

    ExpansionEvaluator evaluator(G, x_eval, table);
    const std::vector<int64_t> last_tick{x_eval};
    const cdouble f_a0 = evaluator.at(a0, last_tick).value();
    report.hypothesis["f_a0_re"] = f_a0.real();
    report.hypothesis["f_a0_im"] = f_a0.imag();

    struct Row {
        int64_t p;
        cdouble value;
        double statistic;
    };
    std::vector<Row> rows;
    double fitted = 0.0;
    bool calibrated = false;
    for (int64_t p : primes) {
        const cdouble value = evaluator.at(a0 * p, last_tick).value();
        const double statistic =
            std::abs(value - f_a0) * std::pow(std::log(static_cast<double>(p)), eta);
        if (p <= fit.calibration_bound) {
            fitted = std::max(fitted, statistic);
            calibrated = true;
        }
        rows.push_back({p, value, statistic});
    }
    if (!calibrated) {
        report.verdict = Verdict::Fail;
        report.notes.push_back("no primes inside the calibration range");
        return report;
    }
    const double envelope = fit.margin * fitted + 1e-12;
    report.hypothesis["fitted_constant"] = fitted;

    bool all_within = true;
    for (const Row& row : rows) {
        Json stat_row = Json::object();
        stat_row["p"] = row.p;
        stat_row["f_re"] = row.value.real();
        stat_row["f_im"] = row.value.imag();
        stat_row["statistic"] = row.statistic;
        const bool within = row.statistic <= envelope;
        stat_row["within_envelope"] = within;
        all_within = all_within && within;
        report.statistics.push_back(std::move(stat_row));
    }
    report.verdict = all_within ? Verdict::Pass : Verdict::Fail;
    return report;
}

Report verify_theorem3(const RamanujanCoefficients& G, double eta,
                       std::span<const int64_t> a_values, int64_t q_limit,
                       const FactorTable& table, const FitOptions& fit) {
    Report report;
    report.claim = "theorem3";
    report.hypothesis["family"] = G.label();
    report.hypothesis["eta"] = eta;
    report.hypothesis["q_limit"] = q_limit;
    report.hypothesis["calibration_bound"] = fit.calibration_bound;
    report.hypothesis["margin"] = fit.margin;
    if (!decay_gate(G, &report)) return report;
    if (q_limit < 2) throw std::invalid_argument("verify_theorem3: q_limit must be >= 2");

    ExpansionEvaluator evaluator(G, q_limit, table);
    const std::vector<int64_t> last_tick{q_limit};
    const double g1_abs = std::abs(G(1, table));
    report.hypothesis["g1_abs"] = g1_abs;

    // The q = 1 term is split off exactly; log only ever sees d >= 2.
    const auto basis = [&](int64_t a) {
        double b = g1_abs + 1.0;
        for (int64_t d : divisors(a, table)) {
            if (d > 1) b += std::pow(std::log(static_cast<double>(d)), -eta);
        }
        return b;
    };

    double k_fitted = 0.0;
    for (int64_t a = 1; a <= fit.calibration_bound; ++a) {
        const double f_abs = std::abs(evaluator.at(a, last_tick).value());
        k_fitted = std::max(k_fitted, f_abs / basis(a));
    }
    report.hypothesis["k_fitted"] = k_fitted;

    // Precompute sums over multiples for the proof's intermediate inequality.
    std::vector<double> abs_coef(static_cast<size_t>(q_limit) + 1, 0.0);
    for (int64_t q = 1; q <= q_limit; ++q) abs_coef[static_cast<size_t>(q)] = std::abs(G(q, table));

    bool all_ok = true;
    for (int64_t a : a_values) {
        const cdouble f = evaluator.at(a, last_tick).value();
        const double b = basis(a);
        const double bound = k_fitted * fit.margin * b + 1e-12;
        const double ratio = std::abs(f) / bound;

        double lhs = 0.0;
        for (int64_t q = 2; q <= q_limit; ++q) {
            lhs += static_cast<double>(std::gcd(a, q)) * abs_coef[static_cast<size_t>(q)];
        }
        double rhs = 0.0;
        for (int64_t d : divisors(a, table)) {
            double inner = 0.0;
            for (int64_t q = d; q <= q_limit; q += d) {
                if (q >= 2) inner += abs_coef[static_cast<size_t>(q)];
            }
            rhs += static_cast<double>(d) * inner;
        }
        const bool intermediate_ok = lhs <= rhs * (1.0 + 1e-12) + 1e-12;

        Json row = Json::object();
        row["a"] = a;
        row["f_re"] = f.real();
        row["f_im"] = f.imag();
        row["basis"] = b;
        row["ratio"] = ratio;
        row["within_bound"] = ratio <= 1.0;
        row["intermediate_lhs"] = lhs;
        row["intermediate_rhs"] = rhs;
        row["intermediate_ok"] = intermediate_ok;
        all_ok = all_ok && ratio <= 1.0 && intermediate_ok;
        report.statistics.push_back(std::move(row));
    }
    report.verdict = all_ok ? Verdict::Pass : Verdict::Fail;
    return report;
}

Report verify_absolute_convergence(const RamanujanCoefficients& G,
                                   std::span<const int64_t> a_values, int64_t q_limit,
                                   const FactorTable& table) {
    Report report;
    report.claim = "remark8";
    report.hypothesis["family"] = G.label();
    report.hypothesis["q_limit"] = q_limit;
    const bool hypothesis_met = G.has_decay_hypothesis();
    report.hypothesis["eta_declared"] = G.decay_eta() ? Json(*G.decay_eta()) : Json();

    ExpansionEvaluator evaluator(G, q_limit, table);
    const std::vector<int64_t> ticks = dyadic_checkpoints(q_limit);
    const int64_t window_start = ticks.size() >= 2 ? ticks[ticks.size() - 2] : 0;
    const double harmonic = harmonic_window(window_start, q_limit);

    bool all_convergent = true;
    double max_ratio = 0.0;
    for (int64_t a : a_values) {
        const ExpansionEvaluation eval = evaluator.at(a, ticks);
        const SeriesProbe probe = classify_partial_sums(eval.abs_checkpoints, harmonic);
        const double abs_sum = eval.abs_checkpoints.back().second;
        const double ratio = abs_sum / (1.0 + static_cast<double>(num_divisors(a, table)));
        max_ratio = std::max(max_ratio, ratio);
        const bool convergent = probe.verdict == SeriesVerdict::PlausiblyFinite;
        all_convergent = all_convergent && convergent;

        Json row = Json::object();
        row["a"] = a;
        row["abs_sum"] = abs_sum;
        row["ratio_vs_1_plus_d"] = ratio;
        row["last_increment"] = probe.last_increment;
        row["series_verdict"] = to_string(probe.verdict);
        row["absolutely_convergent"] = convergent;
        report.statistics.push_back(std::move(row));
    }
    report.hypothesis["max_ratio"] = max_ratio;

    if (!hypothesis_met) {
        report.verdict = Verdict::HypothesisNotMet;
        report.notes.push_back("coefficient family '" + G.label() +
                               "' declares no eta-decay; probes reported without a claim");
        return report;
    }
    report.verdict = all_convergent ? Verdict::Pass : Verdict::Fail;
    return report;
}

} // namespace gre
