#include "gre/eratosthenes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gre/ramanujan_sum.hpp"

namespace gre {

std::vector<int64_t> dyadic_checkpoints(int64_t x) {
    std::vector<int64_t> ticks{x / 8, x / 4, x / 2, x};
    std::vector<int64_t> out;
    for (int64_t t : ticks) {
        if (t >= 1 && (out.empty() || t > out.back())) out.push_back(t);
    }
    return out;
}

namespace {

// Shared probe driver: |term(n)| for n = 1..x at dyadic checkpoints.
template <typename TermFn>
SeriesProbe run_probe(int64_t x, const SeriesProbeOptions& options, TermFn&& term) {
    if (x < 1) throw std::invalid_argument("series probe needs a range of at least 1");
    const std::vector<int64_t> ticks = dyadic_checkpoints(x);
    std::vector<std::pair<int64_t, double>> partial_sums;
    double sum = 0.0;
    size_t tick_index = 0;
    for (int64_t n = 1; n <= x; ++n) {
        sum += std::abs(term(n));
        if (tick_index < ticks.size() && n == ticks[tick_index]) {
            partial_sums.emplace_back(n, sum);
            ++tick_index;
        }
    }
    const int64_t window_start = ticks.size() >= 2 ? ticks[ticks.size() - 2] : 0;
    return classify_partial_sums(std::move(partial_sums), harmonic_window(window_start, x),
                                 options);
}

} // namespace

double harmonic_window(int64_t lo, int64_t hi) {
    double sum = 0.0;
    for (int64_t n = lo + 1; n <= hi; ++n) sum += 1.0 / static_cast<double>(n);
    return sum;
}

SeriesProbe classify_partial_sums(std::vector<std::pair<int64_t, double>> partial_sums,
                                  double harmonic_increment, const SeriesProbeOptions& options) {
    SeriesProbe probe;
    probe.partial_sums = std::move(partial_sums);
    probe.harmonic_increment = harmonic_increment;
    if (probe.partial_sums.size() < 2) {
        probe.verdict = SeriesVerdict::Inconclusive;
        return probe;
    }
    std::vector<double> increments;
    for (size_t i = 1; i < probe.partial_sums.size(); ++i) {
        increments.push_back(probe.partial_sums[i].second - probe.partial_sums[i - 1].second);
    }
    probe.last_increment = increments.back();

    if (harmonic_increment > 0.0 &&
        probe.last_increment >= options.harmonic_fraction * harmonic_increment) {
        probe.verdict = SeriesVerdict::Diverging;
        return probe;
    }
    bool non_increasing = true;
    for (size_t i = 1; i < increments.size(); ++i) {
        if (increments[i] > increments[i - 1] + 1e-15) non_increasing = false;
    }
    probe.verdict = (probe.last_increment < options.settle_tolerance && non_increasing)
                        ? SeriesVerdict::PlausiblyFinite
                        : SeriesVerdict::Inconclusive;
    return probe;
}

EratosthenesTable::EratosthenesTable(std::vector<cdouble> values, Provenance provenance,
                                     int64_t lucht_k_max)
    : values_(std::move(values)), provenance_(provenance), lucht_k_max_(lucht_k_max) {
    if (values_.size() < 2) {
        throw std::invalid_argument("EratosthenesTable needs at least d_max = 1");
    }
    for (int64_t d = d_max(); d >= 1; --d) {
        if (values_[static_cast<size_t>(d)] != cdouble{0.0, 0.0}) {
            last_nonzero_ = d;
            break;
        }
    }
}

cdouble EratosthenesTable::at(int64_t d) const {
    if (d < 1 || d > d_max()) {
        throw std::out_of_range("EratosthenesTable::at(" + std::to_string(d) + ") outside 1.." +
                                std::to_string(d_max()));
    }
    return values_[static_cast<size_t>(d)];
}

EratosthenesTable eratosthenes_transform(const ArithmeticFunctionView& F, int64_t d_max,
                                         const FactorTable& table) {
    if (d_max < 1) throw std::invalid_argument("eratosthenes_transform: d_max must be >= 1");
    if (d_max > table.limit()) {
        throw std::out_of_range("eratosthenes_transform: d_max exceeds sieve limit");
    }
    std::vector<cdouble> f_values(static_cast<size_t>(d_max) + 1);
    for (int64_t a = 1; a <= d_max; ++a) f_values[static_cast<size_t>(a)] = F(a);

    std::vector<int> mu(static_cast<size_t>(d_max) + 1);
    for (int64_t m = 1; m <= d_max; ++m) mu[static_cast<size_t>(m)] = mobius(m, table);

    // F'(em) += mu(m) F(e): each pair (e, m) contributes to d = em once, which
    // is exactly the divisor sum over e | d with m = d/e.
    std::vector<cdouble> out(static_cast<size_t>(d_max) + 1);
    for (int64_t e = 1; e <= d_max; ++e) {
        const cdouble fe = f_values[static_cast<size_t>(e)];
        if (fe == cdouble{0.0, 0.0}) continue;
        for (int64_t m = 1; e * m <= d_max; ++m) {
            if (mu[static_cast<size_t>(m)] == 0) continue;
            out[static_cast<size_t>(e * m)] += static_cast<double>(mu[static_cast<size_t>(m)]) * fe;
        }
    }
    return EratosthenesTable(std::move(out), Provenance::InvertedFromF);
}

cdouble inverse_eratosthenes(const EratosthenesTable& E, int64_t a) {
    if (a < 1) throw std::invalid_argument("inverse_eratosthenes: a must be >= 1");
    if (a > E.d_max()) {
        throw std::out_of_range("inverse_eratosthenes: a exceeds the table range");
    }
    cdouble sum{0.0, 0.0};
    for (int64_t d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        sum += E.at(d);
        if (d != a / d) sum += E.at(a / d);
    }
    return sum;
}

Json to_json(const CoefficientEstimate& estimate) {
    Json j = Json::object();
    j["q"] = estimate.q;
    j["value_re"] = estimate.value.real();
    j["value_im"] = estimate.value.imag();
    Json cps = Json::array();
    for (const auto& [x, v] : estimate.checkpoints) {
        Json cp = Json::array();
        cp.push_back(x);
        cp.push_back(v.real());
        cp.push_back(v.imag());
        cps.push_back(std::move(cp));
    }
    j["checkpoints"] = std::move(cps);
    j["tail_bound"] = estimate.tail_bound ? Json(*estimate.tail_bound) : Json();
    j["converged"] = estimate.converged;
    j["exact"] = estimate.exact;
    return j;
}

CoefficientEstimate wintner_coefficient(const EratosthenesTable& E, int64_t q, double tolerance) {
    if (q < 1) throw std::invalid_argument("wintner_coefficient: q must be >= 1");
    const int64_t d_max = E.d_max();
    const std::vector<int64_t> ticks = dyadic_checkpoints(d_max);

    CoefficientEstimate est;
    est.q = q;
    cdouble sum{0.0, 0.0};
    size_t tick_index = 0;
    for (int64_t tick : ticks) {
        const int64_t prev = tick_index == 0 ? 0 : ticks[tick_index - 1];
        ++tick_index;
        int64_t d = (prev / q + 1) * q;
        for (; d <= tick; d += q) sum += E.at(d) / static_cast<double>(d);
        est.checkpoints.emplace_back(tick, sum);
    }
    est.value = sum;
    const size_t n = est.checkpoints.size();
    est.exact = E.last_nonzero() * 2 <= d_max;
    est.converged =
        est.exact ||
        (n >= 2 && std::abs(est.checkpoints[n - 1].second - est.checkpoints[n - 2].second) <
                       tolerance);
    if (est.exact) est.tail_bound = 0.0;
    return est;
}

CoefficientEstimate carmichael_coefficient(const ArithmeticFunctionView& F, int64_t q,
                                           std::span<const int64_t> x_checkpoints,
                                           const FactorTable& table, double tolerance) {
    if (q < 1) throw std::invalid_argument("carmichael_coefficient: q must be >= 1");
    if (q > table.limit()) {
        throw std::out_of_range("carmichael_coefficient: q exceeds sieve limit");
    }
    const double phi_q = static_cast<double>(totient(q, table));

    // c_q is q-periodic; precompute one period.
    std::vector<int64_t> cq(static_cast<size_t>(q));
    for (int64_t a = 1; a <= q; ++a) {
        cq[static_cast<size_t>(a % q)] = cq_kluyver(q, a, table);
    }
    const auto cq_at = [&](int64_t a) { return static_cast<double>(cq[static_cast<size_t>(a % q)]); };

    CoefficientEstimate est;
    est.q = q;

    if (F.period_hint) {
        // F(a) c_q(a) has period lcm(period, q); one full-period average is
        // the exact limit.
        const int64_t x = checked_lcm(*F.period_hint, q);
        cdouble sum{0.0, 0.0};
        for (int64_t a = 1; a <= x; ++a) sum += F(a) * cq_at(a);
        est.value = sum / (phi_q * static_cast<double>(x));
        est.checkpoints.emplace_back(x, est.value);
        est.converged = true;
        est.exact = true;
        est.tail_bound = 0.0;
        return est;
    }

    if (x_checkpoints.empty()) {
        throw std::invalid_argument(
            "carmichael_coefficient needs x checkpoints when F has no period hint");
    }
    std::vector<int64_t> ticks(x_checkpoints.begin(), x_checkpoints.end());
    if (!std::is_sorted(ticks.begin(), ticks.end()) || ticks.front() < 1) {
        throw std::invalid_argument("carmichael x checkpoints must be ascending and >= 1");
    }
    cdouble sum{0.0, 0.0};
    size_t tick_index = 0;
    for (int64_t a = 1; a <= ticks.back(); ++a) {
        sum += F(a) * cq_at(a);
        while (tick_index < ticks.size() && a == ticks[tick_index]) {
            est.checkpoints.emplace_back(a, sum / (phi_q * static_cast<double>(a)));
            ++tick_index;
        }
    }
    est.value = est.checkpoints.back().second;
    const size_t n = est.checkpoints.size();
    est.converged = n >= 2 && std::abs(est.checkpoints[n - 1].second -
                                       est.checkpoints[n - 2].second) < tolerance;
    return est;
}

const char* to_string(SeriesVerdict v) {
    switch (v) {
        case SeriesVerdict::PlausiblyFinite: return "plausibly-finite";
        case SeriesVerdict::Diverging: return "diverging";
        case SeriesVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Json to_json(const SeriesProbe& probe) {
    Json j = Json::object();
    Json sums = Json::array();
    for (const auto& [n, s] : probe.partial_sums) {
        Json entry = Json::array();
        entry.push_back(n);
        entry.push_back(s);
        sums.push_back(std::move(entry));
    }
    j["partial_sums"] = std::move(sums);
    j["last_increment"] = probe.last_increment;
    j["harmonic_increment"] = probe.harmonic_increment;
    j["verdict"] = to_string(probe.verdict);
    return j;
}

SeriesProbe wintner_assumption_check(const EratosthenesTable& E,
                                     const SeriesProbeOptions& options) {
    return run_probe(E.d_max(), options, [&](int64_t d) {
        return std::abs(E.at(d)) / static_cast<double>(d);
    });
}

SeriesProbe weighted_coefficient_sum(const RamanujanCoefficients& G, int64_t q_max,
                                     const FactorTable& table,
                                     const SeriesProbeOptions& options) {
    if (q_max > table.limit()) {
        throw std::out_of_range("weighted_coefficient_sum: q_max exceeds sieve limit");
    }
    return run_probe(q_max, options, [&](int64_t q) {
        const double weight = std::pow(2.0, omega(q, table));
        return std::abs(G(q, table)) * weight;
    });
}

} // namespace gre
