#include "gre/ramanujan_sum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

namespace gre {

namespace {

void require_positive(int64_t q, int64_t a, const char* who) {
    if (q < 1) {
        throw std::invalid_argument(std::string(who) + ": modulus q must be >= 1, got " +
                                    std::to_string(q));
    }
    if (a < 1) {
        throw std::invalid_argument(std::string(who) + ": argument a must be >= 1, got " +
                                    std::to_string(a) + " (reduce a mod q into 1..q first)");
    }
}

} // namespace

int64_t reduce_into_period(int64_t a, int64_t q) {
    if (q < 1) throw std::invalid_argument("reduce_into_period: modulus must be >= 1");
    const int64_t r = ((a % q) + q) % q;
    return r == 0 ? q : r;
}

int64_t cq_direct(int64_t q, int64_t a) {
    require_positive(q, a, "cq_direct");
    if (q > 100'000) {
        throw std::out_of_range("cq_direct validated only for q <= 1e5");
    }
    // sum over 1 <= j <= q, gcd(j, q) = 1 of cos(2 pi j a / q); the sine parts
    // cancel in exact arithmetic, so only the real part is accumulated. The
    // phase j a mod q is reduced in integers so every cosine argument stays in
    // [0, 2 pi) and rounding error cannot pile up with j.
    double sum = 0.0;
    const int64_t r = a % q;
    const double scale = 2.0 * std::numbers::pi / static_cast<double>(q);
    for (int64_t j = 1; j <= q; ++j) {
        if (std::gcd(j, q) != 1) continue;
        sum += std::cos(scale * static_cast<double>((r * j) % q));
    }
    const double rounded = std::nearbyint(sum);
    if (std::abs(sum - rounded) > 1e-6) {
        throw consistency_error("cq_direct residual " + std::to_string(std::abs(sum - rounded)) +
                                " above 1e-6 at q=" + std::to_string(q) + ", a=" + std::to_string(a));
    }
    return static_cast<int64_t>(rounded);
}

int64_t cq_holder(int64_t q, int64_t a, const FactorTable& table) {
    require_positive(q, a, "cq_holder");
    if (q > table.limit()) {
        throw std::out_of_range("cq_holder: q exceeds sieve limit");
    }
    const int64_t g = std::gcd(a, q);
    const int mu = mobius(q / g, table);
    if (mu == 0) return 0;
    return mu * (totient(q, table) / totient(q / g, table));
}

int64_t cq_kluyver(int64_t q, int64_t a, const FactorTable& table) {
    require_positive(q, a, "cq_kluyver");
    if (q > table.limit()) {
        throw std::out_of_range("cq_kluyver: q exceeds sieve limit");
    }
    const int64_t g = std::gcd(a, q);
    int64_t sum = 0;
    for (int64_t d : divisors(g, table)) {
        sum = checked_add(sum, checked_mul(d, mobius(q / d, table)));
    }
    return sum;
}

RamanujanSumTable::RamanujanSumTable(int64_t q_max, int64_t a_max, std::vector<int64_t> values)
    : q_max_(q_max), a_max_(a_max), values_(std::move(values)) {
    if (q_max < 1 || a_max < 1) {
        throw std::invalid_argument("RamanujanSumTable: bounds must be >= 1");
    }
    if (values_.size() != static_cast<size_t>(q_max) * static_cast<size_t>(a_max)) {
        throw std::invalid_argument("RamanujanSumTable: value buffer has wrong size");
    }
}

int64_t RamanujanSumTable::at(int64_t q, int64_t a) const {
    if (q < 1 || q > q_max_ || a < 1 || a > a_max_) {
        throw std::out_of_range("RamanujanSumTable::at(" + std::to_string(q) + ", " +
                                std::to_string(a) + ") outside table");
    }
    return values_[static_cast<size_t>(q - 1) * static_cast<size_t>(a_max_) +
                   static_cast<size_t>(a - 1)];
}

void RamanujanSumTable::write_csv(std::ostream& os) const {
    os << "q,a,c\n";
    for (int64_t q = 1; q <= q_max_; ++q) {
        for (int64_t a = 1; a <= a_max_; ++a) {
            os << q << ',' << a << ',' << at(q, a) << '\n';
        }
    }
}

RamanujanSumTable build_cq_table(int64_t q_max, int64_t a_max, const FactorTable& table) {
    if (q_max < 1 || a_max < 1) {
        throw std::invalid_argument("build_cq_table: bounds must be >= 1");
    }
    if (q_max > table.limit()) {
        throw std::out_of_range("build_cq_table: q_max exceeds sieve limit");
    }
    std::vector<int64_t> values;
    try {
        values.reserve(static_cast<size_t>(q_max) * static_cast<size_t>(a_max));
    } catch (const std::bad_alloc&) {
        throw resource_error("build_cq_table: allocation failed");
    }
    for (int64_t q = 1; q <= q_max; ++q) {
        for (int64_t a = 1; a <= a_max; ++a) {
            values.push_back(cq_kluyver(q, a, table));
        }
    }
    RamanujanSumTable out(q_max, a_max, std::move(values));

    // Spot-check ~1% of the grid against the independent oracle. The sampler
    // is a fixed-seed mt19937_64 so construction stays deterministic.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    const uint64_t cells = static_cast<uint64_t>(q_max) * static_cast<uint64_t>(a_max);
    const uint64_t samples = std::max<uint64_t>(1, cells / 100);
    for (uint64_t s = 0; s < samples; ++s) {
        const int64_t q = 1 + static_cast<int64_t>(rng() % static_cast<uint64_t>(q_max));
        const int64_t a = 1 + static_cast<int64_t>(rng() % static_cast<uint64_t>(a_max));
        const int64_t expect = cq_direct(q, a);
        if (out.at(q, a) != expect) {
            throw consistency_error("build_cq_table: method disagreement at q=" + std::to_string(q) +
                                    ", a=" + std::to_string(a));
        }
    }
    return out;
}

} // namespace gre
