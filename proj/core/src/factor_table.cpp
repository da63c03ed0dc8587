#include "gre/factor_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gre {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in add");
    }
    return out;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in mul");
    }
    return out;
}

int64_t checked_lcm(int64_t a, int64_t b) {
    if (a <= 0 || b <= 0) {
        throw std::invalid_argument("lcm requires positive arguments");
    }
    const int64_t g = std::gcd(a, b);
    return checked_mul(a / g, b);
}

FactorTable::FactorTable(int64_t limit) : limit_(limit) {
    if (limit < 1) {
        throw std::invalid_argument("sieve limit must be >= 1");
    }
    if (limit > kMaxSieveLimit) {
        throw resource_error("sieve limit " + std::to_string(limit) + " exceeds supported ceiling " +
                             std::to_string(kMaxSieveLimit));
    }
    try {
        spf_.assign(static_cast<size_t>(limit) + 1, 0);
    } catch (const std::bad_alloc&) {
        throw resource_error("sieve allocation failed for limit " + std::to_string(limit));
    }
    spf_[0] = 0;
    if (limit >= 1) spf_[1] = 1;
    // Linear sieve: every composite is struck exactly once, by its smallest
    // prime factor.
    for (int64_t n = 2; n <= limit; ++n) {
        if (spf_[static_cast<size_t>(n)] == 0) {
            spf_[static_cast<size_t>(n)] = static_cast<uint32_t>(n);
            primes_.push_back(static_cast<uint32_t>(n));
        }
        const uint32_t spf_n = spf_[static_cast<size_t>(n)];
        for (uint32_t p : primes_) {
            if (p > spf_n) break;
            const int64_t m = static_cast<int64_t>(p) * n;
            if (m > limit) break;
            spf_[static_cast<size_t>(m)] = p;
        }
    }
}

uint32_t FactorTable::spf(int64_t n) const {
    if (n < 1 || n > limit_) {
        throw std::out_of_range("spf argument " + std::to_string(n) + " outside [1, " +
                                std::to_string(limit_) + "]");
    }
    return spf_[static_cast<size_t>(n)];
}

bool FactorTable::is_prime(int64_t n) const {
    if (n < 1 || n > limit_) {
        throw std::out_of_range("is_prime argument " + std::to_string(n) + " outside [1, " +
                                std::to_string(limit_) + "]");
    }
    return n >= 2 && spf_[static_cast<size_t>(n)] == static_cast<uint32_t>(n);
}

Factorization factorize(int64_t n, const FactorTable& table) {
    if (n < 1 || n > table.limit()) {
        throw std::out_of_range("factorize argument " + std::to_string(n) + " outside [1, " +
                                std::to_string(table.limit()) + "]");
    }
    Factorization f;
    f.n = n;
    int64_t m = n;
    while (m > 1) {
        const int64_t p = table.spf(m);
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    return f;
}

int mobius(int64_t n, const FactorTable& table) {
    const Factorization f = factorize(n, table);
    for (const auto& [p, e] : f.factors) {
        if (e > 1) return 0;
    }
    return (f.factors.size() % 2 == 0) ? 1 : -1;
}

int64_t totient(int64_t n, const FactorTable& table) {
    const Factorization f = factorize(n, table);
    int64_t phi = n;
    for (const auto& [p, e] : f.factors) {
        phi = phi / p * (p - 1);
    }
    return phi;
}

int omega(int64_t n, const FactorTable& table) {
    return static_cast<int>(factorize(n, table).factors.size());
}

int64_t num_divisors(int64_t n, const FactorTable& table) {
    const Factorization f = factorize(n, table);
    int64_t count = 1;
    for (const auto& [p, e] : f.factors) {
        count = checked_mul(count, e + 1);
    }
    return count;
}

std::vector<int64_t> divisors(int64_t n, const FactorTable& table) {
    const Factorization f = factorize(n, table);
    std::vector<int64_t> divs{1};
    for (const auto& [p, e] : f.factors) {
        const size_t base = divs.size();
        int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk = checked_mul(pk, p);
            for (size_t i = 0; i < base; ++i) {
                divs.push_back(checked_mul(divs[i], pk));
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

double von_mangoldt(int64_t n, const FactorTable& table) {
    const Factorization f = factorize(n, table);
    if (f.factors.size() != 1) return 0.0;
    return std::log(static_cast<double>(f.factors.front().first));
}

PrimesInAp primes_in_ap(int64_t q, int64_t r, int64_t count, int64_t search_bound,
                        const FactorTable& table) {
    if (q < 1) throw std::invalid_argument("modulus must be >= 1");
    if (count < 0) throw std::invalid_argument("prime count must be >= 0");
    if (r < 0 || r >= q) throw std::invalid_argument("residue must satisfy 0 <= r < q");
    if (std::gcd(q, r == 0 ? q : r) != 1) {
        throw std::invalid_argument("residue class " + std::to_string(r) + " mod " +
                                    std::to_string(q) + " contains at most one prime");
    }
    PrimesInAp out;
    const int64_t bound = std::min(search_bound, table.limit());
    for (uint32_t p : table.primes()) {
        if (p > bound) break;
        if (p % q == static_cast<uint64_t>(r)) {
            out.primes.push_back(p);
            if (static_cast<int64_t>(out.primes.size()) == count) return out;
        }
    }
    out.exhausted_bound = static_cast<int64_t>(out.primes.size()) < count;
    return out;
}

} // namespace gre
