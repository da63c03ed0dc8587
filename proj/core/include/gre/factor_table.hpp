#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gre/errors.hpp"

namespace gre {

using std::int64_t;
using std::uint32_t;

/// Checked 64-bit helpers. Overflow throws std::overflow_error instead of
/// wrapping silently.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);
int64_t checked_lcm(int64_t a, int64_t b);

/// Smallest-prime-factor sieve, immutable after construction. One table backs
/// mu, phi, omega, the divisor functions and Lambda. Storage is 4 bytes per
/// entry, so the practical ceiling is about 1e8 entries (~400 MB); larger
/// requests throw resource_error up front.
class FactorTable {
public:
    static constexpr int64_t kMaxSieveLimit = 100'000'000;

    explicit FactorTable(int64_t limit);

    int64_t limit() const noexcept { return limit_; }

    /// Smallest prime factor of n (spf(1) == 1). Requires 1 <= n <= limit.
    uint32_t spf(int64_t n) const;

    bool is_prime(int64_t n) const;

    /// All primes <= limit, increasing.
    const std::vector<uint32_t>& primes() const noexcept { return primes_; }

private:
    int64_t limit_;
    std::vector<uint32_t> spf_;
    std::vector<uint32_t> primes_;
};

inline FactorTable build_factor_table(int64_t limit) { return FactorTable(limit); }

/// Prime factorization with exponents, primes increasing.
struct Factorization {
    int64_t n = 1;
    std::vector<std::pair<int64_t, int>> factors;
};

Factorization factorize(int64_t n, const FactorTable& table);

/// Moebius mu(n): 0 unless n is squarefree, else (-1)^omega(n).
int mobius(int64_t n, const FactorTable& table);

/// Euler totient phi(n).
int64_t totient(int64_t n, const FactorTable& table);

/// Number of distinct prime factors.
int omega(int64_t n, const FactorTable& table);

/// Divisor count d(n).
int64_t num_divisors(int64_t n, const FactorTable& table);

/// All divisors of n, sorted increasing.
std::vector<int64_t> divisors(int64_t n, const FactorTable& table);

/// Von Mangoldt Lambda(n): log p when n = p^k, else 0.
double von_mangoldt(int64_t n, const FactorTable& table);

/// The first `count` primes p with p = r (mod q), searched up to
/// `search_bound` (and never past table.limit()).
struct PrimesInAp {
    std::vector<int64_t> primes;
    bool exhausted_bound = false; // true when fewer than `count` were found
};

PrimesInAp primes_in_ap(int64_t q, int64_t r, int64_t count, int64_t search_bound,
                        const FactorTable& table);

} // namespace gre
