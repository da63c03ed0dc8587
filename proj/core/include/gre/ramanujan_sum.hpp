#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gre/factor_table.hpp"

namespace gre {

/// Reduces a into the window 1..q, reading a = 0 (mod q) as q itself. This is
/// the lookup convention for shifted arguments like c_q(a - 1).
int64_t reduce_into_period(int64_t a, int64_t q);

/// c_q(a) as the plain exponential sum over residues coprime to q, rounded to
/// the nearest integer. This is the floating-point oracle for the exact
/// methods: if the pre-rounding residual exceeds 1e-6 a consistency_error is
/// thrown. Validated for q up to 1e5.
int64_t cq_direct(int64_t q, int64_t a);

/// Hoelder's evaluation: c_q(a) = mu(q/g) phi(q) / phi(q/g) with g = gcd(a, q).
/// Exact in integers.
int64_t cq_holder(int64_t q, int64_t a, const FactorTable& table);

/// Kluyver's evaluation: c_q(a) = sum over d | gcd(a, q) of d mu(q/d).
/// Exact in integers; this is the production path.
int64_t cq_kluyver(int64_t q, int64_t a, const FactorTable& table);

/// Dense table of c_q(a) for 1 <= q <= q_max, 1 <= a <= a_max. Construction
/// spot-checks about 1% of entries against cq_direct and throws
/// consistency_error on any mismatch.
class RamanujanSumTable {
public:
    RamanujanSumTable(int64_t q_max, int64_t a_max, std::vector<int64_t> values);

    int64_t q_max() const noexcept { return q_max_; }
    int64_t a_max() const noexcept { return a_max_; }

    int64_t at(int64_t q, int64_t a) const;

    /// CSV with header "q,a,c", rows in q-major order.
    void write_csv(std::ostream& os) const;

private:
    int64_t q_max_;
    int64_t a_max_;
    std::vector<int64_t> values_;
};

RamanujanSumTable build_cq_table(int64_t q_max, int64_t a_max, const FactorTable& table);

} // namespace gre
