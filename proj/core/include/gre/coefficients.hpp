#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "gre/arithmetic_function.hpp"
#include "gre/factor_table.hpp"

namespace gre {

/// A coefficient family q -> G(q) feeding Ramanujan expansions
/// sum over q of G(q) c_q(a). Built-in families:
///   ramanujan_r0:     G(q) = 1/q
///   hardy_h0:         G(q) = 1/phi(q)
///   divisor_log:      G(q) = -log(q)/q
///   power_log_decay:  G(q) = scale / (q (log(q+1))^(1+eta)), eta > 0
/// plus finite tables and custom closures. decay_eta() reports the eta for
/// which the family satisfies the decay hypothesis
/// |G(q)| = O(1 / (q (log q)^(1+eta))); finite tables satisfy it vacuously
/// and report support_end() instead.
class RamanujanCoefficients {
public:
    enum class Kind { Table, RamanujanR0, HardyH0, DivisorLog, PowerLogDecay, Custom };

    static RamanujanCoefficients table(std::map<int64_t, cdouble> values,
                                       std::string label = "table");
    static RamanujanCoefficients ramanujan_r0();
    static RamanujanCoefficients hardy_h0();
    static RamanujanCoefficients divisor_log();
    static RamanujanCoefficients power_log_decay(double eta, double scale = 1.0);
    static RamanujanCoefficients custom(std::function<cdouble(int64_t, const FactorTable&)> f,
                                        std::string label,
                                        std::optional<double> decay_eta = std::nullopt);

    cdouble operator()(int64_t q, const FactorTable& table) const;

    Kind kind() const noexcept { return kind_; }
    const std::string& label() const noexcept { return label_; }

    /// Declared decay exponent, when the family carries one.
    std::optional<double> decay_eta() const noexcept { return decay_eta_; }

    /// Largest supported q for finite tables; nullopt otherwise.
    std::optional<int64_t> support_end() const noexcept { return support_end_; }

    /// Scale constant of power_log_decay (1.0 for every other family).
    double decay_scale() const noexcept { return decay_scale_; }

    /// True when the family declares enough decay structure for the
    /// eta-hypothesis verifiers (an eta or a finite support).
    bool has_decay_hypothesis() const noexcept {
        return decay_eta_.has_value() || support_end_.has_value();
    }

private:
    RamanujanCoefficients() = default;

    Kind kind_ = Kind::Custom;
    std::string label_;
    std::map<int64_t, cdouble> table_;
    std::function<cdouble(int64_t, const FactorTable&)> fn_;
    std::optional<double> decay_eta_;
    std::optional<int64_t> support_end_;
    double decay_scale_ = 1.0;
};

} // namespace gre
