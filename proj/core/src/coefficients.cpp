#include "gre/coefficients.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gre {

RamanujanCoefficients RamanujanCoefficients::table(std::map<int64_t, cdouble> values,
                                                   std::string label) {
    for (const auto& [q, v] : values) {
        if (q < 1) throw std::invalid_argument("coefficient table keys must be >= 1");
    }
    RamanujanCoefficients g;
    g.kind_ = Kind::Table;
    g.label_ = std::move(label);
    g.support_end_ = values.empty() ? 0 : values.rbegin()->first;
    g.table_ = std::move(values);
    return g;
}

RamanujanCoefficients RamanujanCoefficients::ramanujan_r0() {
    RamanujanCoefficients g;
    g.kind_ = Kind::RamanujanR0;
    g.label_ = "ramanujan_r0";
    return g;
}

RamanujanCoefficients RamanujanCoefficients::hardy_h0() {
    RamanujanCoefficients g;
    g.kind_ = Kind::HardyH0;
    g.label_ = "hardy_h0";
    return g;
}

RamanujanCoefficients RamanujanCoefficients::divisor_log() {
    RamanujanCoefficients g;
    g.kind_ = Kind::DivisorLog;
    g.label_ = "divisor_log";
    return g;
}

RamanujanCoefficients RamanujanCoefficients::power_log_decay(double eta, double scale) {
    if (!(eta > 0.0)) {
        throw std::invalid_argument("power_log_decay requires eta > 0");
    }
    RamanujanCoefficients g;
    g.kind_ = Kind::PowerLogDecay;
    g.label_ = "power_log_decay";
    g.decay_eta_ = eta;
    g.decay_scale_ = scale;
    return g;
}

RamanujanCoefficients RamanujanCoefficients::custom(
    std::function<cdouble(int64_t, const FactorTable&)> f, std::string label,
    std::optional<double> decay_eta) {
    if (!f) throw std::invalid_argument("custom coefficients need an evaluator");
    if (decay_eta && !(*decay_eta > 0.0)) {
        throw std::invalid_argument("declared decay eta must be > 0");
    }
    RamanujanCoefficients g;
    g.kind_ = Kind::Custom;
    g.label_ = std::move(label);
    g.fn_ = std::move(f);
    g.decay_eta_ = decay_eta;
    return g;
}

cdouble RamanujanCoefficients::operator()(int64_t q, const FactorTable& table) const {
    if (q < 1) throw std::invalid_argument("coefficient index q must be >= 1");
    switch (kind_) {
        case Kind::Table: {
            const auto it = table_.find(q);
            return it == table_.end() ? cdouble{0.0, 0.0} : it->second;
        }
        case Kind::RamanujanR0:
            return cdouble{1.0 / static_cast<double>(q), 0.0};
        case Kind::HardyH0:
            return cdouble{1.0 / static_cast<double>(totient(q, table)), 0.0};
        case Kind::DivisorLog:
            return cdouble{-std::log(static_cast<double>(q)) / static_cast<double>(q), 0.0};
        case Kind::PowerLogDecay: {
            const double lq = std::log(static_cast<double>(q) + 1.0);
            return cdouble{decay_scale_ /
                               (static_cast<double>(q) * std::pow(lq, 1.0 + *decay_eta_)),
                           0.0};
        }
        case Kind::Custom:
            return fn_(q, table);
    }
    throw std::logic_error("unreachable coefficient kind");
}

} // namespace gre
