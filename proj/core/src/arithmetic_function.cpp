#include "gre/arithmetic_function.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gre {

cdouble ArithmeticFunctionView::operator()(int64_t a) const {
    if (a < 1) {
        throw std::invalid_argument("arithmetic functions are defined on a >= 1, got " +
                                    std::to_string(a));
    }
    if (!evaluate) {
        throw std::invalid_argument("arithmetic function view '" + label + "' has no evaluator");
    }
    try {
        return evaluate(a);
    } catch (const evaluation_error&) {
        throw;
    } catch (const std::exception& e) {
        throw evaluation_error(a, e.what());
    }
}

ArithmeticFunctionView make_periodic_view(std::function<cdouble(int64_t)> f, int64_t period,
                                          std::string label) {
    if (period < 1) {
        throw std::invalid_argument("period must be >= 1");
    }
    if (!f) {
        throw std::invalid_argument("make_periodic_view: missing evaluator");
    }
    for (int64_t a = 1; a <= 3 * period; ++a) {
        const cdouble lhs = f(a);
        const cdouble rhs = f(a + period);
        if (std::abs(lhs - rhs) > 1e-9) {
            throw std::invalid_argument("declared period " + std::to_string(period) +
                                        " fails at a=" + std::to_string(a));
        }
    }
    ArithmeticFunctionView view;
    view.evaluate = std::move(f);
    view.period_hint = period;
    view.label = std::move(label);
    return view;
}

} // namespace gre
