#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gre/errors.hpp"

namespace gre {

using std::int64_t;
using cdouble = std::complex<double>;

/// An evaluable arithmetic function a -> C with optional structure hints.
/// Hints are promises the caller makes about the function; transforms use
/// them for exact summation routes. Use make_periodic_view to attach a
/// validated period.
struct ArithmeticFunctionView {
    std::function<cdouble(int64_t)> evaluate;
    std::optional<int64_t> period_hint;
    std::optional<std::vector<int64_t>> support_hint; // complete nonzero support, sorted
    std::string label = "F";

    /// Evaluates at a >= 1; wraps any failure in evaluation_error carrying
    /// the offending argument.
    cdouble operator()(int64_t a) const;
};

/// Wraps f with a declared period, validating f(a) == f(a + period) for all
/// a in 1..3*period before attaching the hint. A violation throws
/// std::invalid_argument.
ArithmeticFunctionView make_periodic_view(std::function<cdouble(int64_t)> f, int64_t period,
                                          std::string label = "F");

} // namespace gre
