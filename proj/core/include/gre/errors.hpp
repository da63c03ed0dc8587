#pragma once

#include <stdexcept>
#include <string>

namespace gre {

/// Allocation failure or an exhausted search budget. Callers may retry with a
/// larger budget; the library never loops unboundedly on existence theorems.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A floating-point route disagreed with an exact route (or with itself)
/// beyond its validated tolerance.
class consistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failure raised while evaluating a user-supplied arithmetic function,
/// recording the offending argument.
class evaluation_error : public std::runtime_error {
public:
    evaluation_error(long long argument, const std::string& message)
        : std::runtime_error("evaluation failed at a=" + std::to_string(argument) + ": " + message),
          argument_(argument) {}

    long long argument() const noexcept { return argument_; }

private:
    long long argument_;
};

} // namespace gre
