#ifndef TSG_ERRORS_HPP
#define TSG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tsg {

// Bad input to an operation (out-of-range index, empty set where the
// definitions require a non-empty one, precondition not met by the caller).
struct ArgumentError : std::runtime_error {
    explicit ArgumentError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operand is in the wrong state for the operation (e.g. a table that is
// not associative where a ternary semigroup is required).
struct StateError : std::runtime_error {
    explicit StateError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal consistency guarantee failed: two routes that must agree
// disagreed, or a verified construction produced an invalid object.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tsg

#endif  // TSG_ERRORS_HPP
