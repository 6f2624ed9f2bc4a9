#pragma once

#include <stdexcept>
#include <string>

namespace twistor {

// Malformed or out-of-contract input (parse failures, degenerate geometry).
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The input is fine but the requested object does not exist
// (empty linear system, parity obstruction).
class MathRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace twistor
