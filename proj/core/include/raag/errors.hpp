#pragma once

#include <stdexcept>
#include <string>

namespace raag {

/// Malformed input text (graph files, DOT, word tokens).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input exceeds a hard resource limit (vertex capacity, size guards).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violation: unknown vertex, cross-graph operands, identity
/// where a non-trivial element is required, and similar caller errors.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace raag
