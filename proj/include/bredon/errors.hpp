#pragma once

#include <stdexcept>
#include <string>

namespace bredon {

// Violated precondition: bad mask, duplicate member, inhomogeneous input,
// malformed syntax, dimension mismatch.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A computation would exceed a hard size cap (rank caps, monomial-count
// caps, matrix bit budget, exponent range). Thrown before work starts.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// Two routes that must agree by theorem disagree. Either an implementation
// bug or corrupted cached data; never swallowed.
class MismatchError : public std::runtime_error {
public:
    explicit MismatchError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bredon
