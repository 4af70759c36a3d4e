#pragma once

#include <stdexcept>
#include <string>

namespace shuffle {

// 64-bit exact arithmetic would wrap.  Nothing in the library saturates or
// wraps silently; this is always thrown instead.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// The F-expansion handed to fundamental_to_schur is not a symmetric function.
class NotSymmetricError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A bidegree slice of the conversion system solves only over the rationals.
class NonIntegralError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Cache file problems, classified so callers can react per kind.
class CacheError : public std::runtime_error {
public:
    enum class Kind { Io, Version, Corrupt };

    CacheError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

}  // namespace shuffle
