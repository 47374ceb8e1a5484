#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace funcid {

/// Caller misuse: mismatched rings, bad indices, malformed arguments.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Inversion or division of an exact zero.
class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Operation that the given ring cannot support (e.g. enumerating an infinite ring).
class UnsupportedOperation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A stated precondition does not hold for the given arguments.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Work refused because it exceeds a configured cap; carries the exact count.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(const std::string& what, std::uint64_t count)
        : std::runtime_error(what), count_(count) {}

    std::uint64_t count() const { return count_; }

private:
    std::uint64_t count_;
};

}  // namespace funcid
