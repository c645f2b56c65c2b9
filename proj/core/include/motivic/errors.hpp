#pragma once

#include <stdexcept>
#include <string>

namespace motivic {

/// Base class for recoverable errors caused by bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Ambient dimension outside {1, 2}. Punctual Quot invariants in dimension
/// three and higher are not known in closed form.
class UnsupportedDimension : public Error {
public:
    explicit UnsupportedDimension(int d)
        : Error("unsupported ambient dimension d=" + std::to_string(d) +
                ": only curves (d=1) and surfaces (d=2) are supported; punctual Quot "
                "invariants for d>=3 are an open problem"),
          dimension_(d)
    {
    }

    int dimension() const noexcept { return dimension_; }

private:
    int dimension_;
};

/// A brute-force enumeration would exceed its hard size cap.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. This always indicates a bug (or a
/// truncation order too low for the requested computation), never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what)
{
    if (!condition) {
        throw InvariantViolation(what);
    }
}

inline void require(bool condition, const std::string& what)
{
    if (!condition) {
        throw PreconditionError(what);
    }
}

} // namespace motivic
