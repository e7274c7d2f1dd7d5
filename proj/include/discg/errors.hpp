#pragma once

#include <stdexcept>
#include <string>

namespace discg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A LocalOracle was queried for a subset that does not contain its owner.
class VisibilityViolation : public Error {
public:
    using Error::Error;
};

/// Brute-force routine called on a ground set beyond its enumeration guard.
class GroundSetTooLarge : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidGraph : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Raised by the simplex solver. Neither unboundedness nor pivot-cap overrun
/// can happen on a well-formed problem, so seeing one means a bug.
class LpError : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, int rounds) : Error(what), rounds_(rounds) {}
    int rounds() const noexcept { return rounds_; }

private:
    int rounds_;
};

}  // namespace discg
