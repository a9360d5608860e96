#ifndef SIGMA_ERRORS_HPP
#define SIGMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sigma {

// The scaled recursion residue failed the mandatory mod-3 check at (i, j).
// Either the engine is broken or the integrality of the coefficients is not
// what it is supposed to be; both are show-stoppers.
class DivisibilityViolation : public std::runtime_error {
public:
    DivisibilityViolation(long i, long j)
        : std::runtime_error("recursion residue not divisible by 3 at (" +
                             std::to_string(i) + ", " + std::to_string(j) + ")"),
          i(i), j(j) {}
    long i;
    long j;
};

// Resume data disagrees with the requested computation (wrong bounds, or a
// stored value fails re-derivation from its predecessors).
class CheckpointMismatch : public std::runtime_error {
public:
    explicit CheckpointMismatch(const std::string& what)
        : std::runtime_error("checkpoint mismatch: " + what) {}
};

// Lookup of an in-quadrant index that has not been computed.
class NotComputed : public std::out_of_range {
public:
    NotComputed(long i, long j)
        : std::out_of_range("coefficient (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") has not been computed"),
          i(i), j(j) {}
    long i;
    long j;
};

// Malformed checkpoint text. `line` is 1-based; 0 means the failure is not
// tied to a specific line (e.g. the file could not be opened).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error("parse error at line " + std::to_string(line) +
                             ": " + what),
          line(line) {}
    std::size_t line;
};

// Checkpoint header declares a format this build does not understand.
class VersionError : public std::runtime_error {
public:
    explicit VersionError(const std::string& token)
        : std::runtime_error("unsupported checkpoint format: " + token) {}
};

class NotPrime : public std::invalid_argument {
public:
    explicit NotPrime(unsigned long p)
        : std::invalid_argument(std::to_string(p) + " is not prime"), p(p) {}
    unsigned long p;
};

// p-adic valuation of zero requested.
class ZeroValuation : public std::domain_error {
public:
    ZeroValuation() : std::domain_error("valuation of zero is undefined") {}
};

// A division that must be exact (by construction) left a remainder.
class IntegralityViolation : public std::runtime_error {
public:
    IntegralityViolation(long i, long j)
        : std::runtime_error("b(" + std::to_string(i) + ", " +
                             std::to_string(j) + ") is not an integer"),
          i(i), j(j) {}
    long i;
    long j;
};

// A series operation needs more tracked precision than its input carries.
class InsufficientPrecision : public std::logic_error {
public:
    explicit InsufficientPrecision(const std::string& what)
        : std::logic_error("insufficient series precision: " + what) {}
};

}  // namespace sigma

#endif  // SIGMA_ERRORS_HPP
