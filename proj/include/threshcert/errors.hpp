#pragma once

#include <stdexcept>
#include <string>

namespace threshcert {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Requested order is below the minimum order of the family.
class OrderTooSmall : public Error {
public:
    using Error::Error;
};

/// The T-subgraph is undefined (edge surplus zero).
class Degenerate : public Error {
public:
    using Error::Error;
};

/// The operation does not cover this (k, t) regime, e.g. t = 0.
class InvalidRegime : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

class PoleAtPoint : public Error {
public:
    using Error::Error;
};

/// Interval refinement ran out of bisections before a decision was reached.
/// Never converted into a guess.
class RefinementBudgetExceeded : public Error {
public:
    using Error::Error;
};

class OutOfProvenRange : public Error {
public:
    using Error::Error;
};

/// A candidate equals one of the two extremal step sequences.
class ExcludedCandidate : public Error {
public:
    using Error::Error;
};

class StructureViolation : public Error {
public:
    using Error::Error;
};

class NotConnected : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// One of the seven verification steps did not pass for a candidate.
class VerificationFailed : public Error {
public:
    VerificationFailed(int step, std::string detail)
        : Error("verification step " + std::to_string(step) + " failed: " + detail),
          step_(step),
          detail_(std::move(detail)) {}

    int step() const noexcept { return step_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    int step_;
    std::string detail_;
};

}  // namespace threshcert
