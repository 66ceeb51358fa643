#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace locfac {

// Base class for all domain failures.  Each carries a stable snake_case
// code string; the CLI prints it in the error report so callers can
// dispatch without parsing the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class ZeroDenominatorError : public Error {
public:
    explicit ZeroDenominatorError(const std::string& msg)
        : Error("zero_denominator", msg) {}
};

class NonSquareError : public Error {
public:
    explicit NonSquareError(const std::string& msg)
        : Error("non_square", msg) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& msg)
        : Error("dimension_mismatch", msg) {}
};

class EvenOrCompositeModulusError : public Error {
public:
    explicit EvenOrCompositeModulusError(const std::string& msg)
        : Error("even_or_composite_modulus", msg) {}
};

class EvenPrimeError : public Error {
public:
    explicit EvenPrimeError(const std::string& msg)
        : Error("even_prime", msg) {}
};

class BadReductionError : public Error {
public:
    explicit BadReductionError(const std::string& msg)
        : Error("bad_reduction", msg) {}
};

class EnumerationBoundError : public Error {
public:
    explicit EnumerationBoundError(const std::string& msg)
        : Error("enumeration_bound", msg) {}
};

class NegativeEntryError : public Error {
public:
    explicit NegativeEntryError(const std::string& msg)
        : Error("negative_entry", msg) {}
};

class BandViolationError : public Error {
public:
    explicit BandViolationError(const std::string& msg)
        : Error("band_violation", msg) {}
};

class NonUnitConstantTermError : public Error {
public:
    explicit NonUnitConstantTermError(const std::string& msg)
        : Error("non_unit_constant_term", msg) {}
};

class DirectionOutOfRangeError : public Error {
public:
    explicit DirectionOutOfRangeError(const std::string& msg)
        : Error("direction_out_of_range", msg) {}
};

class NotSkewSymmetricError : public Error {
public:
    explicit NotSkewSymmetricError(const std::string& msg)
        : Error("not_skew_symmetric", msg) {}
};

class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg) : Error("pole", msg) {}

protected:
    PoleError(std::string code, const std::string& msg)
        : Error(std::move(code), msg) {}
};

// Distinguished because the point s = 1 is the one pole callers probe
// deliberately (residue checks, factor cancellation tests).
class PoleAtOneError : public PoleError {
public:
    explicit PoleAtOneError(const std::string& msg)
        : PoleError("pole_at_one", msg) {}
};

class ConvergenceDomainError : public Error {
public:
    explicit ConvergenceDomainError(const std::string& msg)
        : Error("convergence_domain", msg) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("domain", msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse", msg) {}
};

} // namespace locfac
