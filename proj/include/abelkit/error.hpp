#pragma once

#include <stdexcept>
#include <string>

namespace abelkit {

// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid arguments that a caller could have checked beforehand.
class DomainError : public Error {
public:
    using Error::Error;
};

// A computation that could not reach the requested accuracy or solve a step.
class NumericError : public Error {
public:
    using Error::Error;
};

#define ABELKIT_DEFINE_ERROR(Name, Base)           \
    class Name : public Base {                     \
    public:                                        \
        explicit Name(const std::string &what)     \
            : Base(#Name ": " + what) {}           \
    }

// exact-series
ABELKIT_DEFINE_ERROR(BothSymbolic, DomainError);
ABELKIT_DEFINE_ERROR(BeyondTruncation, DomainError);
ABELKIT_DEFINE_ERROR(NonzeroConstantTerm, DomainError);
ABELKIT_DEFINE_ERROR(ZeroLeadingCoefficient, DomainError);
ABELKIT_DEFINE_ERROR(GridMismatch, DomainError);
ABELKIT_DEFINE_ERROR(ParseError, DomainError);

// catalog
ABELKIT_DEFINE_ERROR(UnknownFunction, DomainError);
ABELKIT_DEFINE_ERROR(OutOfBasin, DomainError);
ABELKIT_DEFINE_ERROR(OutOfRange, DomainError);

// solvers and evaluators
ABELKIT_DEFINE_ERROR(DegenerateSolve, NumericError);
ABELKIT_DEFINE_ERROR(TruncationTooSmall, DomainError);
ABELKIT_DEFINE_ERROR(PrecisionUnreachable, NumericError);
ABELKIT_DEFINE_ERROR(ZeroArgument, DomainError);
ABELKIT_DEFINE_ERROR(InsufficientSamples, NumericError);

#undef ABELKIT_DEFINE_ERROR

} // namespace abelkit
