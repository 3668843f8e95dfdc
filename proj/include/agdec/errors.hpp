#pragma once

#include <stdexcept>
#include <string>

namespace agdec {

/// Base class for every error this library raises on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// field construction / arithmetic
struct NotPrime : Error {
    explicit NotPrime(const std::string& w) : Error("NotPrime: " + w) {}
};
struct ReducibleModulus : Error {
    explicit ReducibleModulus(const std::string& w) : Error("ReducibleModulus: " + w) {}
};
struct UnsupportedSize : Error {
    explicit UnsupportedSize(const std::string& w) : Error("UnsupportedSize: " + w) {}
};
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& w) : Error("FieldMismatch: " + w) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w) : Error("DivisionByZero: " + w) {}
};

// polynomials / series
struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& w) : Error("ZeroPolynomial: " + w) {}
};
struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& w) : Error("ArityMismatch: " + w) {}
};
struct EmptySupport : Error {
    explicit EmptySupport(const std::string& w) : Error("EmptySupport: " + w) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& w) : Error("DimensionMismatch: " + w) {}
};

// Cauchy problems
struct InfiniteDeltaSet : Error {
    explicit InfiniteDeltaSet(const std::string& w) : Error("InfiniteDeltaSet: " + w) {}
};
struct InconsistentBasis : Error {
    explicit InconsistentBasis(const std::string& w) : Error("InconsistentBasis: " + w) {}
};
struct InvalidInitialData : Error {
    explicit InvalidInitialData(const std::string& w) : Error("InvalidInitialData: " + w) {}
};

// codes
struct DegreeBoundViolation : Error {
    explicit DegreeBoundViolation(const std::string& w) : Error("DegreeBoundViolation: " + w) {}
};
struct TooFewPoints : Error {
    explicit TooFewPoints(const std::string& w) : Error("TooFewPoints: " + w) {}
};
struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& w) : Error("LengthMismatch: " + w) {}
};
struct CurveValidation : Error {
    explicit CurveValidation(const std::string& w) : Error("CurveValidation: " + w) {}
};

// decoding
struct EmptySyndromes : Error {
    explicit EmptySyndromes(const std::string& w) : Error("EmptySyndromes: " + w) {}
};
struct InitialDataOutsideZ : Error {
    explicit InitialDataOutsideZ(const std::string& w) : Error("InitialDataOutsideZ: " + w) {}
};
struct RankDeficient : Error {
    explicit RankDeficient(const std::string& w) : Error("RankDeficient: " + w) {}
};
struct Inconsistent : Error {
    explicit Inconsistent(const std::string& w) : Error("Inconsistent: " + w) {}
};

// channel simulation
struct WeightTooLarge : Error {
    explicit WeightTooLarge(const std::string& w) : Error("WeightTooLarge: " + w) {}
};

// file / CLI plumbing
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("ParseError: " + w) {}
};

}  // namespace agdec
