#pragma once

#include <stdexcept>
#include <string>

namespace specarb {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDivisor : Error {
    ZeroDivisor() : Error("division by the zero polynomial") {}
};

struct EmptyList : Error {
    EmptyList() : Error("empty input list") {}
};

struct ZeroInput : Error {
    ZeroInput() : Error("zero polynomial not allowed here") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("degree of the zero polynomial is undefined") {}
};

struct MissingAssignment : Error {
    explicit MissingAssignment(const std::string& what) : Error(what) {}
};

struct ContextMismatch : Error {
    ContextMismatch() : Error("operands live in different variable contexts") {}
};

struct DimensionTooLarge : Error {
    int n;
    DimensionTooLarge(int n_, const std::string& what) : Error(what), n(n_) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct ZeroParameter : Error {
    int index;  // 1-based, matching the parameter names x1..x8
    explicit ZeroParameter(int i)
        : Error("parameter x" + std::to_string(i) + " must be nonzero"), index(i) {}
};

struct WrongPattern : Error {
    explicit WrongPattern(const std::string& what) : Error(what) {}
};

struct ZeroChainEntry : Error {
    explicit ZeroChainEntry(int i)
        : Error("chain entry (" + std::to_string(i) + "," + std::to_string(i + 1) +
                ") is zero; the diagonal normalization needs it nonzero") {}
};

struct ZeroScale : Error {
    ZeroScale() : Error("scaling factor must be nonzero") {}
};

struct CertificateFailed : Error {
    explicit CertificateFailed(const std::string& what) : Error(what) {}
};

struct NotTriangular : Error {
    explicit NotTriangular(const std::string& what) : Error(what) {}
};

struct WrongArity : Error {
    explicit WrongArity(const std::string& what) : Error(what) {}
};

struct OddCardinality : Error {
    OddCardinality() : Error("spectrum for the paired blocks needs even cardinality") {}
};

struct BadCardinality : Error {
    explicit BadCardinality(const std::string& what) : Error(what) {}
};

struct SelectionFailed : Error {
    long tried;
    explicit SelectionFailed(long k, const std::string& what)
        : Error(what), tried(k) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace specarb
