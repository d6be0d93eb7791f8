#pragma once

#include <stdexcept>
#include <string>

namespace mmc {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched vector/matrix sizes or out-of-range indices.
struct DimensionError : Error {
    using Error::Error;
};

// Rejected (a,b,c) parameters. The kind distinguishes plain range
// violations from the two mathematically meaningful rejections.
struct InvalidParamsError : Error {
    enum class Kind { Range, NotFinite, NotMinuscule };
    Kind kind;
    InvalidParamsError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

// Input exceeds a configured size bound (orbit safety bound, brute-force
// vertex limit, ...).
struct SizeLimitError : Error {
    using Error::Error;
};

// An exact identity that is supposed to hold was refuted, or a proof
// obligation could not be discharged. Always either a bug or a documented
// erratum check.
struct CertificateError : Error {
    using Error::Error;
};

// Floating-point residual or guard-digit failure.
struct NumericError : Error {
    using Error::Error;
};

// Malformed textual input (fractions, JSON, CLI family strings).
struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Operation not defined for the given family (e.g. subset models of E6/E7).
struct UnsupportedError : Error {
    using Error::Error;
};

} // namespace mmc
