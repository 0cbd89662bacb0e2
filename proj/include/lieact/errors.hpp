#pragma once

#include <stdexcept>
#include <string>

namespace lieact {

// Base class for everything this library throws on purpose.  Callers that
// want a single catch site can grab lieact::Error; the subclasses exist so
// tests and the CLI can react to specific failure kinds.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape disagreements in the exact linear algebra layer (ambient dimension
// mismatches, non-square input where a square matrix is required, ...).
struct DimensionError : Error {
    using Error::Error;
};

// Structure constants fail antisymmetry, the Jacobi identity, or the
// attached matrix representation does not realize the bracket.
struct ValidationError : Error {
    int i = 0, j = 0, k = 0;   // offending triple, 1-based, 0 when unused
    ValidationError(const std::string& msg, int i_, int j_, int k_ = 0)
        : Error(msg), i(i_), j(j_), k(k_) {}
};

// Algebra expression text could not be parsed.  offset is the byte position
// of the first offending character.
struct ParseError : Error {
    std::size_t offset = 0;
    ParseError(const std::string& msg, std::size_t off) : Error(msg), offset(off) {}
};

// Structurally valid expression that asks for something the catalog cannot
// build (wrong argument count, field on a family that takes none, m out of
// range).
struct ArityError : ParseError {
    using ParseError::ParseError;
};

// Expression names a family the catalog does not know.
struct UnknownNameError : ParseError {
    using ParseError::ParseError;
};

// A .lie structure-constant file is malformed.  line is 1-based.
struct FileFormatError : Error {
    int line = 0;
    FileFormatError(const std::string& msg, int line_) : Error(msg), line(line_) {}
};

// A manifold descriptor is internally inconsistent.
struct DescriptorError : Error {
    using Error::Error;
};

// The rule engine derived both POSSIBLE and IMPOSSIBLE for the same query
// at the same regularity.  This signals a bug in the rule table or a broken
// input profile, so it is an exception rather than a verdict.
struct ContradictionError : Error {
    using Error::Error;
};

// Root isolation could not certify pairwise disjoint disks within the
// precision escalation cap.
struct IsolationError : Error {
    using Error::Error;
};

// The requested working precision is too small for the requested
// integer-relation height bound.
struct PrecisionError : Error {
    using Error::Error;
};

}  // namespace lieact
