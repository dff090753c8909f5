#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobx {

/* All library errors derive from Error so callers can catch the whole
 * family at once.  Every throw site supplies a witness string naming the
 * offending entry, index, or token. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedRational : Error {
    using Error::Error;
};

struct ZeroDenominator : Error {
    using Error::Error;
};

/* Matrix dimensions or tensor-leg lists do not line up. */
struct ShapeMismatch : Error {
    using Error::Error;
};

struct Singular : Error {
    using Error::Error;
};

/* Input data has the wrong sizes (structure constants, coordinate vectors). */
struct DimensionMismatch : Error {
    using Error::Error;
};

/* The bilinear form induced by a counit candidate is not invertible. */
struct DegenerateForm : Error {
    using Error::Error;
};

/* A required algebraic identity failed on concrete data. */
struct AxiomFailure : Error {
    using Error::Error;
};

/* Cells or adjunctions were combined across non-matching objects. */
struct ObjectMismatch : Error {
    using Error::Error;
};

struct NotCommutative : Error {
    using Error::Error;
};

/* Diagram-word scanner error; position is a 0-based byte offset. */
struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what), position(pos) {}
    std::size_t position;
};

/* Strand count between consecutive slices does not match; slice is 1-based. */
struct StrandMismatch : Error {
    StrandMismatch(const std::string& what, std::size_t slice, std::size_t want,
                   std::size_t got)
        : Error(what), slice_index(slice), expected(want), actual(got) {}
    std::size_t slice_index;
    std::size_t expected;
    std::size_t actual;
};

} // namespace frobx
