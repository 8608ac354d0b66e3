#ifndef HEXALAB_ERRORS_HPP
#define HEXALAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hexalab {

struct HexalabError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or invalid field specification (composite modulus, reducible
// polynomial, bad grammar).
struct FieldSpecError : HexalabError {
    using HexalabError::HexalabError;
};

struct NotInvertibleError : HexalabError {
    using HexalabError::HexalabError;
};

// A sampled parameter set failed a required-nonzero or rank condition.
// Callers resample with an incremented seed (see with_resampling).
struct DegenerateError : HexalabError {
    using HexalabError::HexalabError;
};

// Dual-number elimination could not find a pivot with invertible constant
// part, or a nilpotent residue row survived.  Resampleable.
struct DegenerateLiftError : DegenerateError {
    using DegenerateError::DegenerateError;
};

// A permitted-coloring space came out with the wrong dimension while building
// the cochain context.  Resampleable (rank drop of a degenerate sample).
struct DimMismatchError : DegenerateError {
    using DegenerateError::DegenerateError;
};

// A boundary edge functional kept a nonzero component on an inner
// tetrahedron.  Signals a sign-convention bug, never resampled.
struct InnerResidueError : HexalabError {
    using HexalabError::HexalabError;
};

// An identity that pins the artifact's conventions failed (e.g. the constant
// part of the dual-number Gram matrix did not vanish).  Never resampled.
struct ConventionError : HexalabError {
    using HexalabError::HexalabError;
};

// Bad CLI usage (unknown suite, field/suite mismatch).  Exit code 2.
struct UsageError : HexalabError {
    using HexalabError::HexalabError;
};

} // namespace hexalab

#endif
