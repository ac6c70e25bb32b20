#pragma once

#include <stdexcept>
#include <string>

namespace arce {

// Common base so callers can catch any library error in one clause.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// probability objects
struct NegativeEntry : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct ZeroMarginal : Error { using Error::Error; };

// entropy functionals
struct AlphaOne : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

// majorization
struct LengthMismatch : Error { using Error::Error; };
struct NotSorted : Error { using Error::Error; };
struct TransferTooLarge : Error { using Error::Error; };
struct SlotNotZero : Error { using Error::Error; };
struct SupportOverlap : Error { using Error::Error; };
struct PreconditionNotMet : Error { using Error::Error; };

// continuity bound
struct AlphaOutOfRange : Error { using Error::Error; };
struct EpsOutOfRange : Error { using Error::Error; };
struct ParamOutOfRange : Error { using Error::Error; };
struct TvBudgetExceeded : Error { using Error::Error; };

// proof pipeline
struct NotReordered : Error { using Error::Error; };
struct NotWalked : Error { using Error::Error; };
struct ChainViolation : Error { using Error::Error; };

// classical-quantum
struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct TraceBudgetExceeded : Error { using Error::Error; };

// tightness search
struct ZeroBound : Error { using Error::Error; };

// serialization
struct ParseError : Error { using Error::Error; };

} // namespace arce
