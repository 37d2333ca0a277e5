#pragma once

#include <stdexcept>
#include <string>

namespace circlepaint {

// Base type for every error the library throws, so callers can catch the
// whole family in one arm. The CLI maps subfamilies onto exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input validation.
struct InvalidInput : Error { using Error::Error; };
struct DuplicateEndpoint : InvalidInput { using InvalidInput::InvalidInput; };
struct DegenerateInterval : InvalidInput { using InvalidInput::InvalidInput; };

// Pillar machinery misuse.
struct DuplicatePillarGap : Error { using Error::Error; };
struct ColourSetTooSmall : Error { using Error::Error; };
struct PillarInsideJ : Error { using Error::Error; };
struct GapOutsideArch : Error { using Error::Error; };
struct NoUncolouredIntervalInArch : Error { using Error::Error; };

// Parameter ranges.
struct OmegaTooSmall : Error { using Error::Error; };
struct NTooSmall : Error { using Error::Error; };

// A documented precondition does not hold for the given arguments.
struct PreconditionViolated : Error { using Error::Error; };

// Search gave up before proving optimality (node budget exceeded).
struct Exhausted : Error { using Error::Error; };

// A runtime self-check inside the solver failed. This is a bug indicator,
// never a user error; the message carries the offending state's diagnostics.
struct InvariantViolation : Error { using Error::Error; };

}  // namespace circlepaint
