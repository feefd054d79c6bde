#ifndef DEFPART_ERRORS_HPP
#define DEFPART_ERRORS_HPP

#include <stdexcept>

namespace defpart {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input and parameter problems.
struct ParseError : Error { using Error::Error; };
struct BadParameter : Error { using Error::Error; };
struct GenerationFailed : Error { using Error::Error; };

// Structural preconditions.
struct NotConnected : Error { using Error::Error; };
struct SizeGuardExceeded : Error { using Error::Error; };

// Instance hypothesis (sum of degree targets too small for the mode).
struct HypothesisNotMet : Error { using Error::Error; };

// A permissible family failed to produce a vertex its contract promises.
struct WitnessMissing : Error { using Error::Error; };

// No part can absorb a vertex; impossible while the hypothesis holds.
struct NoEscape : Error { using Error::Error; };

// Coloring driver hypotheses.
struct NotCliqueFree : Error { using Error::Error; };
struct NotTriangleFree : Error { using Error::Error; };

}  // namespace defpart

#endif
