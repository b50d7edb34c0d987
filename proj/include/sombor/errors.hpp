#pragma once

#include <stdexcept>
#include <string>

namespace sombor {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- graph construction / mutation ----
struct LoopEdgeError : Error { using Error::Error; };
struct DuplicateEdgeError : Error { using Error::Error; };
struct VertexOutOfRangeError : Error { using Error::Error; };
struct NoSuchEdgeError : Error { using Error::Error; };
struct BadParamsError : Error { using Error::Error; };
struct SizeUnsupportedError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct SiteInvalidError : Error { using Error::Error; };

// ---- graph6 encoding ----
struct MalformedHeaderError : Error { using Error::Error; };
struct TruncatedBitsError : Error { using Error::Error; };
struct NonCanonicalPaddingError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };

// ---- numerics ----
struct NoConvergenceError : Error { using Error::Error; };
struct SizeTooLargeError : Error { using Error::Error; };
struct NotBipartiteError : Error { using Error::Error; };
struct QuadratureFailureError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };

// ---- bounds registry / sweeps ----
struct UnknownBoundError : Error { using Error::Error; };
struct NotApplicableError : Error { using Error::Error; };
struct UnknownFamilyError : Error { using Error::Error; };
struct EmptyCorpusError : Error { using Error::Error; };

} // namespace sombor
