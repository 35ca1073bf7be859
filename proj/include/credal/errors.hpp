#pragma once

#include <stdexcept>

namespace credal {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation mixed values defined over different frames.
struct frame_mismatch : error {
    using error::error;
};

// The conditioning event carries no mass, or no generator survives it.
struct conditioning_impossible : error {
    using error::error;
};

// A bounded enumeration would exceed its cap.
struct enumeration_too_large : error {
    using error::error;
};

// The oracle grid would exceed the combination cap.
struct resolution_too_high : error {
    using error::error;
};

// Model file errors: bad JSON or schema, invariant violations, bad labels.
struct malformed_document : error {
    using error::error;
};
struct invalid_model : error {
    using error::error;
};
struct unknown_outcome : error {
    using error::error;
};

} // namespace credal
