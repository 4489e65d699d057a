#pragma once

#include <stdexcept>
#include <string>

namespace lanewatch {

// Error taxonomy mirrored by the lw_status codes of the C API.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
    using Error::Error;
};

// Malformed or unexpected file content (checkpoints, manifests, images, models).
struct FormatError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

} // namespace lanewatch
