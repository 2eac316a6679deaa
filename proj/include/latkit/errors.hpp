#pragma once

#include <stdexcept>
#include <string>

namespace latkit {

// Dimension / shape mismatch between operands.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Rank deficiency where independence is required.
struct RankError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A vector claimed to be a lattice point is not one.
struct MembershipError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Invalid parameter, spec, or config values.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Refusal to run an exponential oracle above its dimension cap.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace latkit
