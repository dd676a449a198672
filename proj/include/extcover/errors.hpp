#pragma once

#include <stdexcept>

namespace extcover {

// Desk-scale guard tripped (oracle size caps, search budgets).
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside a solver's contract (non-chordal graph, dependent forced
// set, non-forest input).
struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace extcover
