#pragma once

#include <optional>

#include "qde/circuit.hpp"
#include "qde/statevec.hpp"

namespace qde {

// A state plus (when the scheme has one) the circuit that prepares it from
// |0...0>. The layout inside the state names each subsystem's role.
struct EncodingResult {
    StateVector state;
    std::optional<Circuit> circuit;
};

}  // namespace qde
