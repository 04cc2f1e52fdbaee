#pragma once

#include <stdexcept>

#include "scc/circuit.hpp"
#include "scc/tableau.hpp"

namespace scc {

struct NondeterministicDetector : std::runtime_error {
    size_t index;
    bool is_observable;
    NondeterministicDetector(size_t idx, bool obs)
        : std::runtime_error((obs ? "nondeterministic observable " : "nondeterministic detector ") +
                             std::to_string(idx)),
          index(idx), is_observable(obs) {}
};

struct ReferenceResult {
    std::vector<uint8_t> measurements;  // reference bit per record
    std::vector<uint8_t> detectors;     // deterministic value (0 for a well-built circuit)
    std::vector<uint8_t> observables;
};

// Noiseless simulation with symbolic tracking of random measurement
// outcomes. A detector/observable parity that depends on any random
// outcome raises NondeterministicDetector; otherwise its exact value is
// returned. Noise channels are ignored; the circuit must be Clifford.
ReferenceResult reference_sample(const DetectorCircuit& c);

}  // namespace scc
