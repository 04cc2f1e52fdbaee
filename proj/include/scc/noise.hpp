#pragma once

#include "scc/circuit.hpp"

namespace scc {

enum class NoiseKind { UNIFORM_DEPOLARIZING, DEPOLARIZING_NO_IDLE };

struct NoiseModel {
    NoiseKind kind = NoiseKind::UNIFORM_DEPOLARIZING;
    double p = 0.0;
};

// Per-opcode channel insertion policy. Both appendix models share the gate,
// reset and measurement rules; they differ only in the idle rule.
struct ChannelPolicy {
    double p = 0.0;
    bool idle = true;

    static ChannelPolicy uniform_depolarizing(double p);
    static ChannelPolicy depolarizing_no_idle(double p);
};

NoiseModel parse_noise(const std::string& name, double p);
std::string_view noise_name(const NoiseModel& m);
ChannelPolicy policy_for(const NoiseModel& m);

// Inserts channels per the policy:
//   - DEPOLARIZE1(p) after each single-qubit gate
//   - DEPOLARIZE2(p) after each two-qubit gate
//   - DEPOLARIZE1(p) on live qubits idle during a TICK-delimited gate layer
//     (uniform model only)
//   - X_ERROR(p) after RESET_Z / RESET_ONE, Z_ERROR(p) after RESET_X
//   - FLIP_RESULT(p) after every measurement
// Instructions past c.noise_cutoff are left untouched.
DetectorCircuit apply_noise_model(const DetectorCircuit& c, const NoiseModel& m);

}  // namespace scc
