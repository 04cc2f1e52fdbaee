#include "scc/noise.hpp"

#include <set>
#include <stdexcept>

namespace scc {

ChannelPolicy ChannelPolicy::uniform_depolarizing(double p) {
    if (p < 0.0 || p >= 1.0) throw std::invalid_argument("p out of range");
    return {p, true};
}

ChannelPolicy ChannelPolicy::depolarizing_no_idle(double p) {
    if (p < 0.0 || p >= 1.0) throw std::invalid_argument("p out of range");
    return {p, false};
}

NoiseModel parse_noise(const std::string& name, double p) {
    if (name == "uniform") return {NoiseKind::UNIFORM_DEPOLARIZING, p};
    if (name == "no-idle") return {NoiseKind::DEPOLARIZING_NO_IDLE, p};
    throw std::invalid_argument("unknown noise model: " + name);
}

std::string_view noise_name(const NoiseModel& m) {
    return m.kind == NoiseKind::UNIFORM_DEPOLARIZING ? "uniform" : "no-idle";
}

ChannelPolicy policy_for(const NoiseModel& m) {
    return m.kind == NoiseKind::UNIFORM_DEPOLARIZING ? ChannelPolicy::uniform_depolarizing(m.p)
                                                     : ChannelPolicy::depolarizing_no_idle(m.p);
}

DetectorCircuit apply_noise_model(const DetectorCircuit& c, const NoiseModel& m) {
    for (auto& ins : c.instructions)
        if (opcode_is_noise(ins.op))
            throw std::invalid_argument("apply_noise_model: circuit already has noise channels");
    ChannelPolicy pol = policy_for(m);
    double p = pol.p;

    size_t nq = c.num_qubits();
    // Liveness window per qubit: from its first reset/gate/measure to its last.
    std::vector<size_t> first(nq, SIZE_MAX), last(nq, 0);
    for (size_t i = 0; i < c.instructions.size(); i++) {
        for (uint32_t q : c.instructions[i].targets) {
            if (first[q] == SIZE_MAX) first[q] = i;
            last[q] = i;
        }
    }

    DetectorCircuit out;
    out.detectors = c.detectors;
    out.observables = c.observables;
    out.coords = c.coords;
    size_t cutoff = std::min(c.noise_cutoff, c.instructions.size());

    size_t i = 0;
    while (i < c.instructions.size()) {
        // One TICK-delimited layer at a time.
        size_t j = i;
        while (j < c.instructions.size() && c.instructions[j].op != Opcode::TICK) j++;
        bool layer_noisy = i < cutoff;
        bool has_gate = false;
        std::set<uint32_t> busy;
        for (size_t k = i; k < j; k++) {
            auto& ins = c.instructions[k];
            for (uint32_t q : ins.targets) busy.insert(q);
            if (opcode_is_unitary(ins.op) || ins.op == Opcode::T || ins.op == Opcode::T_DAG)
                has_gate = true;
        }
        for (size_t k = i; k < j; k++) {
            auto& ins = c.instructions[k];
            out.instructions.push_back(ins);
            if (!layer_noisy || p == 0.0) continue;
            if (opcode_is_unitary(ins.op) || ins.op == Opcode::T || ins.op == Opcode::T_DAG) {
                if (opcode_is_two_qubit(ins.op))
                    out.append(Opcode::DEPOLARIZE2, ins.targets, p);
                else
                    out.append(Opcode::DEPOLARIZE1, ins.targets, p);
            } else if (ins.op == Opcode::RESET_Z || ins.op == Opcode::RESET_ONE) {
                out.append(Opcode::X_ERROR, ins.targets, p);
            } else if (ins.op == Opcode::RESET_X) {
                out.append(Opcode::Z_ERROR, ins.targets, p);
            } else if (opcode_is_measurement(ins.op)) {
                out.append(Opcode::FLIP_RESULT, ins.targets, p);
            }
        }
        if (layer_noisy && pol.idle && has_gate && p > 0.0) {
            std::vector<uint32_t> idle;
            for (uint32_t q = 0; q < nq; q++) {
                if (busy.count(q)) continue;
                if (first[q] <= i && last[q] >= j) idle.push_back(q);
            }
            if (!idle.empty()) out.append(Opcode::DEPOLARIZE1, idle, p);
        }
        if (j < c.instructions.size()) out.instructions.push_back(c.instructions[j]);  // the TICK
        i = j + 1;
    }
    return out;
}

}  // namespace scc
