#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scc/pauli.hpp"

namespace scc {

enum class Opcode {
    // unitary gates (same order as Gate)
    I, X, Y, Z, H, S, S_DAG, H_XY, IZH_XY, CX, CZ, SWAP, CXSWAP,
    // non-Clifford, must be substituted before simulation
    T, T_DAG,
    // state preparation and measurement
    RESET_Z, RESET_X, RESET_ONE, MEASURE_Z, MEASURE_X,
    // noise channels
    DEPOLARIZE1, DEPOLARIZE2, X_ERROR, Z_ERROR, FLIP_RESULT,
    // layer separator
    TICK,
};

bool opcode_is_unitary(Opcode op);
bool opcode_is_two_qubit(Opcode op);
bool opcode_is_measurement(Opcode op);
bool opcode_is_reset(Opcode op);
bool opcode_is_noise(Opcode op);
Gate opcode_gate(Opcode op);  // valid for unitary opcodes only
std::string_view opcode_name(Opcode op);

struct Instruction {
    Opcode op;
    double arg = 0.0;  // probability for noise ops
    std::vector<uint32_t> targets;
};

enum class Region : uint8_t { CULTIVATE, ESCAPE };

struct Detector {
    std::vector<uint64_t> recs;  // absolute measurement-record indices
    Region region = Region::CULTIVATE;
    double coord[3] = {0, 0, 0};  // x, y, t metadata
};

struct Observable {
    std::vector<uint64_t> recs;
};

struct DetectorCircuit {
    std::vector<Instruction> instructions;
    std::vector<Detector> detectors;
    std::vector<Observable> observables;
    std::map<uint32_t, std::pair<double, double>> coords;
    // Instructions at index >= noise_cutoff are exempt from noise insertion
    // (the terminal closure round of the escape stage).
    size_t noise_cutoff = SIZE_MAX;

    size_t num_qubits() const;
    size_t num_measurements() const;
    bool clifford_complete() const;  // no T / T_DAG present

    void append(Opcode op, std::initializer_list<uint32_t> ts, double arg = 0.0);
    void append(Opcode op, const std::vector<uint32_t>& ts, double arg = 0.0);
    void tick();
};

// Concatenates b onto a, shifting b's record references past a's records.
void append_circuit(DetectorCircuit& a, const DetectorCircuit& b);

std::string serialize_text(const DetectorCircuit& c);
DetectorCircuit parse_text(const std::string& text);

// T -> S, T_DAG -> S_DAG (the S|+> substitution for Clifford simulation).
DetectorCircuit clifford_substitute(const DetectorCircuit& c);

}  // namespace scc
