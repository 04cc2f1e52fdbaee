#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "scc/pauli.hpp"

namespace scc {

// CHP-style stabilizer tableau: n destabilizers + n stabilizers.
// Row i of the destabilizers anticommutes with stabilizer i and commutes
// with every other stabilizer.
struct StabilizerTableau {
    size_t n = 0;
    std::vector<PauliString> destab, stab;

    StabilizerTableau() = default;
    explicit StabilizerTableau(size_t n_);  // |0...0>

    void apply(const CliffordGate& g);

    // Measures Hermitian Pauli p. Returns outcome bit (0 -> +1, 1 -> -1)
    // and whether the outcome was determined by the state.
    struct MeasureResult {
        int outcome_bit;
        bool deterministic;
    };
    MeasureResult measure(const PauliString& p, std::mt19937_64& rng);
    // Forces the outcome of a non-deterministic measurement (used by the
    // reference simulator). Returns deterministic flag.
    MeasureResult measure_forced(const PauliString& p, int forced_bit);

    // True iff p (including its sign) is in the group generated by the
    // stabilizer rows. Decided by destabilizer-selected row accumulation.
    bool group_contains(const PauliString& p) const;

    // Reset qubit q to |0> / |1> / |+>.
    void reset_z(size_t q, bool one, std::mt19937_64& rng);
    void reset_x(size_t q, std::mt19937_64& rng);

    // Debug invariant: symplectic structure of the 2n rows.
    bool check_invariants() const;
};

// Row-reduced canonical generator list for a stabilizer group (signs kept).
// Two groups are equal iff their canonical forms are identical.
std::vector<PauliString> canonical_generators(std::vector<PauliString> gens);

bool same_group(const std::vector<PauliString>& a, const std::vector<PauliString>& b);

}  // namespace scc
