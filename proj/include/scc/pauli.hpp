#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scc {

// Convention: a Pauli is i^phase * prod_q X_q^{x_q} Z_q^{z_q}.
// phase is the exponent of i, mod 4. A string is Hermitian iff
// phase parity equals the parity of its Y count (x&z bits).
struct PauliString {
    size_t n = 0;
    std::vector<uint64_t> x, z;
    uint8_t phase = 0;

    PauliString() = default;
    explicit PauliString(size_t n_)
        : n(n_), x((n_ + 63) / 64, 0), z((n_ + 63) / 64, 0) {}

    static PauliString single(size_t n, size_t q, char p);
    static PauliString from_str(std::string_view s);  // "+XIZ", "-iYY", ...

    bool x_bit(size_t q) const { return (x[q >> 6] >> (q & 63)) & 1; }
    bool z_bit(size_t q) const { return (z[q >> 6] >> (q & 63)) & 1; }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);

    size_t weight() const;
    size_t y_count() const;
    bool is_identity_pattern() const;  // no x/z bits set
    bool hermitian() const { return ((phase ^ y_count()) & 1) == 0; }
    // +1 -> 0, -1 -> 1. Only meaningful for Hermitian strings.
    int sign_bit() const { return ((phase - y_count()) >> 1) & 1; }

    bool commutes(const PauliString& o) const;
    bool operator==(const PauliString& o) const = default;

    std::string str() const;
};

PauliString pauli_mul(const PauliString& a, const PauliString& b);

enum class Gate {
    I, X, Y, Z, H, S, S_DAG, H_XY, IZH_XY,
    CX, CZ, SWAP, CXSWAP,
};

bool gate_is_two_qubit(Gate g);
std::string_view gate_name(Gate g);
bool gate_from_name(std::string_view s, Gate& out);

struct CliffordGate {
    Gate g;
    uint32_t q0 = 0, q1 = 0;
};

// In-place p -> g p g^dagger. Touches only the target qubits' bits.
void conjugate(PauliString& p, const CliffordGate& g);
PauliString conjugated(const PauliString& p, const CliffordGate& g);

}  // namespace scc
