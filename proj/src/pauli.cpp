#include "scc/pauli.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace scc {

PauliString PauliString::single(size_t n, size_t q, char p) {
    PauliString out(n);
    switch (p) {
        case 'I': break;
        case 'X': out.set_x(q, true); break;
        case 'Z': out.set_z(q, true); break;
        case 'Y': out.set_x(q, true); out.set_z(q, true); out.phase = 1; break;
        default: throw std::invalid_argument("bad pauli char");
    }
    return out;
}

PauliString PauliString::from_str(std::string_view s) {
    uint8_t ph = 0;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') ph = 2;
        i++;
    }
    if (i < s.size() && s[i] == 'i') {
        ph = (ph + 1) & 3;
        i++;
    }
    PauliString out(s.size() - i);
    for (size_t q = 0; i < s.size(); i++, q++) {
        char c = s[i];
        if (c == 'I' || c == '_') continue;
        if (c == 'X') out.set_x(q, true);
        else if (c == 'Z') out.set_z(q, true);
        else if (c == 'Y') { out.set_x(q, true); out.set_z(q, true); out.phase = (out.phase + 1) & 3; }
        else throw std::invalid_argument("bad pauli char");
    }
    out.phase = (out.phase + ph) & 3;
    return out;
}

void PauliString::set_x(size_t q, bool v) {
    uint64_t m = uint64_t(1) << (q & 63);
    if (v) x[q >> 6] |= m; else x[q >> 6] &= ~m;
}
void PauliString::set_z(size_t q, bool v) {
    uint64_t m = uint64_t(1) << (q & 63);
    if (v) z[q >> 6] |= m; else z[q >> 6] &= ~m;
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t i = 0; i < x.size(); i++) w += std::popcount(x[i] | z[i]);
    return w;
}

size_t PauliString::y_count() const {
    size_t w = 0;
    for (size_t i = 0; i < x.size(); i++) w += std::popcount(x[i] & z[i]);
    return w;
}

bool PauliString::is_identity_pattern() const {
    for (size_t i = 0; i < x.size(); i++)
        if (x[i] | z[i]) return false;
    return true;
}

bool PauliString::commutes(const PauliString& o) const {
    size_t c = 0;
    for (size_t i = 0; i < x.size(); i++)
        c += std::popcount(x[i] & o.z[i]) + std::popcount(z[i] & o.x[i]);
    return (c & 1) == 0;
}

std::string PauliString::str() const {
    size_t ys = y_count();
    std::string out;
    uint8_t sp = (phase - (ys & 3)) & 3;
    if (sp == 0) out += "+";
    else if (sp == 1) out += "+i";
    else if (sp == 2) out += "-";
    else out += "-i";
    for (size_t q = 0; q < n; q++) {
        bool xb = x_bit(q), zb = z_bit(q);
        out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : '_');
    }
    return out;
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
    if (a.n != b.n) throw std::invalid_argument("pauli_mul size mismatch");
    PauliString out(a.n);
    size_t flips = 0;
    for (size_t i = 0; i < a.x.size(); i++) {
        flips += std::popcount(a.z[i] & b.x[i]);
        out.x[i] = a.x[i] ^ b.x[i];
        out.z[i] = a.z[i] ^ b.z[i];
    }
    out.phase = (a.phase + b.phase + 2 * (flips & 1)) & 3;
    return out;
}

bool gate_is_two_qubit(Gate g) {
    switch (g) {
        case Gate::CX: case Gate::CZ: case Gate::SWAP: case Gate::CXSWAP:
            return true;
        default:
            return false;
    }
}

std::string_view gate_name(Gate g) {
    switch (g) {
        case Gate::I: return "I";
        case Gate::X: return "X";
        case Gate::Y: return "Y";
        case Gate::Z: return "Z";
        case Gate::H: return "H";
        case Gate::S: return "S";
        case Gate::S_DAG: return "S_DAG";
        case Gate::H_XY: return "H_XY";
        case Gate::IZH_XY: return "IZH_XY";
        case Gate::CX: return "CX";
        case Gate::CZ: return "CZ";
        case Gate::SWAP: return "SWAP";
        case Gate::CXSWAP: return "CXSWAP";
    }
    return "?";
}

bool gate_from_name(std::string_view s, Gate& out) {
    static const std::pair<std::string_view, Gate> table[] = {
        {"I", Gate::I}, {"X", Gate::X}, {"Y", Gate::Y}, {"Z", Gate::Z},
        {"H", Gate::H}, {"S", Gate::S}, {"S_DAG", Gate::S_DAG},
        {"H_XY", Gate::H_XY}, {"IZH_XY", Gate::IZH_XY},
        {"CX", Gate::CX}, {"CZ", Gate::CZ}, {"SWAP", Gate::SWAP},
        {"CXSWAP", Gate::CXSWAP},
    };
    for (auto& [name, g] : table)
        if (name == s) { out = g; return true; }
    return false;
}

namespace {

// Single-qubit image of X or Z under conjugation: (x, z, phase exponent).
struct Img1 { uint8_t x, z, ph; };

// [gate][0] = image of X, [gate][1] = image of Z.
// Y is stored as x=1,z=1,ph=1 (Y = i XZ).
constexpr Img1 kGate1[9][2] = {
    /* I      */ {{1, 0, 0}, {0, 1, 0}},
    /* X      */ {{1, 0, 0}, {0, 1, 2}},
    /* Y      */ {{1, 0, 2}, {0, 1, 2}},
    /* Z      */ {{1, 0, 2}, {0, 1, 0}},
    /* H      */ {{0, 1, 0}, {1, 0, 0}},
    /* S      */ {{1, 1, 1}, {0, 1, 0}},
    /* S_DAG  */ {{1, 1, 3}, {0, 1, 0}},
    /* H_XY   */ {{1, 1, 1}, {0, 1, 2}},
    /* IZH_XY */ {{1, 1, 3}, {0, 1, 2}},
};

// Two-qubit image: bits for (x0, z0, x1, z1) plus phase exponent.
struct Img2 { uint8_t x0, z0, x1, z1, ph; };

// [gate][k]: image of X0, Z0, X1, Z1 in that order.
constexpr Img2 kGate2[4][4] = {
    /* CX     */ {{1, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 1, 0, 1, 0}},
    /* CZ     */ {{1, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 0}},
    /* SWAP   */ {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}},
    /* CXSWAP */ {{0, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {1, 0, 1, 0, 0}, {0, 1, 0, 0, 0}},
};

}  // namespace

void conjugate(PauliString& p, const CliffordGate& g) {
    if (!gate_is_two_qubit(g.g)) {
        if (g.q0 >= p.n) throw std::out_of_range("gate target out of range");
        bool xb = p.x_bit(g.q0), zb = p.z_bit(g.q0);
        if (!xb && !zb) return;
        const Img1* im = kGate1[static_cast<int>(g.g)];
        uint8_t ph = p.phase;
        // original contribution X^xb Z^zb has no internal phase; subtract nothing.
        uint8_t nx = 0, nz = 0;
        if (xb) { nx ^= im[0].x; nz ^= im[0].z; ph = (ph + im[0].ph) & 3; }
        if (zb) {
            // multiply on the right: (cur) * img(Z); reorder Z past X costs (-1)^(curz&imx)
            if (nz & im[1].x) ph = (ph + 2) & 3;
            nx ^= im[1].x; nz ^= im[1].z; ph = (ph + im[1].ph) & 3;
        }
        p.set_x(g.q0, nx); p.set_z(g.q0, nz);
        p.phase = ph;
        return;
    }
    if (g.q0 >= p.n || g.q1 >= p.n || g.q0 == g.q1)
        throw std::out_of_range("gate targets invalid");
    bool x0 = p.x_bit(g.q0), z0 = p.z_bit(g.q0);
    bool x1 = p.x_bit(g.q1), z1 = p.z_bit(g.q1);
    if (!x0 && !z0 && !x1 && !z1) return;
    int gi = static_cast<int>(g.g) - static_cast<int>(Gate::CX);
    const Img2* im = kGate2[gi];
    uint8_t ph = p.phase;
    uint8_t nx0 = 0, nz0 = 0, nx1 = 0, nz1 = 0;
    bool sel[4] = {x0, z0, x1, z1};
    for (int k = 0; k < 4; k++) {
        if (!sel[k]) continue;
        const Img2& t = im[k];
        // reorder cost: existing Z bits passing incoming X bits, per qubit
        if ((nz0 & t.x0) ^ (nz1 & t.x1)) ph = (ph + 2) & 3;
        nx0 ^= t.x0; nz0 ^= t.z0; nx1 ^= t.x1; nz1 ^= t.z1;
        ph = (ph + t.ph) & 3;
    }
    p.set_x(g.q0, nx0); p.set_z(g.q0, nz0);
    p.set_x(g.q1, nx1); p.set_z(g.q1, nz1);
    p.phase = ph;
}

PauliString conjugated(const PauliString& p, const CliffordGate& g) {
    PauliString out = p;
    conjugate(out, g);
    return out;
}

}  // namespace scc
