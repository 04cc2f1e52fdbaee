#include "scc/reference.hpp"

namespace scc {

namespace {

struct Form {
    uint8_t c = 0;
    std::vector<uint64_t> mask;

    void xor_with(const Form& o) {
        c ^= o.c;
        if (o.mask.size() > mask.size()) mask.resize(o.mask.size(), 0);
        for (size_t i = 0; i < o.mask.size(); i++) mask[i] ^= o.mask[i];
    }
    void set_var(size_t v) {
        if (v / 64 >= mask.size()) mask.resize(v / 64 + 1, 0);
        mask[v / 64] ^= uint64_t(1) << (v % 64);
    }
    bool symbolic() const {
        for (auto w : mask)
            if (w) return true;
        return false;
    }
};

// Stabilizer simulation where every stabilizer row carries a symbolic sign
// correction on top of its Pauli phase. Random measurement outcomes become
// fresh variables.
struct SymbolicSim {
    StabilizerTableau t;
    std::vector<Form> row_form;  // parallel to t.stab
    size_t nvars = 0;

    explicit SymbolicSim(size_t n) : t(n), row_form(n) {}

    void apply(const CliffordGate& g) { t.apply(g); }

    Form measure(const PauliString& p) {
        size_t n = t.n;
        size_t pivot = n;
        for (size_t i = 0; i < n; i++)
            if (!t.stab[i].commutes(p)) { pivot = i; break; }
        if (pivot < n) {
            for (size_t i = 0; i < n; i++) {
                if (i != pivot && !t.stab[i].commutes(p)) {
                    t.stab[i] = pauli_mul(t.stab[i], t.stab[pivot]);
                    row_form[i].xor_with(row_form[pivot]);
                }
                if (!t.destab[i].commutes(p)) t.destab[i] = pauli_mul(t.destab[i], t.stab[pivot]);
            }
            t.destab[pivot] = t.stab[pivot];
            t.stab[pivot] = p;  // +p on the reference branch
            Form out;
            out.set_var(nvars);
            row_form[pivot] = out;
            nvars++;
            return out;
        }
        PauliString acc(n);
        Form out;
        for (size_t i = 0; i < n; i++) {
            if (!t.destab[i].commutes(p)) {
                acc = pauli_mul(acc, t.stab[i]);
                out.xor_with(row_form[i]);
            }
        }
        PauliString q = pauli_mul(acc, p);
        if (!q.is_identity_pattern()) throw std::logic_error("symbolic measure accumulation failed");
        out.c ^= (q.phase >> 1) & 1;
        return out;
    }

    // Classically controlled Pauli: flips the sign form of anticommuting rows.
    void apply_conditional(const PauliString& p, const Form& f) {
        for (size_t i = 0; i < t.n; i++)
            if (!t.stab[i].commutes(p)) row_form[i].xor_with(f);
        // Destabilizer signs are irrelevant to outcomes; skip them.
    }

    void reset_z(size_t q, bool one) {
        PauliString zq = PauliString::single(t.n, q, 'Z');
        Form f = measure(zq);
        if (one) f.c ^= 1;
        apply_conditional(PauliString::single(t.n, q, 'X'), f);
    }

    void reset_x(size_t q) {
        PauliString xq = PauliString::single(t.n, q, 'X');
        Form f = measure(xq);
        apply_conditional(PauliString::single(t.n, q, 'Z'), f);
    }
};

}  // namespace

ReferenceResult reference_sample(const DetectorCircuit& c) {
    if (!c.clifford_complete())
        throw std::invalid_argument("reference_sample requires a Clifford-substituted circuit");
    size_t n = c.num_qubits();
    SymbolicSim sim(n);
    std::vector<Form> rec;
    rec.reserve(c.num_measurements());

    for (auto& ins : c.instructions) {
        switch (ins.op) {
            case Opcode::TICK:
                break;
            case Opcode::DEPOLARIZE1: case Opcode::DEPOLARIZE2:
            case Opcode::X_ERROR: case Opcode::Z_ERROR: case Opcode::FLIP_RESULT:
                break;
            case Opcode::RESET_Z:
                for (auto q : ins.targets) sim.reset_z(q, false);
                break;
            case Opcode::RESET_ONE:
                for (auto q : ins.targets) sim.reset_z(q, true);
                break;
            case Opcode::RESET_X:
                for (auto q : ins.targets) sim.reset_x(q);
                break;
            case Opcode::MEASURE_Z:
                for (auto q : ins.targets) rec.push_back(sim.measure(PauliString::single(n, q, 'Z')));
                break;
            case Opcode::MEASURE_X:
                for (auto q : ins.targets) rec.push_back(sim.measure(PauliString::single(n, q, 'X')));
                break;
            default: {
                if (!opcode_is_unitary(ins.op)) throw std::invalid_argument("unsupported opcode");
                Gate g = opcode_gate(ins.op);
                if (gate_is_two_qubit(g)) {
                    for (size_t k = 0; k + 1 < ins.targets.size(); k += 2)
                        sim.apply({g, ins.targets[k], ins.targets[k + 1]});
                } else {
                    for (auto q : ins.targets) sim.apply({g, q, 0});
                }
            }
        }
    }

    ReferenceResult out;
    out.measurements.reserve(rec.size());
    for (auto& f : rec) out.measurements.push_back(f.c);
    for (size_t d = 0; d < c.detectors.size(); d++) {
        Form f;
        for (auto r : c.detectors[d].recs) f.xor_with(rec.at(r));
        if (f.symbolic()) throw NondeterministicDetector(d, false);
        out.detectors.push_back(f.c);
    }
    for (size_t o = 0; o < c.observables.size(); o++) {
        Form f;
        for (auto r : c.observables[o].recs) f.xor_with(rec.at(r));
        if (f.symbolic()) throw NondeterministicDetector(o, true);
        out.observables.push_back(f.c);
    }
    return out;
}

}  // namespace scc
