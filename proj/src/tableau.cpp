#include "scc/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace scc {

StabilizerTableau::StabilizerTableau(size_t n_) : n(n_) {
    destab.reserve(n);
    stab.reserve(n);
    for (size_t i = 0; i < n; i++) {
        destab.push_back(PauliString::single(n, i, 'X'));
        stab.push_back(PauliString::single(n, i, 'Z'));
    }
}

void StabilizerTableau::apply(const CliffordGate& g) {
    for (auto& r : destab) conjugate(r, g);
    for (auto& r : stab) conjugate(r, g);
}

namespace {

StabilizerTableau::MeasureResult measure_impl(StabilizerTableau& t, const PauliString& p,
                                              int forced_bit, std::mt19937_64* rng) {
    if (p.n != t.n) throw std::invalid_argument("measure size mismatch");
    if (!p.hermitian()) throw std::invalid_argument("measured Pauli must be Hermitian");

    size_t pivot = t.n;
    for (size_t i = 0; i < t.n; i++) {
        if (!t.stab[i].commutes(p)) { pivot = i; break; }
    }
    if (pivot < t.n) {
        for (size_t i = 0; i < t.n; i++) {
            if (i != pivot && !t.stab[i].commutes(p)) t.stab[i] = pauli_mul(t.stab[i], t.stab[pivot]);
            if (!t.destab[i].commutes(p)) t.destab[i] = pauli_mul(t.destab[i], t.stab[pivot]);
        }
        t.destab[pivot] = t.stab[pivot];
        int bit = forced_bit >= 0 ? forced_bit : int((*rng)() & 1);
        PauliString row = p;
        if (bit) row.phase = (row.phase + 2) & 3;
        t.stab[pivot] = row;
        return {bit, false};
    }
    // Deterministic: accumulate stabilizer rows selected by destabilizer
    // anticommutation; the product equals +/- p.
    PauliString acc(t.n);
    for (size_t i = 0; i < t.n; i++)
        if (!t.destab[i].commutes(p)) acc = pauli_mul(acc, t.stab[i]);
    PauliString q = pauli_mul(acc, p);
    if (!q.is_identity_pattern()) throw std::logic_error("deterministic measure accumulation failed");
    return {(q.phase >> 1) & 1, true};
}

}  // namespace

StabilizerTableau::MeasureResult StabilizerTableau::measure(const PauliString& p,
                                                            std::mt19937_64& rng) {
    return measure_impl(*this, p, -1, &rng);
}

StabilizerTableau::MeasureResult StabilizerTableau::measure_forced(const PauliString& p,
                                                                   int forced_bit) {
    return measure_impl(*this, p, forced_bit, nullptr);
}

bool StabilizerTableau::group_contains(const PauliString& p) const {
    if (p.n != n) throw std::invalid_argument("group_contains size mismatch");
    for (size_t i = 0; i < n; i++)
        if (!stab[i].commutes(p)) return false;
    PauliString acc(n);
    for (size_t i = 0; i < n; i++)
        if (!destab[i].commutes(p)) acc = pauli_mul(acc, stab[i]);
    return acc == p;
}

void StabilizerTableau::reset_z(size_t q, bool one, std::mt19937_64& rng) {
    PauliString zq = PauliString::single(n, q, 'Z');
    auto r = measure(zq, rng);
    int want = one ? 1 : 0;
    if (r.outcome_bit != want) {
        // flip with X
        CliffordGate g{Gate::X, uint32_t(q), 0};
        apply(g);
    }
}

void StabilizerTableau::reset_x(size_t q, std::mt19937_64& rng) {
    PauliString xq = PauliString::single(n, q, 'X');
    auto r = measure(xq, rng);
    if (r.outcome_bit != 0) {
        CliffordGate g{Gate::Z, uint32_t(q), 0};
        apply(g);
    }
}

bool StabilizerTableau::check_invariants() const {
    for (size_t i = 0; i < n; i++) {
        if (!stab[i].hermitian() || !destab[i].hermitian()) return false;
        for (size_t j = 0; j < n; j++) {
            if (!stab[i].commutes(stab[j])) return false;
            bool anti = !destab[i].commutes(stab[j]);
            if (anti != (i == j)) return false;
        }
    }
    return true;
}

std::vector<PauliString> canonical_generators(std::vector<PauliString> gens) {
    if (gens.empty()) return gens;
    size_t n = gens[0].n;
    size_t rows = gens.size();
    size_t r = 0;
    // Column order: x_0..x_{n-1}, z_0..z_{n-1}.
    for (size_t col = 0; col < 2 * n && r < rows; col++) {
        size_t q = col % n;
        bool is_x = col < n;
        auto bit = [&](const PauliString& p) { return is_x ? p.x_bit(q) : p.z_bit(q); };
        size_t piv = rows;
        for (size_t i = r; i < rows; i++)
            if (bit(gens[i])) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(gens[r], gens[piv]);
        for (size_t i = 0; i < rows; i++)
            if (i != r && bit(gens[i])) gens[i] = pauli_mul(gens[i], gens[r]);
        r++;
    }
    gens.resize(r);  // drop identity rows (a -1 identity would signal an inconsistent group)
    std::sort(gens.begin(), gens.end(), [](const PauliString& a, const PauliString& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.z != b.z) return a.z < b.z;
        return a.phase < b.phase;
    });
    return gens;
}

bool same_group(const std::vector<PauliString>& a, const std::vector<PauliString>& b) {
    return canonical_generators(a) == canonical_generators(b);
}

}  // namespace scc
