#include "scc/frame.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace scc {

FrameSampler::FrameSampler(const DetectorCircuit& c) : circuit_(c) {
    if (!c.clifford_complete())
        throw std::invalid_argument("frame sampler requires a Clifford-substituted circuit");
    nq_ = c.num_qubits();
    inst_rec_base_.assign(c.instructions.size(), 0);
    flip_recs_.assign(c.instructions.size(), {});
    std::vector<int64_t> last_rec(nq_, -1);
    size_t r = 0;
    for (size_t i = 0; i < c.instructions.size(); i++) {
        auto& ins = c.instructions[i];
        if (opcode_is_measurement(ins.op)) {
            inst_rec_base_[i] = r;
            for (auto q : ins.targets) last_rec[q] = int64_t(r++);
        } else if (ins.op == Opcode::FLIP_RESULT) {
            auto& v = flip_recs_[i];
            for (auto q : ins.targets) {
                if (last_rec[q] < 0)
                    throw std::invalid_argument("FLIP_RESULT before any measurement of qubit");
                v.push_back(uint64_t(last_rec[q]));
            }
        }
    }
    nrec_ = r;
    for (auto& d : c.detectors)
        for (auto rec : d.recs)
            if (rec >= nrec_) throw std::invalid_argument("detector references missing record");
    regions_.reserve(c.detectors.size());
    for (auto& d : c.detectors) regions_.push_back(d.region);
}

namespace {

// Iterates the fired positions of a Bernoulli(p) process over `total` slots.
struct SkipSampler {
    double p;
    uint64_t total;
    std::mt19937_64& rng;
    uint64_t pos = 0;
    double inv_log1mp;

    SkipSampler(double p_, uint64_t total_, std::mt19937_64& r) : p(p_), total(total_), rng(r) {
        inv_log1mp = p_ > 0 && p_ < 1 ? 1.0 / std::log1p(-p_) : 0.0;
        if (p >= 1.0) { pos = 0; return; }
        advance_from(0);
    }
    void advance_from(uint64_t start) {
        if (p <= 0.0) { pos = total; return; }
        if (p >= 1.0) { pos = start; return; }
        double u = std::uniform_real_distribution<double>(std::nextafter(0.0, 1.0), 1.0)(rng);
        uint64_t skip = uint64_t(std::log(u) * inv_log1mp);
        pos = start + skip;
    }
    bool done() const { return pos >= total; }
    uint64_t next() {
        uint64_t cur = pos;
        advance_from(pos + 1);
        return cur;
    }
};

inline void xor_bit(std::vector<uint64_t>& rows, size_t stride, size_t row, uint64_t shot) {
    rows[row * stride + (shot >> 6)] ^= uint64_t(1) << (shot & 63);
}

}  // namespace

FrameBatch FrameSampler::sample(size_t shots, uint64_t seed) const {
    FrameBatch out;
    out.shots = shots;
    out.words = (shots + 63) / 64;
    out.num_detectors = circuit_.detectors.size();
    out.num_observables = circuit_.observables.size();
    size_t W = out.words;

    std::vector<uint64_t> fx(nq_ * W, 0), fz(nq_ * W, 0);
    std::vector<uint64_t> rec(nrec_ * W, 0);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    rng.discard(7);

    auto xr = [&](uint32_t q) { return fx.data() + size_t(q) * W; };
    auto zr = [&](uint32_t q) { return fz.data() + size_t(q) * W; };

    for (size_t i = 0; i < circuit_.instructions.size(); i++) {
        auto& ins = circuit_.instructions[i];
        switch (ins.op) {
            case Opcode::TICK:
                break;
            case Opcode::I: case Opcode::X: case Opcode::Y: case Opcode::Z:
                break;  // Pauli layers only change signs, not frames
            case Opcode::H:
                for (auto q : ins.targets)
                    for (size_t w = 0; w < W; w++) std::swap(xr(q)[w], zr(q)[w]);
                break;
            case Opcode::S: case Opcode::S_DAG: case Opcode::H_XY: case Opcode::IZH_XY:
                for (auto q : ins.targets)
                    for (size_t w = 0; w < W; w++) zr(q)[w] ^= xr(q)[w];
                break;
            case Opcode::CX:
                for (size_t k = 0; k + 1 < ins.targets.size(); k += 2) {
                    uint32_t c = ins.targets[k], t = ins.targets[k + 1];
                    for (size_t w = 0; w < W; w++) {
                        xr(t)[w] ^= xr(c)[w];
                        zr(c)[w] ^= zr(t)[w];
                    }
                }
                break;
            case Opcode::CZ:
                for (size_t k = 0; k + 1 < ins.targets.size(); k += 2) {
                    uint32_t c = ins.targets[k], t = ins.targets[k + 1];
                    for (size_t w = 0; w < W; w++) {
                        zr(t)[w] ^= xr(c)[w];
                        zr(c)[w] ^= xr(t)[w];
                    }
                }
                break;
            case Opcode::SWAP:
                for (size_t k = 0; k + 1 < ins.targets.size(); k += 2) {
                    uint32_t a = ins.targets[k], b = ins.targets[k + 1];
                    for (size_t w = 0; w < W; w++) {
                        std::swap(xr(a)[w], xr(b)[w]);
                        std::swap(zr(a)[w], zr(b)[w]);
                    }
                }
                break;
            case Opcode::CXSWAP:
                for (size_t k = 0; k + 1 < ins.targets.size(); k += 2) {
                    uint32_t a = ins.targets[k], b = ins.targets[k + 1];
                    for (size_t w = 0; w < W; w++) {
                        // CX(a->b) then CX(b->a)
                        uint64_t xa = xr(a)[w], xb = xr(b)[w] ^ xa;
                        uint64_t zb = zr(b)[w], za = zr(a)[w] ^ zb;
                        xr(a)[w] = xa ^ xb;  // = old xb ... swap semantics
                        xr(b)[w] = xb;
                        zr(b)[w] = zb ^ za;
                        zr(a)[w] = za;
                    }
                }
                break;
            case Opcode::RESET_Z: case Opcode::RESET_ONE: case Opcode::RESET_X:
                for (auto q : ins.targets) {
                    std::memset(xr(q), 0, W * 8);
                    std::memset(zr(q), 0, W * 8);
                }
                break;
            case Opcode::MEASURE_Z: {
                size_t base = inst_rec_base_[i];
                for (size_t k = 0; k < ins.targets.size(); k++)
                    std::memcpy(rec.data() + (base + k) * W, xr(ins.targets[k]), W * 8);
                break;
            }
            case Opcode::MEASURE_X: {
                size_t base = inst_rec_base_[i];
                for (size_t k = 0; k < ins.targets.size(); k++)
                    std::memcpy(rec.data() + (base + k) * W, zr(ins.targets[k]), W * 8);
                break;
            }
            case Opcode::X_ERROR: case Opcode::Z_ERROR: {
                uint64_t total = uint64_t(ins.targets.size()) * shots;
                SkipSampler s(ins.arg, total, rng);
                while (!s.done()) {
                    uint64_t k = s.next();
                    uint32_t q = ins.targets[k / shots];
                    uint64_t shot = k % shots;
                    if (ins.op == Opcode::X_ERROR) xor_bit(fx, W, q, shot);
                    else xor_bit(fz, W, q, shot);
                }
                break;
            }
            case Opcode::DEPOLARIZE1: {
                uint64_t total = uint64_t(ins.targets.size()) * shots;
                SkipSampler s(ins.arg, total, rng);
                while (!s.done()) {
                    uint64_t k = s.next();
                    uint32_t q = ins.targets[k / shots];
                    uint64_t shot = k % shots;
                    switch (rng() % 3) {
                        case 0: xor_bit(fx, W, q, shot); break;
                        case 1: xor_bit(fz, W, q, shot); break;
                        default: xor_bit(fx, W, q, shot); xor_bit(fz, W, q, shot);
                    }
                }
                break;
            }
            case Opcode::DEPOLARIZE2: {
                uint64_t pairs = ins.targets.size() / 2;
                uint64_t total = pairs * shots;
                SkipSampler s(ins.arg, total, rng);
                while (!s.done()) {
                    uint64_t k = s.next();
                    uint64_t pi = k / shots;
                    uint64_t shot = k % shots;
                    uint32_t a = ins.targets[2 * pi], b = ins.targets[2 * pi + 1];
                    uint32_t pauli = 1 + uint32_t(rng() % 15);
                    uint32_t pa = pauli & 3, pb = pauli >> 2;
                    if (pa & 1) xor_bit(fx, W, a, shot);
                    if (pa & 2) xor_bit(fz, W, a, shot);
                    if (pb & 1) xor_bit(fx, W, b, shot);
                    if (pb & 2) xor_bit(fz, W, b, shot);
                }
                break;
            }
            case Opcode::FLIP_RESULT: {
                auto& recs = flip_recs_[i];
                uint64_t total = uint64_t(recs.size()) * shots;
                SkipSampler s(ins.arg, total, rng);
                while (!s.done()) {
                    uint64_t k = s.next();
                    rec[recs[k / shots] * W + ((k % shots) >> 6)] ^= uint64_t(1) << ((k % shots) & 63);
                }
                break;
            }
            case Opcode::T: case Opcode::T_DAG:
                throw std::logic_error("unreachable: non-Clifford op");
        }
    }

    out.det.assign(out.num_detectors * W, 0);
    out.obs.assign(out.num_observables * W, 0);
    for (size_t d = 0; d < circuit_.detectors.size(); d++)
        for (auto r : circuit_.detectors[d].recs)
            for (size_t w = 0; w < W; w++) out.det[d * W + w] ^= rec[r * W + w];
    for (size_t o = 0; o < circuit_.observables.size(); o++)
        for (auto r : circuit_.observables[o].recs)
            for (size_t w = 0; w < W; w++) out.obs[o * W + w] ^= rec[r * W + w];
    // Mask out lanes past `shots` in the final word.
    if (shots % 64) {
        uint64_t mask = (uint64_t(1) << (shots % 64)) - 1;
        for (size_t d = 0; d < out.num_detectors; d++) out.det[d * W + W - 1] &= mask;
        for (size_t o = 0; o < out.num_observables; o++) out.obs[o * W + W - 1] &= mask;
    }
    return out;
}

}  // namespace scc
