#include "scc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace scc {

namespace {

struct OpInfo {
    std::string_view name;
    bool two_qubit;
    bool has_arg;
};

const OpInfo kOps[] = {
    {"I", false, false}, {"X", false, false}, {"Y", false, false}, {"Z", false, false},
    {"H", false, false}, {"S", false, false}, {"S_DAG", false, false},
    {"H_XY", false, false}, {"IZH_XY", false, false},
    {"CX", true, false}, {"CZ", true, false}, {"SWAP", true, false}, {"CXSWAP", true, false},
    {"T", false, false}, {"T_DAG", false, false},
    {"RESET_Z", false, false}, {"RESET_X", false, false}, {"RESET_ONE", false, false},
    {"MEASURE_Z", false, false}, {"MEASURE_X", false, false},
    {"DEPOLARIZE1", false, true}, {"DEPOLARIZE2", true, true},
    {"X_ERROR", false, true}, {"Z_ERROR", false, true}, {"FLIP_RESULT", false, true},
    {"TICK", false, false},
};

const OpInfo& info(Opcode op) { return kOps[static_cast<int>(op)]; }

}  // namespace

bool opcode_is_unitary(Opcode op) { return static_cast<int>(op) <= static_cast<int>(Opcode::CXSWAP); }
bool opcode_is_two_qubit(Opcode op) { return info(op).two_qubit; }
bool opcode_is_measurement(Opcode op) { return op == Opcode::MEASURE_Z || op == Opcode::MEASURE_X; }
bool opcode_is_reset(Opcode op) {
    return op == Opcode::RESET_Z || op == Opcode::RESET_X || op == Opcode::RESET_ONE;
}
bool opcode_is_noise(Opcode op) {
    switch (op) {
        case Opcode::DEPOLARIZE1: case Opcode::DEPOLARIZE2:
        case Opcode::X_ERROR: case Opcode::Z_ERROR: case Opcode::FLIP_RESULT:
            return true;
        default:
            return false;
    }
}
Gate opcode_gate(Opcode op) {
    if (!opcode_is_unitary(op)) throw std::invalid_argument("opcode is not a unitary gate");
    return static_cast<Gate>(static_cast<int>(op));
}
std::string_view opcode_name(Opcode op) { return info(op).name; }

size_t DetectorCircuit::num_qubits() const {
    uint32_t m = 0;
    for (auto& ins : instructions)
        for (uint32_t t : ins.targets) m = std::max(m, t + 1);
    for (auto& [q, xy] : coords) m = std::max(m, q + 1);
    return m;
}

size_t DetectorCircuit::num_measurements() const {
    size_t k = 0;
    for (auto& ins : instructions)
        if (opcode_is_measurement(ins.op)) k += ins.targets.size();
    return k;
}

bool DetectorCircuit::clifford_complete() const {
    for (auto& ins : instructions)
        if (ins.op == Opcode::T || ins.op == Opcode::T_DAG) return false;
    return true;
}

void DetectorCircuit::append(Opcode op, std::initializer_list<uint32_t> ts, double arg) {
    instructions.push_back({op, arg, std::vector<uint32_t>(ts)});
}
void DetectorCircuit::append(Opcode op, const std::vector<uint32_t>& ts, double arg) {
    instructions.push_back({op, arg, ts});
}
void DetectorCircuit::tick() { instructions.push_back({Opcode::TICK, 0.0, {}}); }

void append_circuit(DetectorCircuit& a, const DetectorCircuit& b) {
    size_t shift = a.num_measurements();
    if (a.noise_cutoff == SIZE_MAX && b.noise_cutoff != SIZE_MAX)
        a.noise_cutoff = a.instructions.size() + b.noise_cutoff;
    a.instructions.insert(a.instructions.end(), b.instructions.begin(), b.instructions.end());
    for (auto d : b.detectors) {
        for (auto& r : d.recs) r += shift;
        a.detectors.push_back(std::move(d));
    }
    for (auto o : b.observables) {
        for (auto& r : o.recs) r += shift;
        a.observables.push_back(std::move(o));
    }
    for (auto& [q, xy] : b.coords) a.coords.emplace(q, xy);
}

namespace {

std::string fmt_prob(double p) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", p);
    return buf;
}

}  // namespace

std::string serialize_text(const DetectorCircuit& c) {
    std::ostringstream out;
    for (auto& [q, xy] : c.coords)
        out << "QUBIT_COORDS " << q << " " << fmt_prob(xy.first) << " " << fmt_prob(xy.second) << "\n";

    // Emit each detector/observable after the measurement completing it.
    size_t nrec = 0;
    std::vector<std::vector<size_t>> det_at(c.instructions.size() + 1);
    std::vector<std::vector<size_t>> obs_at(c.instructions.size() + 1);
    {
        // map absolute record -> instruction index after which it exists
        std::vector<size_t> rec_end;
        for (size_t i = 0; i < c.instructions.size(); i++)
            if (opcode_is_measurement(c.instructions[i].op))
                for (size_t k = 0; k < c.instructions[i].targets.size(); k++) rec_end.push_back(i + 1);
        auto place = [&](const std::vector<uint64_t>& recs) -> size_t {
            size_t pos = 0;
            for (auto r : recs) {
                if (r >= rec_end.size()) throw std::invalid_argument("detector references missing record");
                pos = std::max(pos, rec_end[r]);
            }
            return pos;
        };
        for (size_t d = 0; d < c.detectors.size(); d++) det_at[place(c.detectors[d].recs)].push_back(d);
        for (size_t o = 0; o < c.observables.size(); o++)
            if (!c.observables[o].recs.empty()) obs_at[place(c.observables[o].recs)].push_back(o);
    }

    auto emit_marks = [&](size_t pos, size_t recs_so_far) {
        for (size_t d : det_at[pos]) {
            auto& det = c.detectors[d];
            out << "DETECTOR[" << (det.region == Region::CULTIVATE ? "CULTIVATE" : "ESCAPE") << "]";
            for (auto r : det.recs) out << " rec[-" << (recs_so_far - r) << "]";
            out << "\n";
        }
        for (size_t o : obs_at[pos]) {
            out << "OBSERVABLE " << o;
            for (auto r : c.observables[o].recs) out << " rec[-" << (recs_so_far - r) << "]";
            out << "\n";
        }
    };

    emit_marks(0, 0);
    for (size_t i = 0; i < c.instructions.size(); i++) {
        auto& ins = c.instructions[i];
        if (ins.op == Opcode::TICK) {
            out << "TICK\n";
        } else {
            out << opcode_name(ins.op);
            if (info(ins.op).has_arg) out << "(" << fmt_prob(ins.arg) << ")";
            for (auto t : ins.targets) out << " " << t;
            out << "\n";
        }
        if (opcode_is_measurement(ins.op)) nrec += ins.targets.size();
        emit_marks(i + 1, nrec);
    }
    return out.str();
}

DetectorCircuit parse_text(const std::string& text) {
    DetectorCircuit c;
    size_t nrec = 0;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("parse error at line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        lineno++;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;

        if (word == "TICK") {
            c.tick();
            continue;
        }
        if (word == "QUBIT_COORDS") {
            uint32_t q;
            double x, y;
            if (!(ls >> q >> x >> y)) fail("QUBIT_COORDS wants: q x y");
            c.coords[q] = {x, y};
            continue;
        }
        if (word.rfind("DETECTOR", 0) == 0 || word == "OBSERVABLE") {
            Detector det;
            Observable obs;
            bool is_det = word != "OBSERVABLE";
            size_t obs_index = 0;
            if (is_det) {
                if (word == "DETECTOR[CULTIVATE]" || word == "DETECTOR") det.region = Region::CULTIVATE;
                else if (word == "DETECTOR[ESCAPE]") det.region = Region::ESCAPE;
                else fail("unknown detector region tag");
            } else {
                if (!(ls >> obs_index)) fail("OBSERVABLE wants an index");
            }
            std::string ref;
            std::vector<uint64_t> recs;
            while (ls >> ref) {
                if (ref.rfind("rec[-", 0) != 0 || ref.back() != ']') fail("bad record reference " + ref);
                long k = std::stol(ref.substr(5, ref.size() - 6));
                if (k <= 0 || size_t(k) > nrec) fail("dangling record offset " + ref);
                recs.push_back(nrec - size_t(k));
            }
            if (is_det) {
                det.recs = std::move(recs);
                c.detectors.push_back(std::move(det));
            } else {
                if (c.observables.size() <= obs_index) c.observables.resize(obs_index + 1);
                auto& dst = c.observables[obs_index].recs;
                dst.insert(dst.end(), recs.begin(), recs.end());
            }
            continue;
        }

        std::string opname = word;
        double arg = 0.0;
        bool has_arg = false;
        if (auto par = word.find('('); par != std::string::npos) {
            if (word.back() != ')') fail("malformed argument");
            opname = word.substr(0, par);
            arg = std::stod(word.substr(par + 1, word.size() - par - 2));
            has_arg = true;
        }
        int found = -1;
        for (size_t k = 0; k < std::size(kOps); k++)
            if (kOps[k].name == opname) { found = int(k); break; }
        if (found < 0) fail("unknown opcode " + opname);
        Opcode op = static_cast<Opcode>(found);
        if (info(op).has_arg != has_arg) fail("argument mismatch for " + opname);
        if (has_arg && (arg < 0.0 || arg > 1.0)) fail("probability out of range");
        Instruction ins{op, arg, {}};
        uint32_t t;
        while (ls >> t) ins.targets.push_back(t);
        if (ins.targets.empty()) fail("instruction without targets");
        if (opcode_is_two_qubit(op) && ins.targets.size() % 2 != 0)
            fail("two-qubit opcode with odd target count");
        if (opcode_is_measurement(op)) nrec += ins.targets.size();
        c.instructions.push_back(std::move(ins));
    }
    return c;
}

DetectorCircuit clifford_substitute(const DetectorCircuit& c) {
    DetectorCircuit out = c;
    for (auto& ins : out.instructions) {
        if (ins.op == Opcode::T) ins.op = Opcode::S;
        else if (ins.op == Opcode::T_DAG) ins.op = Opcode::S_DAG;
    }
    return out;
}

}  // namespace scc
