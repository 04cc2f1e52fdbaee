#pragma once

#include <cstdint>
#include <random>

#include "scc/circuit.hpp"

namespace scc {

// Bit-packed sample batch: bit s of word w is shot 64*w + s.
struct FrameBatch {
    size_t shots = 0;
    size_t words = 0;
    size_t num_detectors = 0, num_observables = 0;
    std::vector<uint64_t> det;  // [detector * words + w]
    std::vector<uint64_t> obs;

    const uint64_t* det_row(size_t d) const { return det.data() + d * words; }
    const uint64_t* obs_row(size_t o) const { return obs.data() + o * words; }
    bool det_bit(size_t d, size_t s) const { return (det_row(d)[s >> 6] >> (s & 63)) & 1; }
    bool obs_bit(size_t o, size_t s) const { return (obs_row(o)[s >> 6] >> (s & 63)) & 1; }
};

// Pauli-frame sampler. Propagates sampled error frames through the Clifford
// circuit and reports detector/observable flips relative to the noiseless
// reference trajectory. Bit-identical results for identical seeds.
class FrameSampler {
  public:
    explicit FrameSampler(const DetectorCircuit& c);

    FrameBatch sample(size_t shots, uint64_t seed) const;

    size_t num_detectors() const { return circuit_.detectors.size(); }
    size_t num_observables() const { return circuit_.observables.size(); }
    const std::vector<Region>& detector_regions() const { return regions_; }

  private:
    DetectorCircuit circuit_;
    size_t nq_ = 0, nrec_ = 0;
    // Pre-resolved record index lists: per measurement instruction the base
    // record, and per FLIP_RESULT instruction the affected record per target.
    std::vector<size_t> inst_rec_base_;
    std::vector<std::vector<uint64_t>> flip_recs_;
    std::vector<Region> regions_;
};

}  // namespace scc
