#pragma once

#include <cstdint>
#include <vector>

#include "tscc/pauli.hpp"

namespace tscc {

// Counter-based splitmix64 stream. A (seed, stream) pair fully determines
// the sample sequence, so per-trial substreams reproduce independently of
// worker scheduling.
class RngStream {
public:
    explicit RngStream(uint64_t seed, uint64_t stream = 0);

    uint64_t next_u64();
    // Uniform in [0, 1).
    double next_double();
    // True with the given probability.
    bool bernoulli(double p);
    uint32_t next_below(uint32_t bound);

private:
    uint64_t state_;
};

struct ErasurePattern {
    std::size_t n = 0;
    std::vector<uint32_t> erased;  // sorted qubit indices
    PauliOperator induced;         // support contained in erased
};

// Erases each qubit independently with probability eps and draws the induced
// Pauli uniformly from {I, X, Y, Z} on each erased qubit.
ErasurePattern sample_erasure(std::size_t n, double eps, RngStream& rng);

}  // namespace tscc
