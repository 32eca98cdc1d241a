#pragma once

#include <span>

#include "tscc/code.hpp"

namespace tscc {

// Rank identity verdict for an erasure pattern on the subsystem code.
// lhs = 2|E|, rhs = rank(H_E) + rank(G) - rank(G_Ebar); lhs >= rhs always,
// and the pattern is correctable without gauge fixing iff they are equal.
struct CorrectabilityVerdict {
    bool correctable = false;
    std::size_t lhs = 0;
    std::size_t rhs = 0;
};

CorrectabilityVerdict tscc_correctable(const TsccCode& code, std::span<const uint32_t> erased);

// Sufficient condition for the order-maximal decoder: the stabilizer-code
// erasure bound holds on each of the three color-code copies.
bool stack_correctable(const TsccCode& code, std::span<const uint32_t> erased);

// Exhaustive oracle: enumerates every syndrome-free Pauli supported on the
// erasure (parametrized by a kernel basis) and tests membership in the gauge
// group. Throws if the kernel dimension exceeds the cap.
bool brute_force_correctable(const TsccCode& code, std::span<const uint32_t> erased,
                             std::size_t max_kernel_dim = 22);

}  // namespace tscc
