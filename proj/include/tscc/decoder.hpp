#pragma once

#include <span>
#include <vector>

#include "tscc/code.hpp"
#include "tscc/erasure.hpp"

namespace tscc {

// Syndrome bits per check family, indexed by face. cc_x holds the Z-type
// stack checks (they detect X errors), cc_z the X-type stack checks; the
// latter is populated only by the order-maximal extraction.
struct SyndromeSet {
    BinaryVector w1;
    BinaryVector w2;
    std::array<BinaryVector, 3> cc_x;
    std::array<BinaryVector, 3> cc_z;
    bool has_cc_z = false;
};

struct DecodeOutcome {
    PauliOperator estimate;
    bool failed = false;
};

struct DecodeOptions {
    bool reverse_clusters = false;  // process clusters in reverse scan order
    bool z_stage_first = false;     // order-maximal mode only: swap the stages
};

SyndromeSet extract_syndrome(const TsccCode& code, Mode mode, const PauliOperator& error);

struct PeelResult {
    PauliOperator estimate;
    std::vector<uint32_t> remaining;  // erased qubits left after peeling
};

// Corrects every erased qubit that is fully determined by stabilizer checks
// whose erased support is exactly that qubit, updating the syndromes.
PeelResult peel(const TsccCode& code, std::span<const uint32_t> erased, SyndromeSet& syn);

// Union-find grouping: two erased qubits land in one cluster iff some TSCC
// stabilizer supports both. Clusters are sorted by their smallest member.
std::vector<std::vector<uint32_t>> cluster(const TsccCode& code, std::span<const uint32_t> erased);

// Single-type erasure decoding: solves for an estimate supported on the
// erased qubits that reproduces the given syndrome. Z-type checks produce an
// X-type estimate and vice versa. Inconsistency throws (erasure-induced
// syndromes are always consistent).
PauliOperator cc_erasure_decode(const OperatorSet& stab_checks, std::span<const uint32_t> erased,
                                const BinaryVector& syn_bits);

PauliOperator correct_x(const TsccCode& code, std::span<const uint32_t> cluster_erased, SyndromeSet& syn);
PauliOperator correct_z_plain(const TsccCode& code, std::span<const uint32_t> cluster_erased, SyndromeSet& syn);
PauliOperator correct_z_gauge(const TsccCode& code, std::span<const uint32_t> cluster_erased, SyndromeSet& syn);

DecodeOutcome decode(const TsccCode& code, Mode mode, const ErasurePattern& pattern,
                     const DecodeOptions& opts = {});

}  // namespace tscc
