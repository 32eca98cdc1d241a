#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tscc/gf2.hpp"

namespace tscc {

// n-qubit Pauli operator in the binary symplectic representation (X part,
// Z part); global phases are dropped throughout.
struct PauliOperator {
    BinaryVector x;
    BinaryVector z;

    PauliOperator() = default;
    explicit PauliOperator(std::size_t n) : x(n), z(n) {}

    std::size_t num_qubits() const { return x.size(); }

    bool is_identity() const { return !x.any() && !z.any(); }
    std::size_t weight() const;
    std::vector<std::size_t> support() const;

    void mul_x(std::size_t q) { x.flip(q); }
    void mul_z(std::size_t q) { z.flip(q); }
    void mul_y(std::size_t q) { x.flip(q); z.flip(q); }

    bool operator==(const PauliOperator& other) const = default;

    static PauliOperator single(std::size_t n, std::size_t q, char pauli);
    std::string to_string() const;

    // Concatenated (x|z) vector of length 2n.
    BinaryVector symplectic() const;
    static PauliOperator from_symplectic(const BinaryVector& v);
};

bool commutes(const PauliOperator& a, const PauliOperator& b);
PauliOperator product(const PauliOperator& a, const PauliOperator& b);

// Ordered list of Pauli operators on a common qubit count, with a matrix view
// whose rows are the symplectic vectors.
struct OperatorSet {
    std::vector<PauliOperator> ops;

    OperatorSet() = default;
    explicit OperatorSet(std::vector<PauliOperator> v);

    std::size_t size() const { return ops.size(); }
    std::size_t num_qubits() const { return ops.empty() ? 0 : ops.front().num_qubits(); }
    void push_back(PauliOperator op);

    BinaryMatrix symplectic_matrix() const;
};

// Bit i is set iff checks[i] anticommutes with the error.
BinaryVector syndrome(const OperatorSet& checks, const PauliOperator& error);

// True iff the candidate lies in the GF(2) row span of the generators'
// symplectic vectors.
bool in_group(const PauliOperator& candidate, const OperatorSet& generators);
bool in_group(const PauliOperator& candidate, const gf2::RowSpace& generator_span);

}  // namespace tscc
