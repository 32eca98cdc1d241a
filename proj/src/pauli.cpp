#include "tscc/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace tscc {

std::size_t PauliOperator::weight() const {
    std::size_t n = 0;
    auto xw = x.words();
    auto zw = z.words();
    for (std::size_t i = 0; i < xw.size(); ++i) n += std::popcount(xw[i] | zw[i]);
    return n;
}

std::vector<std::size_t> PauliOperator::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        if (x.get(q) || z.get(q)) out.push_back(q);
    }
    return out;
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t q, char pauli) {
    PauliOperator p(n);
    switch (pauli) {
        case 'X': p.mul_x(q); break;
        case 'Y': p.mul_y(q); break;
        case 'Z': p.mul_z(q); break;
        case 'I': break;
        default: throw std::invalid_argument("PauliOperator::single: unknown pauli");
    }
    return p;
}

std::string PauliOperator::to_string() const {
    std::string s(num_qubits(), 'I');
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        bool xb = x.get(q), zb = z.get(q);
        if (xb && zb) {
            s[q] = 'Y';
        } else if (xb) {
            s[q] = 'X';
        } else if (zb) {
            s[q] = 'Z';
        }
    }
    return s;
}

BinaryVector PauliOperator::symplectic() const {
    std::size_t n = num_qubits();
    BinaryVector v(2 * n);
    for (std::size_t q : x.ones()) v.set(q, true);
    for (std::size_t q : z.ones()) v.set(n + q, true);
    return v;
}

PauliOperator PauliOperator::from_symplectic(const BinaryVector& v) {
    if (v.size() % 2 != 0) throw std::invalid_argument("from_symplectic: odd length");
    std::size_t n = v.size() / 2;
    PauliOperator p(n);
    for (std::size_t i : v.ones()) {
        if (i < n) {
            p.x.set(i, true);
        } else {
            p.z.set(i - n, true);
        }
    }
    return p;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("commutes: size mismatch");
    return !(a.x.dot(b.z) ^ a.z.dot(b.x));
}

PauliOperator product(const PauliOperator& a, const PauliOperator& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("product: size mismatch");
    PauliOperator p = a;
    p.x ^= b.x;
    p.z ^= b.z;
    return p;
}

OperatorSet::OperatorSet(std::vector<PauliOperator> v) : ops(std::move(v)) {
    for (const auto& op : ops) {
        if (op.num_qubits() != num_qubits()) throw std::invalid_argument("OperatorSet: mixed qubit counts");
    }
}

void OperatorSet::push_back(PauliOperator op) {
    if (!ops.empty() && op.num_qubits() != num_qubits()) {
        throw std::invalid_argument("OperatorSet::push_back: size mismatch");
    }
    ops.push_back(std::move(op));
}

BinaryMatrix OperatorSet::symplectic_matrix() const {
    BinaryMatrix m(ops.size(), 2 * num_qubits());
    for (std::size_t i = 0; i < ops.size(); ++i) m.set_row(i, ops[i].symplectic());
    return m;
}

BinaryVector syndrome(const OperatorSet& checks, const PauliOperator& error) {
    BinaryVector s(checks.size());
    for (std::size_t i = 0; i < checks.size(); ++i) {
        if (!commutes(checks.ops[i], error)) s.set(i, true);
    }
    return s;
}

bool in_group(const PauliOperator& candidate, const OperatorSet& generators) {
    gf2::RowSpace span(generators.symplectic_matrix());
    return in_group(candidate, span);
}

bool in_group(const PauliOperator& candidate, const gf2::RowSpace& generator_span) {
    return generator_span.contains(candidate.symplectic());
}

}  // namespace tscc
