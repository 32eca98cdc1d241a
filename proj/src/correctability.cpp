#include "tscc/correctability.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tscc {

namespace {

// Symplectic column restriction: both the X and Z columns of each listed
// qubit, in qubit order.
std::vector<std::size_t> symplectic_columns(std::span<const uint32_t> qubits, std::size_t n) {
    std::vector<std::size_t> cols;
    cols.reserve(2 * qubits.size());
    for (uint32_t q : qubits) {
        cols.push_back(q);
        cols.push_back(n + q);
    }
    return cols;
}

std::vector<uint32_t> complement(std::span<const uint32_t> qubits, std::size_t n) {
    std::vector<char> in(n, 0);
    for (uint32_t q : qubits) in[q] = 1;
    std::vector<uint32_t> out;
    out.reserve(n - qubits.size());
    for (uint32_t q = 0; q < n; ++q) {
        if (!in[q]) out.push_back(q);
    }
    return out;
}

}  // namespace

CorrectabilityVerdict tscc_correctable(const TsccCode& code, std::span<const uint32_t> erased) {
    CorrectabilityVerdict v;
    v.lhs = 2 * erased.size();

    auto cols_e = symplectic_columns(erased, code.n);
    std::size_t rank_he = gf2::rank(gf2::column_submatrix(code.stab_matrix, cols_e));

    auto not_erased = complement(erased, code.n);
    auto cols_ebar = symplectic_columns(not_erased, code.n);
    std::size_t rank_gebar = gf2::rank(gf2::column_submatrix(code.gauge_matrix, cols_ebar));

    v.rhs = rank_he + code.rank_gauge - rank_gebar;
    if (v.lhs < v.rhs) throw std::logic_error("tscc_correctable: rank identity bound violated");
    v.correctable = v.lhs == v.rhs;
    return v;
}

bool stack_correctable(const TsccCode& code, std::span<const uint32_t> erased) {
    const std::size_t F = code.num_faces();
    const std::size_t V = code.num_vertices();

    // Stabilizer matrix of the parent color code: an X and a Z check per
    // face, over the 2V symplectic columns. Identical for all three stacks.
    BinaryMatrix hc(2 * F, 2 * V);
    for (std::size_t f = 0; f < F; ++f) {
        for (std::size_t v = 0; v < V; ++v) {
            if (!code.face_vertex.get(f, v)) continue;
            hc.set(f, v, true);          // X-type row
            hc.set(F + f, V + v, true);  // Z-type row
        }
    }
    std::size_t rank_hc = gf2::rank(hc);

    for (Color c : {Color::Red, Color::Green, Color::Blue}) {
        std::vector<uint32_t> ec;
        for (uint32_t q : erased) {
            if (code.hg.stack_of[q] == c) ec.push_back(code.hg.vertex_of[q]);
        }
        std::sort(ec.begin(), ec.end());

        auto cols_e = symplectic_columns(ec, V);
        std::size_t rank_he = gf2::rank(gf2::column_submatrix(hc, cols_e));
        auto cols_ebar = symplectic_columns(complement(ec, V), V);
        std::size_t rank_hebar = gf2::rank(gf2::column_submatrix(hc, cols_ebar));

        if (2 * ec.size() > rank_hc + rank_he - rank_hebar) return false;
    }
    return true;
}

bool brute_force_correctable(const TsccCode& code, std::span<const uint32_t> erased,
                             std::size_t max_kernel_dim) {
    if (erased.empty()) return true;
    const std::size_t m = erased.size();

    // Syndrome map restricted to Paulis supported on the erasure, columns
    // laid out as (x_0, z_0, x_1, z_1, ...). Row i reads the commutation of
    // stabilizer i with the candidate.
    BinaryMatrix smap(code.stab_matrix.rows(), 2 * m);
    for (std::size_t i = 0; i < code.stab_matrix.rows(); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (code.stab_matrix.get(i, code.n + erased[j])) smap.set(i, 2 * j, true);  // z-check sees x
            if (code.stab_matrix.get(i, erased[j])) smap.set(i, 2 * j + 1, true);       // x-check sees z
        }
    }
    std::vector<BinaryVector> kernel = gf2::nullspace_basis(smap);
    if (kernel.size() > max_kernel_dim) {
        throw std::invalid_argument("brute_force_correctable: kernel dimension exceeds the oracle cap");
    }

    // Embed kernel basis vectors as full symplectic vectors.
    std::vector<BinaryVector> emb;
    emb.reserve(kernel.size());
    for (const BinaryVector& kv : kernel) {
        BinaryVector full(2 * code.n);
        for (std::size_t j = 0; j < m; ++j) {
            if (kv.get(2 * j)) full.set(erased[j], true);
            if (kv.get(2 * j + 1)) full.set(code.n + erased[j], true);
        }
        emb.push_back(std::move(full));
    }

    // Gray-code walk over the whole kernel span.
    BinaryVector current(2 * code.n);
    uint64_t total = uint64_t(1) << emb.size();
    for (uint64_t it = 1; it < total; ++it) {
        current ^= emb[std::countr_zero(it)];
        if (!code.gauge_span.contains(current)) return false;
    }
    return true;
}

}  // namespace tscc
