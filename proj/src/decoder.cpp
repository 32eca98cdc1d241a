#include "tscc/decoder.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tscc {

namespace {

bool row_dot(const BinaryMatrix& m, std::size_t r, const BinaryVector& v) {
    auto rw = m.row_words(r);
    auto vw = v.words();
    uint64_t acc = 0;
    for (std::size_t i = 0; i < rw.size(); ++i) acc ^= rw[i] & vw[i];
    return std::popcount(acc) & 1u;
}

// Applies a Pauli (bx, bz) on qubit q to the tracked syndromes.
void apply_qubit(const TsccCode& code, uint32_t q, bool bx, bool bz, SyndromeSet& syn) {
    const QubitIncidence& qi = code.qubit_checks[q];
    Color c = code.hg.stack_of[q];
    if (bx) syn.w1.flip(code.hg.face_of[q]);
    for (int t = 0; t < 3; ++t) {
        uint32_t f = qi.faces[t];
        bool w2_flip = (qi.w2_sees_x[t] && bx) ^ bz;
        if (w2_flip) syn.w2.flip(f);
        if (bx) syn.cc_x[uint8_t(c)].flip(f);
        if (syn.has_cc_z && bz) syn.cc_z[uint8_t(c)].flip(f);
    }
}

struct UnionFind {
    std::vector<uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    uint32_t find(uint32_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(uint32_t a, uint32_t b) { parent[find(a)] = find(b); }
};

// Shared solve on the parent lattice: restrict the face-vertex incidence to
// the given rows and vertex columns and solve against the syndrome bits.
std::vector<uint32_t> solve_on_vertices(const TsccCode& code, const std::vector<uint32_t>& rows,
                                        const std::vector<uint32_t>& verts, const BinaryVector& bits) {
    BinaryMatrix a(rows.size(), verts.size());
    BinaryVector b(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < verts.size(); ++j) {
            if (code.face_vertex.get(rows[i], verts[j])) a.set(i, j, true);
        }
        if (bits.get(rows[i])) b.set(i, true);
    }
    auto x = gf2::solve(a, b);
    if (!x) throw std::logic_error("erasure decode: inconsistent linear system");
    std::vector<uint32_t> chosen;
    for (std::size_t j = 0; j < verts.size(); ++j) {
        if (x->get(j)) chosen.push_back(verts[j]);
    }
    return chosen;
}

std::vector<uint32_t> touched_faces(const TsccCode& code, const std::vector<uint32_t>& verts) {
    std::vector<uint32_t> rows;
    for (uint32_t v : verts) {
        for (uint32_t q : code.hg.triangle(v)) rows.push_back(code.hg.face_of[q]);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

std::vector<uint32_t> stack_vertices(const TsccCode& code, std::span<const uint32_t> qubits, Color c) {
    std::vector<uint32_t> verts;
    for (uint32_t q : qubits) {
        if (code.hg.stack_of[q] == c) verts.push_back(code.hg.vertex_of[q]);
    }
    return verts;
}

}  // namespace

SyndromeSet extract_syndrome(const TsccCode& code, Mode mode, const PauliOperator& error) {
    if (error.num_qubits() != code.n) throw std::invalid_argument("extract_syndrome: size mismatch");
    const std::size_t F = code.num_faces();
    const std::size_t V = code.num_vertices();

    SyndromeSet syn;
    syn.w1 = BinaryVector(F);
    syn.w2 = BinaryVector(F);
    for (int c = 0; c < 3; ++c) {
        syn.cc_x[c] = BinaryVector(F);
        syn.cc_z[c] = BinaryVector(F);
    }
    syn.has_cc_z = mode == Mode::Maximal;

    // Stack projections of the error onto the parent vertex space.
    std::array<BinaryVector, 3> px, pz;
    for (int c = 0; c < 3; ++c) {
        px[c] = BinaryVector(V);
        pz[c] = BinaryVector(V);
        for (std::size_t v = 0; v < V; ++v) {
            uint32_t q = code.stack_qubits[c][v];
            if (error.x.get(q)) px[c].set(v, true);
            if (error.z.get(q)) pz[c].set(v, true);
        }
    }
    for (std::size_t f = 0; f < F; ++f) {
        for (int c = 0; c < 3; ++c) {
            if (row_dot(code.face_vertex, f, px[c])) syn.cc_x[c].set(f, true);
            if (syn.has_cc_z && row_dot(code.face_vertex, f, pz[c])) syn.cc_z[c].set(f, true);
        }
        Color cf = code.hg.faces[f].color;
        if (syn.cc_x[uint8_t(cf)].get(f)) syn.w1.set(f, true);
        if (mode == Mode::Partial) {
            bool bit = code.w2_xmask[f].dot(error.z) ^ code.w2_zmask[f].dot(error.x);
            if (bit) syn.w2.set(f, true);
        } else {
            // Hypercycle syndrome from the three per-stack stabilizers; the
            // Y bits are the XOR of the X and Z bits of the same check.
            Color pc = prev_color(cf), nc = next_color(cf);
            bool bit = syn.cc_z[uint8_t(pc)].get(f);
            bit ^= syn.cc_x[uint8_t(cf)].get(f) ^ syn.cc_z[uint8_t(cf)].get(f);
            bit ^= syn.cc_x[uint8_t(nc)].get(f) ^ syn.cc_z[uint8_t(nc)].get(f);
            if (bit) syn.w2.set(f, true);
        }
    }
    return syn;
}

PeelResult peel(const TsccCode& code, std::span<const uint32_t> erased, SyndromeSet& syn) {
    const std::size_t F = code.num_faces();
    PeelResult res;
    res.estimate = PauliOperator(code.n);

    std::vector<char> is_erased(code.n, 0);
    for (uint32_t q : erased) is_erased[q] = 1;

    // Erased-support counts for the TSCC stabilizers.
    std::vector<int> w1_count(F, 0), w2_count(F, 0);
    for (std::size_t f = 0; f < F; ++f) {
        for (uint32_t q : code.hg.faces[f].qubits) w1_count[f] += is_erased[q];
        for (uint32_t v : code.hg.colex.face_vertices_distinct[f]) {
            for (uint32_t q : code.hg.triangle(v)) w2_count[f] += is_erased[q];
        }
    }

    std::vector<uint32_t> work(erased.begin(), erased.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (uint32_t q : work) {
            if (!is_erased[q]) continue;
            const QubitIncidence& qi = code.qubit_checks[q];
            // Equations a*x + b*z = s from isolated checks.
            std::vector<std::array<bool, 3>> eqs;
            if (w1_count[code.hg.face_of[q]] == 1) {
                eqs.push_back({true, false, syn.w1.get(code.hg.face_of[q])});
            }
            for (int t = 0; t < 3; ++t) {
                uint32_t f = qi.faces[t];
                if (w2_count[f] == 1) eqs.push_back({qi.w2_sees_x[t], true, syn.w2.get(f)});
            }
            int n_solutions = 0;
            bool sx = false, sz = false;
            for (int bx = 0; bx < 2; ++bx) {
                for (int bz = 0; bz < 2; ++bz) {
                    bool ok = true;
                    for (const auto& e : eqs) ok = ok && (((e[0] & bx) ^ (e[1] & bz)) == e[2]);
                    if (ok) {
                        ++n_solutions;
                        sx = bx;
                        sz = bz;
                    }
                }
            }
            if (n_solutions != 1) continue;
            if (sx) res.estimate.x.set(q, true);
            if (sz) res.estimate.z.set(q, true);
            apply_qubit(code, q, sx, sz, syn);
            is_erased[q] = 0;
            w1_count[code.hg.face_of[q]] -= 1;
            for (int t = 0; t < 3; ++t) w2_count[qi.faces[t]] -= 1;
            changed = true;
        }
    }
    for (uint32_t q : work) {
        if (is_erased[q]) res.remaining.push_back(q);
    }
    return res;
}

std::vector<std::vector<uint32_t>> cluster(const TsccCode& code, std::span<const uint32_t> erased) {
    std::vector<int32_t> pos(code.n, -1);
    for (std::size_t i = 0; i < erased.size(); ++i) pos[erased[i]] = int32_t(i);
    UnionFind uf(erased.size());
    // Scanning faces in index order; every hypercycle stabilizer support is a
    // superset of the matching boundary-cycle support, so W2 supports suffice.
    for (std::size_t f = 0; f < code.num_faces(); ++f) {
        int32_t first = -1;
        for (uint32_t v : code.hg.colex.face_vertices_distinct[f]) {
            for (uint32_t q : code.hg.triangle(v)) {
                if (pos[q] < 0) continue;
                if (first < 0) {
                    first = pos[q];
                } else {
                    uf.unite(uint32_t(first), uint32_t(pos[q]));
                }
            }
        }
    }
    std::vector<std::vector<uint32_t>> out;
    std::vector<int32_t> root_index(erased.size(), -1);
    for (std::size_t i = 0; i < erased.size(); ++i) {
        uint32_t r = uf.find(uint32_t(i));
        if (root_index[r] < 0) {
            root_index[r] = int32_t(out.size());
            out.emplace_back();
        }
        out[root_index[r]].push_back(erased[i]);
    }
    return out;
}

PauliOperator cc_erasure_decode(const OperatorSet& stab_checks, std::span<const uint32_t> erased,
                                const BinaryVector& syn_bits) {
    if (stab_checks.size() != syn_bits.size()) {
        throw std::invalid_argument("cc_erasure_decode: syndrome length mismatch");
    }
    bool any_x = false, any_z = false;
    for (const auto& op : stab_checks.ops) {
        any_x = any_x || op.x.any();
        any_z = any_z || op.z.any();
    }
    if (any_x == any_z) throw std::invalid_argument("cc_erasure_decode: checks must be single-type");
    const std::size_t n = stab_checks.num_qubits();

    BinaryMatrix a(stab_checks.size(), erased.size());
    for (std::size_t i = 0; i < stab_checks.size(); ++i) {
        const BinaryVector& supp = any_z ? stab_checks.ops[i].z : stab_checks.ops[i].x;
        for (std::size_t j = 0; j < erased.size(); ++j) {
            if (supp.get(erased[j])) a.set(i, j, true);
        }
    }
    auto x = gf2::solve(a, syn_bits);
    if (!x) throw std::logic_error("cc_erasure_decode: inconsistent system");
    PauliOperator est(n);
    for (std::size_t j = 0; j < erased.size(); ++j) {
        if (!x->get(j)) continue;
        if (any_z) {
            est.mul_x(erased[j]);  // Z-type checks detect X errors
        } else {
            est.mul_z(erased[j]);
        }
    }
    return est;
}

PauliOperator correct_x(const TsccCode& code, std::span<const uint32_t> cluster_erased, SyndromeSet& syn) {
    PauliOperator est(code.n);
    for (Color c : {Color::Red, Color::Green, Color::Blue}) {
        std::vector<uint32_t> verts = stack_vertices(code, cluster_erased, c);
        if (verts.empty()) continue;
        std::vector<uint32_t> rows = touched_faces(code, verts);
        for (uint32_t v : solve_on_vertices(code, rows, verts, syn.cc_x[uint8_t(c)])) {
            uint32_t q = code.stack_qubits[uint8_t(c)][v];
            est.mul_x(q);
            apply_qubit(code, q, true, false, syn);
        }
    }
    return est;
}

PauliOperator correct_z_plain(const TsccCode& code, std::span<const uint32_t> cluster_erased, SyndromeSet& syn) {
    PauliOperator est(code.n);
    std::vector<uint32_t> verts;
    for (uint32_t q : cluster_erased) verts.push_back(code.hg.vertex_of[q]);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.empty()) return est;
    std::vector<uint32_t> rows = touched_faces(code, verts);
    for (uint32_t v : solve_on_vertices(code, rows, verts, syn.w2)) {
        // Z on the lowest-indexed erased qubit of the inflated triangle.
        uint32_t q = code.n;
        for (uint32_t cand : code.hg.triangle(v)) {
            if (std::find(cluster_erased.begin(), cluster_erased.end(), cand) != cluster_erased.end()) {
                q = std::min(q, cand);
            }
        }
        if (q == code.n) throw std::logic_error("correct_z_plain: estimated vertex without erased qubit");
        est.mul_z(q);
        apply_qubit(code, q, false, true, syn);
    }
    return est;
}

PauliOperator correct_z_gauge(const TsccCode& code, std::span<const uint32_t> cluster_erased, SyndromeSet& syn) {
    if (!syn.has_cc_z) throw std::invalid_argument("correct_z_gauge: X-type stack syndromes unavailable");
    PauliOperator est(code.n);
    for (Color c : {Color::Red, Color::Green, Color::Blue}) {
        std::vector<uint32_t> verts = stack_vertices(code, cluster_erased, c);
        if (verts.empty()) continue;
        std::vector<uint32_t> rows = touched_faces(code, verts);
        for (uint32_t v : solve_on_vertices(code, rows, verts, syn.cc_z[uint8_t(c)])) {
            uint32_t q = code.stack_qubits[uint8_t(c)][v];
            est.mul_z(q);
            apply_qubit(code, q, false, true, syn);
        }
    }
    return est;
}

DecodeOutcome decode(const TsccCode& code, Mode mode, const ErasurePattern& pattern,
                     const DecodeOptions& opts) {
    SyndromeSet syn = extract_syndrome(code, mode, pattern.induced);
    PeelResult peeled = peel(code, pattern.erased, syn);

    std::vector<std::vector<uint32_t>> clusters = cluster(code, peeled.remaining);
    if (opts.reverse_clusters) std::reverse(clusters.begin(), clusters.end());

    PauliOperator estimate = peeled.estimate;
    for (const auto& cl : clusters) {
        if (mode == Mode::Maximal && opts.z_stage_first) {
            estimate = product(estimate, correct_z_gauge(code, cl, syn));
            estimate = product(estimate, correct_x(code, cl, syn));
        } else {
            estimate = product(estimate, correct_x(code, cl, syn));
            if (mode == Mode::Partial) {
                estimate = product(estimate, correct_z_plain(code, cl, syn));
            } else {
                estimate = product(estimate, correct_z_gauge(code, cl, syn));
            }
        }
    }

    DecodeOutcome out;
    out.estimate = std::move(estimate);
    PauliOperator residual = product(pattern.induced, out.estimate);
    out.failed = false;
    for (const PauliOperator& l : code.bare_logicals) {
        if (!commutes(residual, l)) {
            out.failed = true;
            break;
        }
    }
    return out;
}

}  // namespace tscc
