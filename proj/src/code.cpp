#include "tscc/code.hpp"

#include <algorithm>
#include <sstream>

#include "tscc/verify.hpp"

namespace tscc {

const char* mode_name(Mode m) { return m == Mode::Partial ? "partial" : "maximal"; }

std::string CheckId::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::W1: os << "W1[f" << face << "]"; break;
        case Kind::W2: os << "W2[f" << face << "]"; break;
        case Kind::Stack: os << "B^" << pauli << "[f" << face << "," << color_name(stack) << "]"; break;
    }
    return os.str();
}

const Recipe* MeasurementSchedule::find(const CheckId& id) const {
    for (const Recipe& r : recipes) {
        if (r.target == id) return &r;
    }
    return nullptr;
}

bool symplectic_omega(const BinaryVector& a, const BinaryVector& b) {
    std::size_t n = a.size() / 2;
    bool acc = false;
    for (std::size_t i : a.ones()) {
        // pair index i with its symplectic partner in b
        std::size_t partner = i < n ? i + n : i - n;
        acc ^= b.get(partner);
    }
    return acc;
}

const PauliOperator& TsccCode::cc_stab(Color stack, uint32_t face, char pauli) const {
    int t = pauli == 'X' ? 0 : pauli == 'Y' ? 1 : 2;
    return cc_[uint8_t(stack)][face][t];
}

const PauliOperator& TsccCode::check_operator(const CheckId& id) const {
    switch (id.kind) {
        case CheckId::Kind::W1: return w1[id.face];
        case CheckId::Kind::W2: return w2[id.face];
        case CheckId::Kind::Stack: return cc_stab(id.stack, id.face, id.pauli);
    }
    throw std::logic_error("check_operator: bad kind");
}

const Recipe& TsccCode::find_recipe(Mode mode, const CheckId& id) const {
    const MeasurementSchedule& s = mode == Mode::Partial ? partial_schedule : maximal_schedule;
    const Recipe* r = s.find(id);
    if (!r) throw std::invalid_argument("find_recipe: no recipe for " + id.to_string());
    return *r;
}

bool validate_sequencing(const std::vector<PauliOperator>& ops) {
    if (ops.empty()) return true;
    PauliOperator running = ops.front();
    for (std::size_t j = 1; j < ops.size(); ++j) {
        if (!commutes(ops[j], running)) return false;
        running = product(running, ops[j]);
    }
    return true;
}

std::vector<PauliOperator> recipe_operators(const MeasurementSchedule& sched, const Recipe& recipe) {
    std::vector<PauliOperator> out;
    out.reserve(recipe.ops.size());
    for (const GaugeRef& ref : recipe.ops) out.push_back(sched.rounds.at(ref.round).ops.at(ref.index));
    return out;
}

PauliOperator recipe_product(const TsccCode& code, const MeasurementSchedule& sched, const Recipe& recipe) {
    PauliOperator acc(code.n);
    if (recipe.direct()) {
        for (const GaugeRef& ref : recipe.ops) {
            acc = product(acc, sched.rounds.at(ref.round).ops.at(ref.index));
        }
    } else {
        for (const CheckId& src : recipe.xors) acc = product(acc, code.check_operator(src));
    }
    return acc;
}

const Recipe& z_stab_decomposition(const TsccCode& code, Color stack, uint32_t face) {
    return code.find_recipe(Mode::Partial, CheckId{CheckId::Kind::Stack, face, stack, 'Z'});
}

const Recipe& x_stab_decomposition(const TsccCode& code, Color stack, uint32_t face) {
    return code.find_recipe(Mode::Maximal, CheckId{CheckId::Kind::Stack, face, stack, 'X'});
}

namespace {

PauliOperator two_body(std::size_t n, uint32_t a, uint32_t b, char pauli) {
    PauliOperator p(n);
    switch (pauli) {
        case 'X': p.mul_x(a); p.mul_x(b); break;
        case 'Y': p.mul_y(a); p.mul_y(b); break;
        case 'Z': p.mul_z(a); p.mul_z(b); break;
        default: throw std::logic_error("two_body: bad pauli");
    }
    return p;
}

// ZZ gauge generator indices realizing Z_a Z_b on the triangle at a colex
// vertex, for stack colors a and b. The two canonical generators per
// triangle are Z_r Z_g and Z_g Z_b; the red-blue pair is their product.
std::vector<uint32_t> zz_batch_indices(uint32_t vertex, Color a, Color b) {
    if (uint8_t(a) > uint8_t(b)) std::swap(a, b);
    if (a == Color::Red && b == Color::Green) return {2 * vertex};
    if (a == Color::Green && b == Color::Blue) return {2 * vertex + 1};
    return {2 * vertex, 2 * vertex + 1};
}

}  // namespace

MeasurementSchedule build_schedule(const TsccCode& code, Mode mode) {
    const Hypergraph& hg = code.hg;
    MeasurementSchedule sched;
    sched.mode = mode;

    RoundBatch xx{"XX", {}}, yy{"YY", {}};
    for (uint32_t i : code.xx_gens) xx.ops.push_back(code.gauge_gens.ops[i]);
    for (uint32_t i : code.yy_gens) yy.ops.push_back(code.gauge_gens.ops[i]);
    sched.rounds.push_back(std::move(xx));
    sched.rounds.push_back(std::move(yy));
    if (mode == Mode::Partial) {
        RoundBatch zz{"ZZ", {}};
        for (uint32_t i : code.zz_gens) zz.ops.push_back(code.gauge_gens.ops[i]);
        sched.rounds.push_back(std::move(zz));
    } else {
        RoundBatch uq{"ZZZZ", {}};
        for (const PauliOperator& u : code.u_square) uq.ops.push_back(u);
        sched.rounds.push_back(std::move(uq));
    }

    // Position of each rank-2 edge's gauge operator inside round 0 or 1.
    std::vector<GaugeRef> edge_ref(hg.rank2.size());
    {
        uint32_t xi = 0, yi = 0;
        for (uint32_t e = 0; e < hg.rank2.size(); ++e) {
            if (hg.rank2[e].solid) {
                edge_ref[e] = {1, yi++};
            } else {
                edge_ref[e] = {0, xi++};
            }
        }
    }

    auto sigma1_refs = [&](uint32_t f, int want_solid) {
        std::vector<GaugeRef> refs;
        for (uint32_t e : hg.faces[f].sigma1) {
            if (int(hg.rank2[e].solid) == want_solid) refs.push_back(edge_ref[e]);
        }
        return refs;
    };
    // Rank-2 edges owned by the neighbors of f across its boundary, one per
    // boundary colex edge (the far side of each split pair).
    auto far_side_refs = [&](uint32_t f, std::optional<Color> neighbor_color, int want_solid) {
        std::vector<GaugeRef> refs;
        const ColexFace& cf = hg.colex.faces[f];
        for (std::size_t k = 0; k < cf.edges.size(); ++k) {
            const Rectangle& rect = hg.rects[cf.edges[k]];
            uint32_t own = hg.faces[f].sigma1[k];
            uint32_t far = rect.rank2[0] == own ? rect.rank2[1] : rect.rank2[0];
            const Rank2Edge& fe = hg.rank2[far];
            if (neighbor_color && hg.faces[fe.face].color != *neighbor_color) continue;
            if (want_solid >= 0 && int(fe.solid) != want_solid) continue;
            refs.push_back(edge_ref[far]);
        }
        return refs;
    };
    auto append = [](std::vector<GaugeRef>& dst, const std::vector<GaugeRef>& src) {
        dst.insert(dst.end(), src.begin(), src.end());
    };
    auto boundary_vertices = [&](uint32_t f) { return hg.colex.face_vertices_distinct[f]; };

    const std::size_t F = hg.faces.size();
    const std::array<Color, 3> colors = {Color::Red, Color::Green, Color::Blue};

    if (mode == Mode::Partial) {
        // W1^f: dashed half of the boundary cycle in round 1, solid half in
        // round 2.
        for (uint32_t f = 0; f < F; ++f) {
            Recipe r;
            r.target = {CheckId::Kind::W1, f};
            r.ops = sigma1_refs(f, 0);
            append(r.ops, sigma1_refs(f, 1));
            sched.recipes.push_back(std::move(r));
        }
        // W2^f: far-side dashed, then own dashed... (see below), then the
        // triangle ZZ pair between the two off-face qubits.
        for (uint32_t f = 0; f < F; ++f) {
            Recipe r;
            r.target = {CheckId::Kind::W2, f};
            r.ops = far_side_refs(f, std::nullopt, 0);
            append(r.ops, sigma1_refs(f, 1));
            append(r.ops, far_side_refs(f, std::nullopt, 1));
            Color cf = hg.faces[f].color;
            for (uint32_t v : boundary_vertices(f)) {
                for (uint32_t zi : zz_batch_indices(v, next_color(cf), prev_color(cf))) {
                    r.ops.push_back({2, zi});
                }
            }
            sched.recipes.push_back(std::move(r));
        }
        // Stack Z checks: the matching-color face is W1 itself; other faces
        // take W1 followed by the push of triangle ZZ operators.
        for (Color c : colors) {
            for (uint32_t f = 0; f < F; ++f) {
                Recipe r;
                r.target = {CheckId::Kind::Stack, f, c, 'Z'};
                r.ops = sigma1_refs(f, 0);
                append(r.ops, sigma1_refs(f, 1));
                Color cf = hg.faces[f].color;
                if (cf != c) {
                    for (uint32_t v : boundary_vertices(f)) {
                        for (uint32_t zi : zz_batch_indices(v, cf, c)) r.ops.push_back({2, zi});
                    }
                }
                sched.recipes.push_back(std::move(r));
            }
        }
    } else {
        // Round placements follow the measurement table: on stack c the X
        // checks of colors c and prev(c) are pure XX products, the Y checks
        // of colors c and next(c) pure YY products, the Z checks of the
        // other two colors use the boundary cycle plus 4-body operators, and
        // the remaining entries are syndrome XORs.
        for (Color c : colors) {
            for (uint32_t f = 0; f < F; ++f) {
                Color cf = hg.faces[f].color;
                // X check
                {
                    Recipe r;
                    r.target = {CheckId::Kind::Stack, f, c, 'X'};
                    if (cf == c) {
                        r.ops = sigma1_refs(f, 0);
                    } else if (cf == prev_color(c)) {
                        r.ops = far_side_refs(f, c, 0);
                    } else {
                        r.xors = {CheckId{CheckId::Kind::Stack, f, c, 'Z'},
                                  CheckId{CheckId::Kind::Stack, f, c, 'Y'}};
                    }
                    sched.recipes.push_back(std::move(r));
                }
                // Y check
                {
                    Recipe r;
                    r.target = {CheckId::Kind::Stack, f, c, 'Y'};
                    if (cf == c) {
                        r.ops = sigma1_refs(f, 1);
                    } else if (cf == next_color(c)) {
                        r.ops = far_side_refs(f, c, 1);
                    } else {
                        r.xors = {CheckId{CheckId::Kind::Stack, f, c, 'X'},
                                  CheckId{CheckId::Kind::Stack, f, c, 'Z'}};
                    }
                    sched.recipes.push_back(std::move(r));
                }
                // Z check
                {
                    Recipe r;
                    r.target = {CheckId::Kind::Stack, f, c, 'Z'};
                    if (cf == c) {
                        r.xors = {CheckId{CheckId::Kind::Stack, f, c, 'X'},
                                  CheckId{CheckId::Kind::Stack, f, c, 'Y'}};
                    } else {
                        r.ops = sigma1_refs(f, 0);
                        append(r.ops, sigma1_refs(f, 1));
                        const ColexFace& cfc = hg.colex.faces[f];
                        for (uint32_t e : cfc.edges) {
                            const Rectangle& rect = hg.rects[e];
                            Color other = rect.colors[0] == cf ? rect.colors[1] : rect.colors[0];
                            if (other == c) r.ops.push_back({2, e});
                        }
                    }
                    sched.recipes.push_back(std::move(r));
                }
            }
        }
        for (uint32_t f = 0; f < F; ++f) {
            Recipe r;
            r.target = {CheckId::Kind::W1, f};
            r.xors = {CheckId{CheckId::Kind::Stack, f, hg.faces[f].color, 'Z'}};
            sched.recipes.push_back(std::move(r));
        }
        // Hypercycle stabilizers decompose over the three stacks.
        for (uint32_t f = 0; f < F; ++f) {
            Color cf = hg.faces[f].color;
            Recipe r;
            r.target = {CheckId::Kind::W2, f};
            r.xors = {CheckId{CheckId::Kind::Stack, f, prev_color(cf), 'X'},
                      CheckId{CheckId::Kind::Stack, f, cf, 'Y'},
                      CheckId{CheckId::Kind::Stack, f, next_color(cf), 'Y'}};
            sched.recipes.push_back(std::move(r));
        }
    }
    return sched;
}

TsccCode build_code(int d) { return build_code(inflate(build_colex(d))); }

TsccCode build_code(const Hypergraph& hg) {
    TsccCode code;
    code.hg = hg;
    code.n = hg.n;
    const std::size_t F = hg.faces.size();
    const std::size_t V = hg.colex.num_vertices;

    // Every triangle must carry one qubit of each stack; this is where the
    // degenerate d=2 lattice fails.
    for (uint32_t v = 0; v < V; ++v) {
        std::array<int, 3> seen{0, 0, 0};
        for (uint32_t q : hg.triangle(v)) seen[uint8_t(hg.stack_of[q])]++;
        if (seen != std::array<int, 3>{1, 1, 1}) {
            throw CodeError(
                "build_code: rank-3 edge without exactly one vertex per stack color "
                "(the lattice does not support the three-stack mapping)");
        }
    }
    if (!hg.alternation_consistent) {
        throw CodeError("build_code: solid/dashed alternation is inconsistent on this lattice");
    }

    for (Color c : {Color::Red, Color::Green, Color::Blue}) {
        auto& sq = code.stack_qubits[uint8_t(c)];
        sq.resize(V);
        for (uint32_t v = 0; v < V; ++v) sq[v] = hg.stack_qubit(v, c);
    }

    // Gauge generators: one XX per dashed edge, one YY per solid edge, the
    // pairs Z_r Z_g and Z_g Z_b per triangle.
    code.rank2_gen.resize(hg.rank2.size());
    for (uint32_t e = 0; e < hg.rank2.size(); ++e) {
        const Rank2Edge& r2 = hg.rank2[e];
        PauliOperator op = two_body(code.n, r2.a, r2.b, r2.solid ? 'Y' : 'X');
        code.rank2_gen[e] = uint32_t(code.gauge_gens.size());
        if (r2.solid) {
            code.yy_gens.push_back(uint32_t(code.gauge_gens.size()));
        } else {
            code.xx_gens.push_back(uint32_t(code.gauge_gens.size()));
        }
        code.gauge_gens.push_back(std::move(op));
    }
    for (uint32_t v = 0; v < V; ++v) {
        uint32_t qr = code.stack_qubits[0][v], qg = code.stack_qubits[1][v], qb = code.stack_qubits[2][v];
        code.zz_gens.push_back(uint32_t(code.gauge_gens.size()));
        code.gauge_gens.push_back(two_body(code.n, qr, qg, 'Z'));
        code.zz_gens.push_back(uint32_t(code.gauge_gens.size()));
        code.gauge_gens.push_back(two_body(code.n, qg, qb, 'Z'));
    }

    // W1^f from the boundary cycle; also check the edge-operator product
    // collapses to Z on the face qubits.
    code.w1.resize(F, PauliOperator(code.n));
    for (uint32_t f = 0; f < F; ++f) {
        PauliOperator prod(code.n);
        for (uint32_t e : hg.faces[f].sigma1) {
            prod = product(prod, code.gauge_gens.ops[code.rank2_gen[e]]);
        }
        PauliOperator zform(code.n);
        for (uint32_t q : hg.faces[f].qubits) zform.mul_z(q);
        if (!(prod == zform)) throw CodeError("build_code: W1 cycle product is not Z on the face");
        code.w1[f] = std::move(zform);
    }

    // W2^f: per boundary triangle, X on the prev(face-color) stack qubit
    // and Y on the other two.
    code.w2.resize(F, PauliOperator(code.n));
    code.w2_xmask.assign(F, BinaryVector(code.n));
    code.w2_zmask.assign(F, BinaryVector(code.n));
    code.w1_mask.assign(F, BinaryVector(code.n));
    for (uint32_t f = 0; f < F; ++f) {
        Color cf = hg.faces[f].color;
        PauliOperator op(code.n);
        for (uint32_t v : hg.colex.face_vertices_distinct[f]) {
            for (uint32_t q : hg.triangle(v)) {
                if (hg.stack_of[q] == prev_color(cf)) {
                    op.mul_x(q);
                } else {
                    op.mul_y(q);
                }
            }
        }
        code.w2[f] = op;
        code.w2_xmask[f] = op.x;
        code.w2_zmask[f] = op.z;
        for (uint32_t q : hg.faces[f].qubits) code.w1_mask[f].set(q, true);
    }

    // Stack color-code stabilizers and the parent incidence.
    code.face_vertex = BinaryMatrix(F, V);
    for (uint32_t f = 0; f < F; ++f) {
        for (uint32_t v : hg.colex.face_vertices_distinct[f]) code.face_vertex.set(f, v, true);
    }
    for (Color c : {Color::Red, Color::Green, Color::Blue}) {
        auto& stack = code.cc_[uint8_t(c)];
        stack.resize(F);
        for (uint32_t f = 0; f < F; ++f) {
            PauliOperator bx(code.n), by(code.n), bz(code.n);
            for (uint32_t v : hg.colex.face_vertices_distinct[f]) {
                uint32_t q = code.stack_qubits[uint8_t(c)][v];
                bx.mul_x(q);
                by.mul_y(q);
                bz.mul_z(q);
            }
            stack[f] = {std::move(bx), std::move(by), std::move(bz)};
        }
    }

    code.u_square.reserve(hg.rects.size());
    for (const Rectangle& rect : hg.rects) {
        PauliOperator u(code.n);
        for (uint32_t q : rect.qubits) u.mul_z(q);
        code.u_square.push_back(std::move(u));
    }

    // GF(2) caches and parameter counts.
    {
        OperatorSet stabs;
        for (const auto& op : code.w1) stabs.push_back(op);
        for (const auto& op : code.w2) stabs.push_back(op);
        code.stab_matrix = stabs.symplectic_matrix();
    }
    code.gauge_matrix = code.gauge_gens.symplectic_matrix();
    code.gauge_span = gf2::RowSpace(code.gauge_matrix);
    code.rank_stab = gf2::rank(code.stab_matrix);
    code.rank_gauge = code.gauge_span.rank();
    code.s = int(code.rank_stab);
    code.r = int((code.rank_gauge - code.rank_stab) / 2);
    code.k = int(code.n) - code.r - code.s;

    // Bare logical operators: a symplectic Gram-Schmidt over the centralizer
    // of the gauge group, discarding the stabilizer radical.
    {
        BinaryMatrix swapped(code.gauge_matrix.rows(), 2 * code.n);
        for (std::size_t row = 0; row < code.gauge_matrix.rows(); ++row) {
            for (std::size_t i : code.gauge_matrix.row(row).ones()) {
                swapped.set(row, i < code.n ? i + code.n : i - code.n, true);
            }
        }
        std::vector<BinaryVector> cands = gf2::nullspace_basis(swapped);
        std::vector<std::pair<BinaryVector, BinaryVector>> pairs;
        std::size_t i = 0;
        while (i < cands.size()) {
            std::size_t j = i + 1;
            while (j < cands.size() && !symplectic_omega(cands[i], cands[j])) ++j;
            if (j == cands.size()) {
                ++i;  // radical element, spanned by stabilizers
                continue;
            }
            BinaryVector a = cands[i], b = cands[j];
            cands.erase(cands.begin() + j);
            cands.erase(cands.begin() + i);
            for (BinaryVector& c : cands) {
                if (symplectic_omega(c, b)) c ^= a;
                if (symplectic_omega(c, a)) c ^= b;
            }
            pairs.emplace_back(std::move(a), std::move(b));
            i = 0;
        }
        if (pairs.size() != 2) {
            throw CodeError("build_code: expected two logical qubits, found " + std::to_string(pairs.size()));
        }
        code.bare_logicals = {PauliOperator::from_symplectic(pairs[0].first),
                              PauliOperator::from_symplectic(pairs[0].second),
                              PauliOperator::from_symplectic(pairs[1].first),
                              PauliOperator::from_symplectic(pairs[1].second)};
    }

    // Per-qubit check incidences for peeling and syndrome updates.
    code.qubit_checks.resize(code.n);
    for (uint32_t v = 0; v < V; ++v) {
        std::array<uint32_t, 3> faces = {hg.face_of[3 * v], hg.face_of[3 * v + 1], hg.face_of[3 * v + 2]};
        for (uint32_t q : hg.triangle(v)) {
            QubitIncidence qi;
            qi.faces = faces;
            for (int t = 0; t < 3; ++t) {
                qi.w2_sees_x[t] = hg.stack_of[q] != prev_color(hg.faces[faces[t]].color);
            }
            code.qubit_checks[q] = qi;
        }
    }

    code.partial_schedule = build_schedule(code, Mode::Partial);
    code.maximal_schedule = build_schedule(code, Mode::Maximal);

    auto checks = run_verification(code);
    std::string failed;
    for (const auto& c : checks) {
        if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.name;
    }
    if (!failed.empty()) throw CodeError("build_code: invariant checks failed: " + failed);
    return code;
}

}  // namespace tscc
