#include "doctest.h"

#include <algorithm>
#include <bit>
#include <map>

#include "tscc/code.hpp"
#include "tscc/verify.hpp"

using namespace tscc;

TEST_CASE("parameter counts at d=4") {
    TsccCode code = build_code(4);
    CHECK(code.n == 48);
    CHECK(code.k == 2);
    CHECK(code.r == 32);
    CHECK(code.s == 14);
    CHECK(code.gauge_gens.size() == 80);  // 24 XX + 24 YY + 32 ZZ listed
    CHECK(code.xx_gens.size() == 24);
    CHECK(code.yy_gens.size() == 24);
    CHECK(code.zz_gens.size() == 32);
    CHECK(code.rank_gauge == 78);  // 2r + s
    CHECK(code.rank_stab == 14);   // 2|F| - 2
}

TEST_CASE("stabilizer generators carry exactly two dependencies") {
    TsccCode code = build_code(4);
    // left-nullspace of the stacked [W1; W2] generator matrix
    std::size_t dim = code.stab_matrix.rows() - gf2::rank(code.stab_matrix);
    CHECK(dim == 2);
    CHECK(gf2::nullspace_basis(code.stab_matrix.transpose()).size() == 2);
}

TEST_CASE("construction-time verification passes at d=4 and d=8") {
    for (int d : {4, 8}) {
        TsccCode code = build_code(d);
        for (const auto& check : run_verification(code)) {
            INFO(check.name << " " << check.detail);
            CHECK(check.pass);
        }
    }
}

TEST_CASE("the degenerate d=2 lattice cannot carry the three-stack code") {
    CHECK_THROWS_AS((void)build_code(2), CodeError);
}

TEST_CASE("minimum weight over the bare logical classes at d=4") {
    // Exhaustive oracle: enumerate the whole centralizer of the gauge group
    // (dimension 2|F|+2 = 18) and take the lightest element outside the
    // gauge span.
    TsccCode code = build_code(4);
    BinaryMatrix swapped(code.gauge_matrix.rows(), 2 * code.n);
    for (std::size_t r = 0; r < code.gauge_matrix.rows(); ++r) {
        for (std::size_t i : code.gauge_matrix.row(r).ones()) {
            swapped.set(r, i < code.n ? i + code.n : i - code.n, true);
        }
    }
    auto basis = gf2::nullspace_basis(swapped);
    REQUIRE(basis.size() == 18);
    std::size_t best = code.n;
    BinaryVector cur(2 * code.n);
    for (uint64_t it = 1; it < (uint64_t(1) << basis.size()); ++it) {
        cur ^= basis[std::countr_zero(it)];
        if (!code.gauge_span.contains(cur)) {
            best = std::min(best, PauliOperator::from_symplectic(cur).weight());
        }
    }
    CHECK(best == 14);
    // the constructed representatives sit in those classes, so none is lighter
    std::size_t rep_min = code.n;
    for (const auto& l : code.bare_logicals) rep_min = std::min(rep_min, l.weight());
    CHECK(rep_min == 14);
}

TEST_CASE("hypercycle operators agree with the edge-operator product route") {
    // Independent route: sigma2 = all far-side split edges, the face's own
    // dashed edges, and the rank-3 edge operators Z_u Z_v Z_w of the
    // boundary triangles.
    TsccCode code = build_code(4);
    const Hypergraph& hg = code.hg;
    for (uint32_t f = 0; f < code.num_faces(); ++f) {
        PauliOperator prod(code.n);
        const ColexFace& cf = hg.colex.faces[f];
        for (std::size_t k = 0; k < cf.edges.size(); ++k) {
            const Rectangle& rect = hg.rects[cf.edges[k]];
            uint32_t own = hg.faces[f].sigma1[k];
            uint32_t far = rect.rank2[0] == own ? rect.rank2[1] : rect.rank2[0];
            prod = product(prod, code.gauge_gens.ops[code.rank2_gen[far]]);
            if (!hg.rank2[own].solid) {
                prod = product(prod, code.gauge_gens.ops[code.rank2_gen[own]]);
            }
        }
        for (uint32_t v : hg.colex.face_vertices_distinct[f]) {
            PauliOperator ke(code.n);
            for (uint32_t q : hg.triangle(v)) ke.mul_z(q);
            prod = product(prod, ke);
        }
        CHECK(prod == code.w2[f]);
    }
}

TEST_CASE("Z stabilizer decompositions push W1 across stacks") {
    TsccCode code = build_code(4);
    const Hypergraph& hg = code.hg;
    uint32_t red_face = 0, green_face = 0;
    for (uint32_t f = 0; f < code.num_faces(); ++f) {
        if (hg.faces[f].color == Color::Red) red_face = f;
        if (hg.faces[f].color == Color::Green) green_face = f;
    }

    // matching color: the recipe product is W1 itself
    const Recipe& rr = z_stab_decomposition(code, Color::Red, red_face);
    CHECK(recipe_product(code, code.partial_schedule, rr) == code.w1[red_face]);
    CHECK(code.cc_stab(Color::Red, red_face, 'Z') == code.w1[red_face]);

    // pushed: W1 on a green face times the triangle ZZ pairs lands on the
    // red stack restriction of the same face
    const Recipe& rg = z_stab_decomposition(code, Color::Red, green_face);
    PauliOperator got = recipe_product(code, code.partial_schedule, rg);
    PauliOperator expect(code.n);
    for (uint32_t v : hg.colex.face_vertices_distinct[green_face]) {
        expect.mul_z(code.stack_qubits[uint8_t(Color::Red)][v]);
    }
    CHECK(got == expect);
    CHECK(got == code.cc_stab(Color::Red, green_face, 'Z'));

    // the explicit push operator: product of per-triangle ZZ between the two
    // stacks, equal to the product of the adjacent 4-body rectangle operators
    PauliOperator push(code.n);
    for (uint32_t v : hg.colex.face_vertices_distinct[green_face]) {
        push.mul_z(code.stack_qubits[uint8_t(Color::Green)][v]);
        push.mul_z(code.stack_qubits[uint8_t(Color::Red)][v]);
    }
    CHECK(product(code.w1[green_face], push) == got);
    PauliOperator v_route(code.n);
    for (uint32_t e : hg.colex.faces[green_face].edges) {
        const Rectangle& rect = hg.rects[e];
        Color other = rect.colors[0] == Color::Green ? rect.colors[1] : rect.colors[0];
        if (other == Color::Red) v_route = product(v_route, code.u_square[e]);
    }
    CHECK(v_route == push);
}

TEST_CASE("X stabilizer decompositions follow the measurement table") {
    TsccCode code = build_code(4);
    uint32_t red_face = 0, green_face = 0;
    for (uint32_t f = 0; f < code.num_faces(); ++f) {
        if (code.hg.faces[f].color == Color::Red) red_face = f;
        if (code.hg.faces[f].color == Color::Green) green_face = f;
    }

    const Recipe& rr = x_stab_decomposition(code, Color::Red, red_face);
    REQUIRE(rr.direct());
    for (const GaugeRef& ref : rr.ops) CHECK(ref.round == 0);  // XX round only
    CHECK(recipe_product(code, code.maximal_schedule, rr) == code.cc_stab(Color::Red, red_face, 'X'));

    const Recipe& rg = x_stab_decomposition(code, Color::Red, green_face);
    REQUIRE_FALSE(rg.direct());
    REQUIRE(rg.xors.size() == 2);
    CHECK(rg.xors[0].pauli == 'Z');
    CHECK(rg.xors[1].pauli == 'Y');
    CHECK(recipe_product(code, code.maximal_schedule, rg) == code.cc_stab(Color::Red, green_face, 'X'));
}

TEST_CASE("every recipe in both schedules is exact and properly sequenced") {
    TsccCode code = build_code(4);
    for (const MeasurementSchedule* sched : {&code.partial_schedule, &code.maximal_schedule}) {
        for (const Recipe& recipe : sched->recipes) {
            INFO(recipe.target.to_string());
            CHECK(recipe_product(code, *sched, recipe) == code.check_operator(recipe.target));
            if (recipe.direct()) CHECK(validate_sequencing(recipe_operators(*sched, recipe)));
        }
    }
}

TEST_CASE("recipe lengths stay linear in the face size") {
    TsccCode code = build_code(8);
    for (const MeasurementSchedule* sched : {&code.partial_schedule, &code.maximal_schedule}) {
        for (const Recipe& recipe : sched->recipes) {
            if (!recipe.direct()) continue;
            std::size_t fsize = code.hg.faces[recipe.target.face].qubits.size();
            CHECK(recipe.ops.size() <= 4 * fsize);
        }
    }
}

TEST_CASE("sequencing validator accepts single operators and catches bad orders") {
    TsccCode code = build_code(4);
    CHECK(validate_sequencing({code.gauge_gens.ops[0]}));

    // octagon boundary recipe in schedule order passes
    uint32_t oct = 0;
    while (code.hg.faces[oct].is_square) ++oct;
    const Recipe& w1r = code.find_recipe(Mode::Partial, CheckId{CheckId::Kind::W1, oct});
    auto ops = recipe_operators(code.partial_schedule, w1r);
    REQUIRE(validate_sequencing(ops));

    // some permutation violates the condition (exhaustive over adjacent swaps)
    bool found_violation = false;
    for (std::size_t i = 0; i + 1 < ops.size() && !found_violation; ++i) {
        auto perm = ops;
        std::swap(perm[i], perm[i + 1]);
        found_violation = !validate_sequencing(perm);
    }
    CHECK(found_violation);
}

TEST_CASE("measurement rounds have the advertised batch sizes") {
    TsccCode code = build_code(4);
    std::size_t F = code.num_faces();
    const auto& pr = code.partial_schedule.rounds;
    REQUIRE(pr.size() == 3);
    CHECK(pr[0].ops.size() == 3 * F);  // 24 XX
    CHECK(pr[1].ops.size() == 3 * F);  // 24 YY
    CHECK(pr[2].ops.size() == 4 * F);  // 32 ZZ
    const auto& mr = code.maximal_schedule.rounds;
    REQUIRE(mr.size() == 3);
    CHECK(mr[0].ops.size() == 3 * F);
    CHECK(mr[1].ops.size() == 3 * F);
    CHECK(mr[2].ops.size() == 3 * F);  // 24 four-body operators

    for (const auto& op : mr[2].ops) CHECK(op.weight() == 4);
}

TEST_CASE("maximal mode fixes 6|F|-12 independent checks") {
    TsccCode code = build_code(4);
    OperatorSet fixed;
    for (Color c : {Color::Red, Color::Green, Color::Blue}) {
        for (uint32_t f = 0; f < code.num_faces(); ++f) {
            fixed.push_back(code.cc_stab(c, f, 'X'));
            fixed.push_back(code.cc_stab(c, f, 'Z'));
        }
    }
    CHECK(gf2::rank(fixed.symplectic_matrix()) == 36);
}

TEST_CASE("rank of the d=4 stabilizer matrix restricted to all columns") {
    TsccCode code = build_code(4);
    std::vector<std::size_t> all_cols(2 * code.n);
    for (std::size_t i = 0; i < all_cols.size(); ++i) all_cols[i] = i;
    BinaryMatrix sub = gf2::column_submatrix(code.stab_matrix, all_cols);
    CHECK(sub == code.stab_matrix);
    CHECK(gf2::rank(sub) == 14);
}
