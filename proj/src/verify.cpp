#include "tscc/verify.hpp"

#include <sstream>

#include "tscc/code.hpp"

namespace tscc {

namespace {

struct Reporter {
    std::vector<VerifyCheck> checks;
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
};

std::string counts(std::size_t got, std::size_t want) {
    std::ostringstream os;
    os << "got " << got << ", expected " << want;
    return os.str();
}

PauliOperator product_over(const std::vector<PauliOperator>& ops, const std::vector<uint32_t>& idx,
                           std::size_t n) {
    PauliOperator acc(n);
    for (uint32_t i : idx) acc = product(acc, ops[i]);
    return acc;
}

}  // namespace

std::vector<VerifyCheck> run_verification(const TsccCode& code) {
    Reporter rep;
    const Hypergraph& hg = code.hg;
    const std::size_t F = code.num_faces();
    const int d = code.distance();
    const std::array<Color, 3> colors = {Color::Red, Color::Green, Color::Blue};

    rep.add("qubit-count", code.n == std::size_t(3) * d * d && code.n == 6 * F,
            counts(code.n, std::size_t(3) * d * d));
    rep.add("stabilizer-rank", code.rank_stab == 2 * F - 2, counts(code.rank_stab, 2 * F - 2));
    rep.add("gauge-rank", code.rank_gauge == 10 * F - 2, counts(code.rank_gauge, 10 * F - 2));
    rep.add("parameter-counts",
            code.k == 2 && code.r == int(4 * F) && code.s == int(2 * F - 2) &&
                code.n == std::size_t(code.k + code.r + code.s),
            "k=" + std::to_string(code.k) + " r=" + std::to_string(code.r) + " s=" + std::to_string(code.s));

    // Stabilizers lie in C(G) and in the gauge group itself.
    {
        bool ok = true;
        for (const auto& g : code.gauge_gens.ops) {
            for (const auto& w : code.w1) ok = ok && commutes(g, w);
            for (const auto& w : code.w2) ok = ok && commutes(g, w);
        }
        rep.add("stabilizers-centralize-gauge", ok);
        bool in_span = true;
        for (const auto& w : code.w1) in_span = in_span && in_group(w, code.gauge_span);
        for (const auto& w : code.w2) in_span = in_span && in_group(w, code.gauge_span);
        rep.add("stabilizers-in-gauge-group", in_span);
    }

    // The two dependency relations among W1 and W2 on the torus.
    {
        std::vector<uint32_t> fr, fg, fb;
        for (uint32_t f = 0; f < F; ++f) {
            switch (hg.faces[f].color) {
                case Color::Red: fr.push_back(f); break;
                case Color::Green: fg.push_back(f); break;
                case Color::Blue: fb.push_back(f); break;
            }
        }
        PauliOperator lhs1 = product(product_over(code.w2, fr, code.n), product_over(code.w2, fg, code.n));
        PauliOperator rhs1 = product(product_over(code.w1, fb, code.n), product_over(code.w1, fr, code.n));
        rep.add("dependency-w2rg-w1br", lhs1 == rhs1);
        PauliOperator lhs2 = product(product_over(code.w2, fr, code.n), product_over(code.w2, fb, code.n));
        PauliOperator rhs2 = product(product_over(code.w1, fg, code.n), product_over(code.w1, fb, code.n));
        rep.add("dependency-w2rb-w1gb", lhs2 == rhs2);

        // Color-code dependencies on every stack, for X and Z type checks.
        for (Color c : colors) {
            for (char p : {'X', 'Z'}) {
                PauliOperator pr(code.n), pg(code.n), pb(code.n);
                for (uint32_t f : fr) pr = product(pr, code.cc_stab(c, f, p));
                for (uint32_t f : fg) pg = product(pg, code.cc_stab(c, f, p));
                for (uint32_t f : fb) pb = product(pb, code.cc_stab(c, f, p));
                std::string name = std::string("stack-dependency-") + color_name(c) + "-" + p;
                rep.add(name, pr == pg && pg == pb);
            }
        }
    }

    // Extended stabilizer group structure.
    {
        bool abelian = true;
        std::vector<const PauliOperator*> all;
        for (Color c : colors) {
            for (uint32_t f = 0; f < F; ++f) {
                for (char p : {'X', 'Y', 'Z'}) all.push_back(&code.cc_stab(c, f, p));
            }
        }
        for (std::size_t i = 0; i < all.size() && abelian; ++i) {
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                if (!commutes(*all[i], *all[j])) {
                    abelian = false;
                    break;
                }
            }
        }
        rep.add("cc-stabs-abelian", abelian);

        bool in_span = true;
        for (const PauliOperator* op : all) in_span = in_span && in_group(*op, code.gauge_span);
        rep.add("cc-stabs-in-gauge-group", in_span);

        bool central = true;
        for (const PauliOperator* op : all) {
            for (const auto& w : code.w1) central = central && commutes(*op, w);
            for (const auto& w : code.w2) central = central && commutes(*op, w);
        }
        rep.add("cc-stabs-centralize-stabilizer", central);

        // The 4-body rectangle operators are mutually commuting gauge
        // elements and centralize the subsystem stabilizer. (They do not
        // commute with the stack checks of the third-color faces touching
        // the rectangle; the schedule never relies on that.)
        bool usq = true;
        for (std::size_t i = 0; i < code.u_square.size() && usq; ++i) {
            for (std::size_t j = i + 1; j < code.u_square.size(); ++j) {
                usq = usq && commutes(code.u_square[i], code.u_square[j]);
            }
        }
        for (const auto& u : code.u_square) {
            usq = usq && in_group(u, code.gauge_span);
            for (const auto& w : code.w1) usq = usq && commutes(u, w);
            for (const auto& w : code.w2) usq = usq && commutes(u, w);
        }
        rep.add("u-square-structure", usq);
    }

    // Hypercycle decomposition into one stabilizer per stack.
    {
        bool ok = true;
        for (uint32_t f = 0; f < F; ++f) {
            Color cf = hg.faces[f].color;
            PauliOperator rhs = product(product(code.cc_stab(prev_color(cf), f, 'X'), code.cc_stab(cf, f, 'Y')),
                                        code.cc_stab(next_color(cf), f, 'Y'));
            ok = ok && rhs == code.w2[f];
        }
        rep.add("hypercycle-decomposition", ok);
    }

    // Bare logicals: symplectic pairing, outside the gauge group, inside its
    // centralizer.
    {
        const auto& L = code.bare_logicals;
        bool pairing = !commutes(L[0], L[1]) && !commutes(L[2], L[3]) && commutes(L[0], L[2]) &&
                       commutes(L[0], L[3]) && commutes(L[1], L[2]) && commutes(L[1], L[3]);
        rep.add("logical-pairing", pairing);
        bool outside = true, central = true;
        for (const auto& l : L) {
            outside = outside && !in_group(l, code.gauge_span);
            for (const auto& g : code.gauge_gens.ops) central = central && commutes(l, g);
        }
        rep.add("logical-not-gauge", outside);
        rep.add("logical-centralizes-gauge", central);
    }

    // Measurement schedules.
    for (Mode mode : {Mode::Partial, Mode::Maximal}) {
        const MeasurementSchedule& sched = mode == Mode::Partial ? code.partial_schedule : code.maximal_schedule;
        bool products_ok = true, sequencing_ok = true, rounds_ok = true;
        std::string first_bad;
        for (const Recipe& recipe : sched.recipes) {
            PauliOperator prod = recipe_product(code, sched, recipe);
            if (!(prod == code.check_operator(recipe.target))) {
                products_ok = false;
                if (first_bad.empty()) first_bad = recipe.target.to_string();
            }
            if (recipe.direct()) {
                auto ops = recipe_operators(sched, recipe);
                if (!validate_sequencing(ops)) {
                    sequencing_ok = false;
                    if (first_bad.empty()) first_bad = recipe.target.to_string();
                }
                for (std::size_t i = 1; i < recipe.ops.size(); ++i) {
                    if (recipe.ops[i].round < recipe.ops[i - 1].round) rounds_ok = false;
                }
            }
        }
        std::string tag = mode == Mode::Partial ? "partial" : "maximal";
        rep.add("schedule-" + tag + "-products", products_ok, first_bad);
        rep.add("schedule-" + tag + "-sequencing", sequencing_ok, first_bad);
        rep.add("schedule-" + tag + "-round-order", rounds_ok);

        bool batch_ok = true;
        for (const RoundBatch& round : sched.rounds) {
            for (std::size_t i = 0; i < round.ops.size() && batch_ok; ++i) {
                for (std::size_t j = i + 1; j < round.ops.size(); ++j) {
                    if (!commutes(round.ops[i], round.ops[j])) {
                        batch_ok = false;
                        break;
                    }
                }
            }
        }
        rep.add("schedule-" + tag + "-batches-commute", batch_ok);
    }

    rep.add("measurement-counts-partial",
            code.partial_schedule.rounds.size() == 3 && code.partial_schedule.rounds[0].ops.size() == 3 * F &&
                code.partial_schedule.rounds[1].ops.size() == 3 * F &&
                code.partial_schedule.rounds[2].ops.size() == 4 * F);
    rep.add("measurement-counts-maximal",
            code.maximal_schedule.rounds.size() == 3 && code.maximal_schedule.rounds[0].ops.size() == 3 * F &&
                code.maximal_schedule.rounds[1].ops.size() == 3 * F &&
                code.maximal_schedule.rounds[2].ops.size() == 3 * F);

    // Independent checks fixed by each decoder.
    {
        OperatorSet fixed;
        for (Color c : colors) {
            for (uint32_t f = 0; f < F; ++f) {
                fixed.push_back(code.cc_stab(c, f, 'X'));
                fixed.push_back(code.cc_stab(c, f, 'Z'));
            }
        }
        std::size_t rank = gf2::rank(fixed.symplectic_matrix());
        rep.add("maximal-fixed-rank", rank == 6 * F - 12, counts(rank, 6 * F - 12));
    }
    {
        OperatorSet fixed;
        for (Color c : colors) {
            for (uint32_t f = 0; f < F; ++f) fixed.push_back(code.cc_stab(c, f, 'Z'));
        }
        for (const auto& w : code.w2) fixed.push_back(w);
        std::size_t rank = gf2::rank(fixed.symplectic_matrix());
        rep.add("partial-fixed-rank", rank == 4 * F - 8, counts(rank, 4 * F - 8));
    }

    return rep.checks;
}

}  // namespace tscc
