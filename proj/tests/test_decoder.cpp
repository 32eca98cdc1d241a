#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "tscc/correctability.hpp"
#include "tscc/decoder.hpp"

using namespace tscc;

namespace {

PauliOperator random_pauli_on(std::size_t n, const std::vector<uint32_t>& support, RngStream& rng) {
    PauliOperator p(n);
    for (uint32_t q : support) {
        uint64_t bits = rng.next_u64();
        if (bits & 1) p.x.set(q, true);
        if (bits & 2) p.z.set(q, true);
    }
    return p;
}

ErasurePattern make_pattern(std::size_t n, std::vector<uint32_t> erased, PauliOperator induced) {
    ErasurePattern pat;
    pat.n = n;
    pat.erased = std::move(erased);
    pat.induced = std::move(induced);
    return pat;
}

}  // namespace

TEST_CASE("extracted syndromes equal direct commutation with every check") {
    TsccCode code = build_code(4);
    RngStream rng(21);
    for (int t = 0; t < 200; ++t) {
        PauliOperator err(code.n);
        for (std::size_t q = 0; q < code.n; ++q) {
            uint64_t bits = rng.next_u64();
            if (bits & 1) err.x.set(q, true);
            if (bits & 2) err.z.set(q, true);
        }
        for (Mode mode : {Mode::Partial, Mode::Maximal}) {
            SyndromeSet syn = extract_syndrome(code, mode, err);
            for (uint32_t f = 0; f < code.num_faces(); ++f) {
                CHECK(syn.w1.get(f) == !commutes(code.w1[f], err));
                CHECK(syn.w2.get(f) == !commutes(code.w2[f], err));
                for (int c = 0; c < 3; ++c) {
                    CHECK(syn.cc_x[c].get(f) == !commutes(code.cc_stab(Color(c), f, 'Z'), err));
                    if (mode == Mode::Maximal) {
                        CHECK(syn.cc_z[c].get(f) == !commutes(code.cc_stab(Color(c), f, 'X'), err));
                    }
                }
            }
        }
    }
}

TEST_CASE("order-maximal hypercycle bits: stack-combination route vs direct commutation") {
    TsccCode code = build_code(4);
    RngStream rng(23);
    for (int t = 0; t < 1000; ++t) {
        PauliOperator err(code.n);
        for (std::size_t q = 0; q < code.n; ++q) {
            uint64_t bits = rng.next_u64();
            if (bits & 1) err.x.set(q, true);
            if (bits & 2) err.z.set(q, true);
        }
        SyndromeSet syn = extract_syndrome(code, Mode::Maximal, err);
        for (uint32_t f = 0; f < code.num_faces(); ++f) {
            CHECK(syn.w2.get(f) == !commutes(code.w2[f], err));
        }
    }
}

TEST_CASE("identity error gives all-zero syndromes") {
    TsccCode code = build_code(4);
    SyndromeSet syn = extract_syndrome(code, Mode::Maximal, PauliOperator(code.n));
    CHECK_FALSE(syn.w1.any());
    CHECK_FALSE(syn.w2.any());
    for (int c = 0; c < 3; ++c) {
        CHECK_FALSE(syn.cc_x[c].any());
        CHECK_FALSE(syn.cc_z[c].any());
    }
}

TEST_CASE("a single X error lights its own face and the vertex faces of its stack") {
    TsccCode code = build_code(4);
    uint32_t q = 5;
    Color c = code.hg.stack_of[q];
    SyndromeSet syn = extract_syndrome(code, Mode::Partial, PauliOperator::single(code.n, q, 'X'));
    CHECK(syn.w1.ones() == std::vector<std::size_t>{code.hg.face_of[q]});
    auto lit = syn.cc_x[uint8_t(c)].ones();
    std::vector<std::size_t> expect(code.qubit_checks[q].faces.begin(), code.qubit_checks[q].faces.end());
    std::sort(expect.begin(), expect.end());
    CHECK(lit == expect);
    for (int other = 0; other < 3; ++other) {
        if (other != int(uint8_t(c))) CHECK_FALSE(syn.cc_x[other].any());
    }
}

TEST_CASE("peeling corrects every single-qubit erasure") {
    TsccCode code = build_code(4);
    for (uint32_t q = 0; q < code.n; ++q) {
        for (char p : {'I', 'X', 'Y', 'Z'}) {
            PauliOperator err = PauliOperator::single(code.n, q, p);
            SyndromeSet syn = extract_syndrome(code, Mode::Partial, err);
            std::vector<uint32_t> erased = {q};
            PeelResult res = peel(code, erased, syn);
            CHECK(res.remaining.empty());
            CHECK(res.estimate == err);
            CHECK_FALSE(syn.w1.any());
            CHECK_FALSE(syn.w2.any());
        }
    }
}

TEST_CASE("peeling is a no-op on an empty pattern") {
    TsccCode code = build_code(4);
    SyndromeSet syn = extract_syndrome(code, Mode::Partial, PauliOperator(code.n));
    PeelResult res = peel(code, {}, syn);
    CHECK(res.remaining.empty());
    CHECK(res.estimate.is_identity());
}

TEST_CASE("two erased qubits on one triangle share their hypercycle checks and stay") {
    TsccCode code = build_code(4);
    uint32_t a = 3 * 7 + 0, b = 3 * 7 + 1;  // same triangle
    PauliOperator err = product(PauliOperator::single(code.n, a, 'Y'), PauliOperator::single(code.n, b, 'Z'));
    SyndromeSet syn = extract_syndrome(code, Mode::Partial, err);
    std::vector<uint32_t> erased = {a, b};
    PeelResult res = peel(code, erased, syn);
    CHECK(res.remaining == std::vector<uint32_t>{a, b});
    CHECK(res.estimate.is_identity());
}

TEST_CASE("clustering") {
    TsccCode c8 = build_code(8);
    CHECK(cluster(c8, {}).empty());

    // opposite corners of the torus share no stabilizer
    uint32_t far_vertex = uint32_t((2 * c8.hg.colex.m + 2) * 4);
    auto two = cluster(c8, std::vector<uint32_t>{0, 3 * far_vertex});
    CHECK(two.size() == 2);

    std::vector<uint32_t> all(c8.n);
    for (uint32_t q = 0; q < c8.n; ++q) all[q] = q;
    CHECK(cluster(c8, all).size() == 1);
}

TEST_CASE("generic single-type erasure decoding") {
    TsccCode code = build_code(4);
    OperatorSet zchecks;
    for (uint32_t f = 0; f < code.num_faces(); ++f) zchecks.push_back(code.cc_stab(Color::Red, f, 'Z'));

    // empty erasure, zero syndrome
    CHECK(cc_erasure_decode(zchecks, {}, BinaryVector(zchecks.size())).is_identity());

    // one erased qubit with a lit adjacent check resolves to X on it
    uint32_t q = code.stack_qubits[0][3];
    BinaryVector syn = syndrome(zchecks, PauliOperator::single(code.n, q, 'X'));
    REQUIRE(syn.any());
    PauliOperator est = cc_erasure_decode(zchecks, std::vector<uint32_t>{q}, syn);
    CHECK(est == PauliOperator::single(code.n, q, 'X'));

    // estimates always reproduce the syndrome and stay on the erasure
    RngStream rng(31);
    for (int t = 0; t < 1000; ++t) {
        ErasurePattern pat = sample_erasure(code.n, 0.25, rng);
        std::vector<uint32_t> red;
        for (uint32_t e : pat.erased) {
            if (code.hg.stack_of[e] == Color::Red) red.push_back(e);
        }
        PauliOperator xerr(code.n);
        for (uint32_t e : red) xerr.x.set(e, pat.induced.x.get(e));
        BinaryVector bits = syndrome(zchecks, xerr);
        PauliOperator guess = cc_erasure_decode(zchecks, red, bits);
        CHECK(syndrome(zchecks, guess) == bits);
        for (std::size_t s : guess.support()) {
            CHECK(std::find(red.begin(), red.end(), uint32_t(s)) != red.end());
        }
    }

    OperatorSet mixed;
    mixed.push_back(code.w2[0]);
    CHECK_THROWS_AS((void)cc_erasure_decode(mixed, {}, BinaryVector(1)), std::invalid_argument);
}

TEST_CASE("bit flip stage ignores pure phase errors") {
    TsccCode code = build_code(4);
    RngStream rng(41);
    for (int t = 0; t < 100; ++t) {
        ErasurePattern pat = sample_erasure(code.n, 0.3, rng);
        PauliOperator zerr(code.n);
        zerr.z = pat.induced.z;
        SyndromeSet syn = extract_syndrome(code, Mode::Partial, zerr);
        CHECK(correct_x(code, pat.erased, syn).is_identity());
    }
}

TEST_CASE("bit flip residual is an X-type gauge element or a flagged logical") {
    TsccCode code = build_code(4);
    RngStream rng(43);
    for (int t = 0; t < 400; ++t) {
        ErasurePattern pat = sample_erasure(code.n, 0.3, rng);
        PauliOperator xerr(code.n);
        xerr.x = pat.induced.x;
        SyndromeSet syn = extract_syndrome(code, Mode::Partial, xerr);
        PauliOperator est = correct_x(code, pat.erased, syn);
        PauliOperator residual = product(xerr, est);
        CHECK_FALSE(residual.z.any());  // no Z component introduced anywhere
        bool gauge = in_group(residual, code.gauge_span);
        bool flagged = false;
        for (const auto& l : code.bare_logicals) flagged = flagged || !commutes(residual, l);
        CHECK((gauge || flagged));
        // the updated hypercycle syndrome is explained by the phase part alone
        SyndromeSet fresh = extract_syndrome(code, Mode::Partial, residual);
        CHECK(fresh.w2 == syn.w2);
    }
}

TEST_CASE("phase stage without gauge fixing") {
    TsccCode code = build_code(4);

    // zero syndrome: identity estimate
    SyndromeSet clean = extract_syndrome(code, Mode::Partial, PauliOperator(code.n));
    std::vector<uint32_t> some = {0, 1, 2, 9};
    CHECK(correct_z_plain(code, some, clean).is_identity());

    // every single-qubit Z is corrected up to triangle gauge
    for (uint32_t q = 0; q < code.n; ++q) {
        PauliOperator err = PauliOperator::single(code.n, q, 'Z');
        SyndromeSet syn = extract_syndrome(code, Mode::Partial, err);
        std::vector<uint32_t> erased = {q};
        PauliOperator est = correct_z_plain(code, erased, syn);
        CHECK(est == err);  // the only erased qubit of the triangle is q itself
    }

    // lifted estimates commute with the boundary stabilizers and reproduce
    // the projected syndrome
    RngStream rng(47);
    for (int t = 0; t < 200; ++t) {
        ErasurePattern pat = sample_erasure(code.n, 0.3, rng);
        PauliOperator zerr(code.n);
        zerr.z = pat.induced.z;
        SyndromeSet syn = extract_syndrome(code, Mode::Partial, zerr);
        BinaryVector before = syn.w2;
        PauliOperator est = correct_z_plain(code, pat.erased, syn);
        for (const auto& w : code.w1) CHECK(commutes(est, w));
        SyndromeSet of_est = extract_syndrome(code, Mode::Partial, est);
        CHECK(of_est.w2 == before);
        CHECK_FALSE(syn.w2.any());
    }
}

TEST_CASE("phase stage with gauge fixing") {
    TsccCode code = build_code(4);
    RngStream rng(53);
    for (int t = 0; t < 200; ++t) {
        ErasurePattern pat = sample_erasure(code.n, 0.3, rng);

        // pure X error: no Z estimate
        PauliOperator xerr(code.n);
        xerr.x = pat.induced.x;
        SyndromeSet sx = extract_syndrome(code, Mode::Maximal, xerr);
        CHECK(correct_z_gauge(code, pat.erased, sx).is_identity());

        // Z errors: residual clears the X-type stack checks, and clearing
        // the stacks clears the hypercycle syndrome
        PauliOperator zerr(code.n);
        zerr.z = pat.induced.z;
        SyndromeSet sz = extract_syndrome(code, Mode::Maximal, zerr);
        PauliOperator est = correct_z_gauge(code, pat.erased, sz);
        PauliOperator residual = product(zerr, est);
        SyndromeSet fresh = extract_syndrome(code, Mode::Maximal, residual);
        for (int c = 0; c < 3; ++c) CHECK_FALSE(fresh.cc_z[c].any());
        CHECK_FALSE(fresh.w2.any());
        SyndromeSet direct = extract_syndrome(code, Mode::Partial, residual);
        CHECK_FALSE(direct.w2.any());
    }
}

TEST_CASE("decode handles the empty pattern") {
    TsccCode code = build_code(4);
    DecodeOutcome out = decode(code, Mode::Maximal, make_pattern(code.n, {}, PauliOperator(code.n)));
    CHECK_FALSE(out.failed);
    CHECK(out.estimate.is_identity());
}

TEST_CASE("decode corrects every single-qubit erasure in both modes") {
    TsccCode code = build_code(4);
    for (Mode mode : {Mode::Partial, Mode::Maximal}) {
        for (uint32_t q = 0; q < code.n; ++q) {
            for (char p : {'I', 'X', 'Y', 'Z'}) {
                auto pat = make_pattern(code.n, {q}, PauliOperator::single(code.n, q, p));
                CHECK_FALSE(decode(code, mode, pat).failed);
            }
        }
    }
}

TEST_CASE("decode closure, degeneracy and support properties") {
    TsccCode code = build_code(4);
    RngStream rng(57);
    for (int t = 0; t < 400; ++t) {
        ErasurePattern pat = sample_erasure(code.n, 0.35, rng);
        for (Mode mode : {Mode::Partial, Mode::Maximal}) {
            DecodeOutcome out = decode(code, mode, pat);
            PauliOperator residual = product(pat.induced, out.estimate);
            // syndrome closure under the active mode's checks
            SyndromeSet syn = extract_syndrome(code, mode, residual);
            CHECK_FALSE(syn.w1.any());
            CHECK_FALSE(syn.w2.any());
            for (int c = 0; c < 3; ++c) {
                CHECK_FALSE(syn.cc_x[c].any());
                if (mode == Mode::Maximal) CHECK_FALSE(syn.cc_z[c].any());
            }
            // estimates stay on the erasure
            std::vector<char> erased(code.n, 0);
            for (uint32_t q : pat.erased) erased[q] = 1;
            for (std::size_t q : out.estimate.support()) CHECK(erased[q] == 1);
            // gauge residuals are never flagged as failures
            if (in_group(residual, code.gauge_span)) CHECK_FALSE(out.failed);
            if (out.failed) CHECK_FALSE(in_group(residual, code.gauge_span));
        }
    }
}

TEST_CASE("cluster order and stage order do not change the outcome") {
    TsccCode code = build_code(8);
    RngStream rng(61);
    for (int t = 0; t < 150; ++t) {
        ErasurePattern pat = sample_erasure(code.n, 0.2, rng);
        for (Mode mode : {Mode::Partial, Mode::Maximal}) {
            DecodeOutcome a = decode(code, mode, pat);
            DecodeOptions rev;
            rev.reverse_clusters = true;
            DecodeOutcome b = decode(code, mode, pat, rev);
            CHECK(a.failed == b.failed);
            CHECK(a.estimate == b.estimate);
        }
        DecodeOptions swap;
        swap.z_stage_first = true;
        DecodeOutcome c = decode(code, Mode::Maximal, pat);
        DecodeOutcome d = decode(code, Mode::Maximal, pat, swap);
        CHECK(c.failed == d.failed);
        CHECK(c.estimate == d.estimate);
    }
}

TEST_CASE("order-maximal decoding beats partial gauge fixing at eps = 0.3") {
    TsccCode code = build_code(4);
    const int trials = 2000;
    int fail_partial = 0, fail_maximal = 0;
    for (int t = 0; t < trials; ++t) {
        RngStream rng(71, uint64_t(t));
        ErasurePattern pat = sample_erasure(code.n, 0.30, rng);
        fail_partial += decode(code, Mode::Partial, pat).failed;
        fail_maximal += decode(code, Mode::Maximal, pat).failed;
    }
    double pp = double(fail_partial) / trials, pm = double(fail_maximal) / trials;
    double sigma = std::sqrt(pp * (1 - pp) / trials + pm * (1 - pm) / trials);
    CHECK(pm < pp - 3 * sigma);
}

TEST_CASE("stack-correctable patterns always decode in order-maximal mode") {
    TsccCode code = build_code(4);
    RngStream rng(73);
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
        ErasurePattern pat = sample_erasure(code.n, 0.25, rng);
        if (!stack_correctable(code, pat.erased)) continue;
        ++checked;
        for (int s = 0; s < 100; ++s) {
            ErasurePattern with_err = pat;
            with_err.induced = random_pauli_on(code.n, pat.erased, rng);
            CHECK_FALSE(decode(code, Mode::Maximal, with_err).failed);
        }
    }
    CHECK(checked > 50);
}
