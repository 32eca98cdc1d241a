#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tscc/gf2.hpp"
#include "tscc/lattice.hpp"
#include "tscc/pauli.hpp"

namespace tscc {

enum class Mode { Partial, Maximal };
const char* mode_name(Mode m);

struct CodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Identifies a reconstructed check: a TSCC stabilizer or a color-code
// stabilizer on one of the stacks.
struct CheckId {
    enum class Kind : uint8_t { W1, W2, Stack };
    Kind kind = Kind::W1;
    uint32_t face = 0;
    Color stack = Color::Red;  // Stack kind only
    char pauli = 'Z';          // Stack kind only: 'X', 'Y' or 'Z'

    bool operator==(const CheckId&) const = default;
    std::string to_string() const;
};

// Reference into a measurement round's batch.
struct GaugeRef {
    uint32_t round;
    uint32_t index;
};

// How one check's outcome is reconstructed: either an ordered product of
// gauge measurements, or the XOR of other checks' syndromes.
struct Recipe {
    CheckId target;
    std::vector<GaugeRef> ops;
    std::vector<CheckId> xors;
    bool direct() const { return xors.empty(); }
};

struct RoundBatch {
    std::string label;
    std::vector<PauliOperator> ops;
};

struct MeasurementSchedule {
    Mode mode = Mode::Partial;
    std::vector<RoundBatch> rounds;
    std::vector<Recipe> recipes;

    const Recipe* find(const CheckId& id) const;
};

// Per-qubit view of every check that can see it, used by peeling and
// syndrome updates. The parent vertex's three faces are listed in corner
// order; coefficient conventions: W1 and the stack Z checks see the X part
// of an error on the qubit, the stack X checks see the Z part, W2 sees the
// Z part always and the X part unless the qubit is the X-corner of that
// face's hypercycle operator.
struct QubitIncidence {
    std::array<uint32_t, 3> faces;
    std::array<bool, 3> w2_sees_x;
};

struct TsccCode {
    Hypergraph hg;
    std::size_t n = 0;
    int k = 0, r = 0, s = 0;

    OperatorSet gauge_gens;
    std::vector<uint32_t> xx_gens, yy_gens, zz_gens;  // indices into gauge_gens
    std::vector<uint32_t> rank2_gen;                  // rank-2 edge id -> gauge gen index

    std::vector<PauliOperator> w1, w2;        // per face
    std::vector<PauliOperator> u_square;      // per rectangular face
    std::array<PauliOperator, 4> bare_logicals;  // X1, Z1, X2, Z2

    MeasurementSchedule partial_schedule;
    MeasurementSchedule maximal_schedule;

    // Cached GF(2) structure.
    BinaryMatrix stab_matrix;    // rows: all W1 then all W2, symplectic
    BinaryMatrix gauge_matrix;   // rows: all gauge generators, symplectic
    gf2::RowSpace gauge_span;
    std::size_t rank_stab = 0;
    std::size_t rank_gauge = 0;

    // Decode support.
    BinaryMatrix face_vertex;                           // |F| x V parent incidence
    std::array<std::vector<uint32_t>, 3> stack_qubits;  // per stack: colex vertex -> qubit
    std::vector<QubitIncidence> qubit_checks;           // per qubit
    std::vector<BinaryVector> w2_xmask, w2_zmask;       // per face, length n
    std::vector<BinaryVector> w1_mask;                  // per face, length n (Z support)

    std::size_t num_faces() const { return hg.faces.size(); }
    std::size_t num_vertices() const { return hg.colex.num_vertices; }
    int distance() const { return hg.colex.d; }

    const PauliOperator& cc_stab(Color stack, uint32_t face, char pauli) const;

    const Recipe& find_recipe(Mode mode, const CheckId& id) const;
    // Target operator of a check id.
    const PauliOperator& check_operator(const CheckId& id) const;

private:
    friend TsccCode build_code(const Hypergraph&);
    std::array<std::vector<std::array<PauliOperator, 3>>, 3> cc_;  // [stack][face][X,Y,Z]
};

TsccCode build_code(const Hypergraph& hg);
TsccCode build_code(int d);

MeasurementSchedule build_schedule(const TsccCode& code, Mode mode);

// Proposition-style sequencing condition: every operator commutes with the
// product of all operators before it.
bool validate_sequencing(const std::vector<PauliOperator>& ops);

std::vector<PauliOperator> recipe_operators(const MeasurementSchedule& sched, const Recipe& recipe);
PauliOperator recipe_product(const TsccCode& code, const MeasurementSchedule& sched, const Recipe& recipe);

const Recipe& z_stab_decomposition(const TsccCode& code, Color stack, uint32_t face);
const Recipe& x_stab_decomposition(const TsccCode& code, Color stack, uint32_t face);

// Symplectic inner product of two (x|z) vectors of equal even length.
bool symplectic_omega(const BinaryVector& a, const BinaryVector& b);

}  // namespace tscc
