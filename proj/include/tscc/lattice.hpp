#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tscc {

enum class Color : uint8_t { Red = 0, Green = 1, Blue = 2 };

constexpr Color next_color(Color c) { return Color((uint8_t(c) + 1) % 3); }
constexpr Color prev_color(Color c) { return Color((uint8_t(c) + 2) % 3); }
const char* color_name(Color c);

struct ColexEdge {
    uint32_t u, v;
    std::array<uint32_t, 2> faces;  // the two sides; equal only in the degenerate d=2 case
};

struct ColexFace {
    Color color;
    bool is_square;
    std::vector<uint32_t> vertices;  // boundary walk; vertices[k] -> vertices[k+1] via edges[k]
    std::vector<uint32_t> edges;
};

// Periodic square-octagon 2-colex of distance d, laid out as (d/2) x (d/2)
// unit cells of one square plus one octagon. Squares are green; octagons
// alternate red/blue in a checkerboard.
struct Colex {
    int d = 0;
    int m = 0;  // cells per torus direction, m = d/2
    std::size_t num_vertices = 0;
    std::vector<ColexEdge> edges;
    std::vector<ColexFace> faces;
    std::vector<std::array<uint32_t, 3>> vertex_edges;         // sorted per vertex
    std::vector<std::vector<uint32_t>> face_vertices_distinct;  // per face, sorted unique

    std::size_t num_edges() const { return edges.size(); }
    std::size_t num_faces() const { return faces.size(); }
    uint32_t other_face(uint32_t edge, uint32_t face) const {
        const auto& e = edges[edge];
        return e.faces[0] == face ? e.faces[1] : e.faces[0];
    }
};

Colex build_colex(int d);

struct Rank2Edge {
    uint32_t a, b;        // qubit endpoints
    bool solid;           // solid -> YY gauge operator, dashed -> XX
    uint32_t face;        // the one colored face whose boundary cycle carries it
    uint32_t rect;        // the one rectangular face it bounds
    uint32_t colex_edge;
};

struct HyperFace {
    Color color;
    bool is_square;
    std::vector<uint32_t> qubits;  // boundary walk order; sigma1[k] joins qubits[k], qubits[k+1]
    std::vector<uint32_t> sigma1;  // rank-2 edge ids
};

// Four-sided face between two colored faces: two rank-2 edges plus two
// triangle sides.
struct Rectangle {
    uint32_t colex_edge;
    std::array<uint32_t, 2> rank2;         // [side of faces[0], side of faces[1]] of the colex edge
    std::array<Color, 2> colors;
    std::array<uint32_t, 4> qubits;
};

// Vertex-inflated hypergraph carrying the subsystem code: one triangle
// (rank-3 edge) per colex vertex, qubits on triangle corners.
struct Hypergraph {
    Colex colex;
    std::size_t n = 0;                       // qubit count, 3 per colex vertex
    std::vector<Rank2Edge> rank2;
    std::vector<HyperFace> faces;
    std::vector<Rectangle> rects;
    std::vector<Color> stack_of;             // per qubit: color of its owning face
    std::vector<uint32_t> face_of;           // per qubit
    std::vector<uint32_t> vertex_of;         // per qubit: parent colex vertex
    std::vector<std::array<uint32_t, 2>> qubit_rank2;  // both incident rank-2 edges
    bool alternation_consistent = true;      // false only for the degenerate d=2 lattice

    std::size_t num_triangles() const { return colex.num_vertices; }
    // Corner qubits of the triangle at a colex vertex, in corner-slot order.
    std::array<uint32_t, 3> triangle(uint32_t vertex) const {
        return {3 * vertex, 3 * vertex + 1, 3 * vertex + 2};
    }
    std::size_t num_solid() const;
    std::size_t num_dashed() const;
    // Qubit of the given stack color within a triangle; throws if absent.
    uint32_t stack_qubit(uint32_t vertex, Color c) const;
};

Hypergraph inflate(const Colex& colex);

std::string lattice_to_json(const Hypergraph& hg);

}  // namespace tscc
