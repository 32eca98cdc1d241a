#include "tscc/lattice.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tscc {

const char* color_name(Color c) {
    switch (c) {
        case Color::Red: return "red";
        case Color::Green: return "green";
        case Color::Blue: return "blue";
    }
    return "?";
}

namespace {

enum Site { N = 0, E = 1, S = 2, W = 3 };

struct Grid {
    int m;
    int cell(int i, int j) const { return ((i % m + m) % m) * m + ((j % m + m) % m); }
    uint32_t vid(int i, int j, int site) const { return uint32_t(cell(i, j) * 4 + site); }
    uint32_t sq(int i, int j) const { return uint32_t(cell(i, j)); }
    uint32_t oct(int i, int j) const { return uint32_t(m * m + cell(i, j)); }
    uint32_t edge(int i, int j, int k) const { return uint32_t(cell(i, j) * 6 + k); }
};

}  // namespace

Colex build_colex(int d) {
    if (d < 2 || d % 2 != 0) {
        throw std::invalid_argument("build_colex: distance must be a positive even integer");
    }
    Grid g{d / 2};
    const int m = g.m;

    Colex cx;
    cx.d = d;
    cx.m = m;
    cx.num_vertices = std::size_t(4) * m * m;

    // Edges: 6 per cell. 0..3 are the square sides N-E, E-S, S-W, W-N;
    // 4 links E(i,j)-W(i,j+1); 5 links S(i,j)-N(i+1,j).
    cx.edges.resize(std::size_t(6) * m * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            cx.edges[g.edge(i, j, 0)] = {g.vid(i, j, N), g.vid(i, j, E), {g.sq(i, j), g.oct(i - 1, j)}};
            cx.edges[g.edge(i, j, 1)] = {g.vid(i, j, E), g.vid(i, j, S), {g.sq(i, j), g.oct(i, j)}};
            cx.edges[g.edge(i, j, 2)] = {g.vid(i, j, S), g.vid(i, j, W), {g.sq(i, j), g.oct(i, j - 1)}};
            cx.edges[g.edge(i, j, 3)] = {g.vid(i, j, W), g.vid(i, j, N), {g.sq(i, j), g.oct(i - 1, j - 1)}};
            cx.edges[g.edge(i, j, 4)] = {g.vid(i, j, E), g.vid(i, j + 1, W), {g.oct(i - 1, j), g.oct(i, j)}};
            cx.edges[g.edge(i, j, 5)] = {g.vid(i, j, S), g.vid(i + 1, j, N), {g.oct(i, j - 1), g.oct(i, j)}};
        }
    }

    cx.faces.resize(std::size_t(2) * m * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            ColexFace& sq = cx.faces[g.sq(i, j)];
            sq.color = Color::Green;
            sq.is_square = true;
            sq.vertices = {g.vid(i, j, N), g.vid(i, j, E), g.vid(i, j, S), g.vid(i, j, W)};
            sq.edges = {g.edge(i, j, 0), g.edge(i, j, 1), g.edge(i, j, 2), g.edge(i, j, 3)};

            ColexFace& oc = cx.faces[g.oct(i, j)];
            oc.color = (i + j) % 2 == 0 ? Color::Red : Color::Blue;
            oc.is_square = false;
            oc.vertices = {g.vid(i, j, E),     g.vid(i, j, S),     g.vid(i + 1, j, N),
                           g.vid(i + 1, j, E), g.vid(i + 1, j + 1, W), g.vid(i + 1, j + 1, N),
                           g.vid(i, j + 1, S), g.vid(i, j + 1, W)};
            oc.edges = {g.edge(i, j, 1),     g.edge(i, j, 5),     g.edge(i + 1, j, 0),
                        g.edge(i + 1, j, 4), g.edge(i + 1, j + 1, 3), g.edge(i, j + 1, 5),
                        g.edge(i, j + 1, 2), g.edge(i, j, 4)};
        }
    }

    // Vertex -> incident edges, sorted.
    std::vector<std::vector<uint32_t>> ve(cx.num_vertices);
    for (uint32_t e = 0; e < cx.edges.size(); ++e) {
        ve[cx.edges[e].u].push_back(e);
        ve[cx.edges[e].v].push_back(e);
    }
    cx.vertex_edges.resize(cx.num_vertices);
    for (std::size_t v = 0; v < cx.num_vertices; ++v) {
        if (ve[v].size() != 3) throw std::logic_error("build_colex: vertex is not trivalent");
        std::sort(ve[v].begin(), ve[v].end());
        std::copy(ve[v].begin(), ve[v].end(), cx.vertex_edges[v].begin());
    }

    cx.face_vertices_distinct.resize(cx.faces.size());
    for (std::size_t f = 0; f < cx.faces.size(); ++f) {
        auto vs = cx.faces[f].vertices;
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        cx.face_vertices_distinct[f] = std::move(vs);
    }

    // Walk sanity: each face walk must traverse its listed edges between the
    // listed vertices.
    for (const auto& face : cx.faces) {
        std::size_t len = face.vertices.size();
        for (std::size_t k = 0; k < len; ++k) {
            const ColexEdge& e = cx.edges[face.edges[k]];
            uint32_t a = face.vertices[k], b = face.vertices[(k + 1) % len];
            if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
                throw std::logic_error("build_colex: face walk does not follow its edges");
            }
        }
    }

    // 3-colorability: no edge may join two distinct faces of the same color.
    // The single-octagon d=2 lattice is self-adjacent and allowed through;
    // m odd with m > 1 has genuinely conflicting octagon colors.
    for (const auto& e : cx.edges) {
        if (e.faces[0] != e.faces[1] && cx.faces[e.faces[0]].color == cx.faces[e.faces[1]].color) {
            throw std::invalid_argument(
                "build_colex: octagon checkerboard is inconsistent for d = " + std::to_string(d) +
                " (square-octagon torus requires d divisible by 4)");
        }
    }

    // Euler characteristic on the torus.
    if (cx.num_vertices + cx.num_faces() != cx.num_edges()) {
        throw std::logic_error("build_colex: Euler characteristic is not zero");
    }
    return cx;
}

namespace {

// Corner slot of vertex v between incident edges a and b: the three sorted
// incident edges e0<e1<e2 give slots (e0,e1)->0, (e0,e2)->1, (e1,e2)->2.
int corner_slot(const Colex& cx, uint32_t v, uint32_t a, uint32_t b) {
    const auto& es = cx.vertex_edges[v];
    if (a > b) std::swap(a, b);
    if (a == es[0] && b == es[1]) return 0;
    if (a == es[0] && b == es[2]) return 1;
    if (a == es[1] && b == es[2]) return 2;
    throw std::logic_error("corner_slot: edges not incident to vertex");
}

}  // namespace

std::size_t Hypergraph::num_solid() const {
    std::size_t k = 0;
    for (const auto& e : rank2) k += e.solid;
    return k;
}

std::size_t Hypergraph::num_dashed() const { return rank2.size() - num_solid(); }

uint32_t Hypergraph::stack_qubit(uint32_t vertex, Color c) const {
    for (uint32_t q : triangle(vertex)) {
        if (stack_of[q] == c) return q;
    }
    throw std::logic_error("Hypergraph::stack_qubit: no qubit of that stack on this triangle");
}

Hypergraph inflate(const Colex& colex) {
    Hypergraph hg;
    hg.colex = colex;
    hg.n = 3 * colex.num_vertices;
    hg.stack_of.assign(hg.n, Color::Red);
    hg.face_of.assign(hg.n, 0);
    hg.vertex_of.assign(hg.n, 0);

    std::vector<int> claimed(hg.n, 0);
    for (std::size_t v = 0; v < colex.num_vertices; ++v) {
        hg.vertex_of[3 * v] = hg.vertex_of[3 * v + 1] = hg.vertex_of[3 * v + 2] = uint32_t(v);
    }

    // Claim triangle corners face by face and lay down one rank-2 edge per
    // walk step.
    hg.faces.resize(colex.num_faces());
    hg.rects.resize(colex.num_edges());
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> rect_sides(colex.num_edges());

    for (uint32_t f = 0; f < colex.num_faces(); ++f) {
        const ColexFace& cf = colex.faces[f];
        HyperFace& hf = hg.faces[f];
        hf.color = cf.color;
        hf.is_square = cf.is_square;
        std::size_t len = cf.vertices.size();
        for (std::size_t k = 0; k < len; ++k) {
            uint32_t v = cf.vertices[k];
            uint32_t e_prev = cf.edges[(k + len - 1) % len];
            uint32_t e_next = cf.edges[k];
            uint32_t q = 3 * v + corner_slot(colex, v, e_prev, e_next);
            hf.qubits.push_back(q);
            ++claimed[q];
            hg.stack_of[q] = cf.color;
            hg.face_of[q] = f;
        }
        for (std::size_t k = 0; k < len; ++k) {
            Rank2Edge e2;
            e2.a = hf.qubits[k];
            e2.b = hf.qubits[(k + 1) % len];
            e2.face = f;
            e2.colex_edge = cf.edges[k];
            e2.rect = cf.edges[k];  // one rectangle per colex edge, same index
            e2.solid = false;       // assigned below
            hf.sigma1.push_back(uint32_t(hg.rank2.size()));
            rect_sides[cf.edges[k]].push_back({uint32_t(hg.rank2.size()), f});
            hg.rank2.push_back(e2);
        }
    }

    for (int c : claimed) {
        if (c != 1) throw std::logic_error("inflate: triangle corner not claimed exactly once");
    }

    // Solid/dashed assignment. With distinct face colors on the two sides of
    // every colex edge, the side owned by color c is solid exactly when the
    // opposite side's color is next(c) in the r->g->b cycle. This satisfies
    // the alternating rule around every face cycle and every triangle.
    bool closed_form = true;
    for (const auto& e : colex.edges) {
        if (e.faces[0] == e.faces[1]) closed_form = false;
    }
    if (closed_form) {
        for (auto& e2 : hg.rank2) {
            Color own = colex.faces[e2.face].color;
            Color other = colex.faces[hg.colex.other_face(e2.colex_edge, e2.face)].color;
            e2.solid = (other == next_color(own));
        }
    } else {
        // Degenerate d=2 lattice: 2-color the constraint graph (adjacent
        // edges of a face cycle differ, the two sides of a colex edge
        // differ) as far as possiblems; conflicts are recorded.
        std::vector<int> mark(hg.rank2.size(), -1);
        std::vector<std::vector<uint32_t>> adj(hg.rank2.size());
        for (const HyperFace& hf : hg.faces) {
            std::size_t len = hf.sigma1.size();
            for (std::size_t k = 0; k < len; ++k) {
                adj[hf.sigma1[k]].push_back(hf.sigma1[(k + 1) % len]);
                adj[hf.sigma1[(k + 1) % len]].push_back(hf.sigma1[k]);
            }
        }
        for (const auto& sides : rect_sides) {
            if (sides.size() == 2) {
                adj[sides[0].first].push_back(sides[1].first);
                adj[sides[1].first].push_back(sides[0].first);
            }
        }
        for (uint32_t s = 0; s < hg.rank2.size(); ++s) {
            if (mark[s] != -1) continue;
            mark[s] = 0;
            std::queue<uint32_t> bfs;
            bfs.push(s);
            while (!bfs.empty()) {
                uint32_t cur = bfs.front();
                bfs.pop();
                for (uint32_t nb : adj[cur]) {
                    if (mark[nb] == -1) {
                        mark[nb] = 1 - mark[cur];
                        bfs.push(nb);
                    } else if (mark[nb] == mark[cur]) {
                        hg.alternation_consistent = false;
                    }
                }
            }
        }
        for (std::size_t i = 0; i < hg.rank2.size(); ++i) hg.rank2[i].solid = mark[i] == 1;
    }

    // Rectangles: one per colex edge, bounded by the split pair.
    for (uint32_t e = 0; e < colex.num_edges(); ++e) {
        if (rect_sides[e].size() != 2) throw std::logic_error("inflate: colex edge without exactly two sides");
        Rectangle& r = hg.rects[e];
        r.colex_edge = e;
        r.rank2 = {rect_sides[e][0].first, rect_sides[e][1].first};
        r.colors = {colex.faces[rect_sides[e][0].second].color, colex.faces[rect_sides[e][1].second].color};
        const Rank2Edge& s0 = hg.rank2[r.rank2[0]];
        const Rank2Edge& s1 = hg.rank2[r.rank2[1]];
        r.qubits = {s0.a, s0.b, s1.a, s1.b};
    }

    // Incident rank-2 edges per qubit (exactly two).
    std::vector<std::vector<uint32_t>> qe(hg.n);
    for (uint32_t i = 0; i < hg.rank2.size(); ++i) {
        qe[hg.rank2[i].a].push_back(i);
        qe[hg.rank2[i].b].push_back(i);
    }
    hg.qubit_rank2.resize(hg.n);
    for (std::size_t q = 0; q < hg.n; ++q) {
        if (qe[q].size() != 2) throw std::logic_error("inflate: qubit without exactly two rank-2 edges");
        hg.qubit_rank2[q] = {qe[q][0], qe[q][1]};
    }

    if (closed_form) {
        // The split pair of every colex edge must carry one solid and one
        // dashed copy, and types must alternate around every face cycle.
        for (const auto& r : hg.rects) {
            if (hg.rank2[r.rank2[0]].solid == hg.rank2[r.rank2[1]].solid) {
                throw std::logic_error("inflate: split pair with equal edge types");
            }
        }
        for (const HyperFace& hf : hg.faces) {
            std::size_t len = hf.sigma1.size();
            for (std::size_t k = 0; k < len; ++k) {
                if (hg.rank2[hf.sigma1[k]].solid == hg.rank2[hf.sigma1[(k + 1) % len]].solid) {
                    throw std::logic_error("inflate: face cycle does not alternate solid/dashed");
                }
            }
        }
    }
    return hg;
}

std::string lattice_to_json(const Hypergraph& hg) {
    nlohmann::json j;
    j["d"] = hg.colex.d;
    j["qubits"] = hg.n;
    j["colex"]["vertices"] = hg.colex.num_vertices;
    auto& je = j["colex"]["edges"];
    je = nlohmann::json::array();
    for (const auto& e : hg.colex.edges) je.push_back({e.u, e.v});
    auto& jf = j["colex"]["faces"];
    jf = nlohmann::json::array();
    for (const auto& f : hg.colex.faces) {
        jf.push_back({{"color", color_name(f.color)},
                      {"shape", f.is_square ? "square" : "octagon"},
                      {"vertices", f.vertices}});
    }
    auto& jt = j["rank3_edges"];
    jt = nlohmann::json::array();
    for (uint32_t v = 0; v < hg.num_triangles(); ++v) {
        auto t = hg.triangle(v);
        jt.push_back({t[0], t[1], t[2]});
    }
    auto& jr = j["rank2_edges"];
    jr = nlohmann::json::array();
    for (const auto& e : hg.rank2) {
        jr.push_back({{"a", e.a},
                      {"b", e.b},
                      {"type", e.solid ? "solid" : "dashed"},
                      {"face", e.face},
                      {"rect", e.rect}});
    }
    auto& jq = j["stacks"];
    jq = nlohmann::json::array();
    for (auto c : hg.stack_of) jq.push_back(color_name(c));
    auto& jrect = j["rect_faces"];
    jrect = nlohmann::json::array();
    for (const auto& r : hg.rects) {
        jrect.push_back({{"colex_edge", r.colex_edge},
                         {"colors", {color_name(r.colors[0]), color_name(r.colors[1])}},
                         {"qubits", r.qubits}});
    }
    return j.dump(2);
}

}  // namespace tscc
