#pragma once

#include <array>
#include <string>

#include "cwp/exchange.hpp"

namespace cwp {

/// Counterclockwise-ordered neighbors of an edge, per the flip
/// quadrilateral: e1, e2 border one adjacent triangle, e3, e4 the other.
/// Entries may repeat when opposite sides of the quadrilateral coincide.
struct QuadNeighbors {
    int e1, e2, e3, e4;
    std::array<int, 4> as_array() const { return {e1, e2, e3, e4}; }
};

struct Classification {
    bool nice;
    bool perfect;
    std::vector<int> degrees;  // per vertex, loops counted twice
};

/// Combinatorial ideal triangulation of an oriented punctured surface,
/// encoded as oriented triangles with a side-pairing involution (ribbon
/// style), so loops and repeated edges are representable. Each edge carries
/// a Penner label, a rational function in the initial chart.
class IdealTriangulation {
public:
    /// triangles[t] lists three side ids in counterclockwise order;
    /// pairing glues sides in opposite directions.
    IdealTriangulation(std::vector<std::array<int, 3>> triangles,
                       std::vector<std::pair<int, int>> pairing,
                       std::vector<std::string> edge_names = {});

    int num_triangles() const { return F_; }
    int num_edges() const { return E_; }
    int num_vertices() const { return V_; }
    int genus() const { return genus_; }
    int num_punctures() const { return V_; }

    int side_pair(int s) const { return pair_[s]; }
    int side_edge(int s) const { return side_edge_[s]; }
    int side_vertex(int s) const { return side_vertex_[s]; }  // vertex at the side's tail
    const std::vector<std::string>& edge_names() const { return edge_names_; }
    int edge_index(const std::string& name) const;

    const std::vector<RationalFunction>& labels() const { return labels_; }
    void set_labels(std::vector<RationalFunction> labels);

    /// The two sides of an edge (lower side id first).
    std::pair<int, int> edge_sides(int e) const { return edge_sides_[e]; }

    /// Side-id triples of the triangles, counterclockwise.
    const std::vector<std::array<int, 3>>& side_triples() const { return triangles_; }

    /// Vertex degree = number of incident arc ends (loops count twice).
    int vertex_degree(int v) const { return static_cast<int>(vertex_orbits_[v].size()); }
    /// Outgoing sides around a vertex, in the rotation order used by Z.
    const std::vector<int>& vertex_star(int v) const { return vertex_orbits_[v]; }
    /// Endpoints of an edge (equal for a loop).
    std::pair<int, int> edge_endpoints(int e) const;

    Classification classify() const;
    bool is_nice() const { return classify().nice; }

    /// Z(Delta)_ab from the corner adjacency counts nu_P, antisymmetrized;
    /// the rotation direction is fixed so the once-punctured torus matches
    /// the reference value -2. Requires a nice triangulation.
    ExchangeMatrix exchange_matrix() const;

    QuadNeighbors quad_neighbors(int e) const;

    /// Degree condition of an allowed Whitehead move at e (both endpoints
    /// have degree >= 3), on a nice triangulation with distinct adjacent
    /// triangles.
    bool flip_allowed(int e) const;

    /// Whitehead move at e with the Ptolemy label update
    /// f(q) = (f(e1) f(e3) + f(e2) f(e4)) / f(e); the new diagonal keeps the
    /// edge id of e. Throws on a disallowed flip. `update_labels=false`
    /// skips the symbolic label computation.
    IdealTriangulation flip(int e, bool update_labels = true) const;

private:
    void build();

    int F_, E_, V_, genus_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<int> pair_;
    std::vector<int> side_edge_;
    std::vector<std::pair<int, int>> edge_sides_;
    std::vector<int> side_vertex_;
    std::vector<std::vector<int>> vertex_orbits_;
    std::vector<std::string> edge_names_;
    std::vector<RationalFunction> labels_;
};

/// Triangulation from a gluing table: triangles as triples of
/// (edge id, forward flag); every edge must occur exactly once forward and
/// once backward.
IdealTriangulation build_triangulation(
    const std::vector<std::array<std::pair<int, bool>, 3>>& gluing,
    std::vector<std::string> edge_names = {});

// Builder surfaces.
IdealTriangulation make_sphere(int punctures);           // s >= 3
IdealTriangulation make_torus(int punctures);            // s >= 1
IdealTriangulation make_genus2_one_puncture();

/// Named lookup: "sphere3", "sphere4", ..., "torus1", ..., "genus2_1".
IdealTriangulation make_surface(const std::string& name);
std::vector<std::string> builder_names();

/// Edges whose flip is allowed and keeps the triangulation nice.
std::vector<int> allowed_flips(const IdealTriangulation& t);

/// Random word of allowed flips of the given length (shorter only if some
/// step has no allowed flip).
std::vector<int> random_flip_word(const IdealTriangulation& t, int len, Rng& rng);

}  // namespace cwp
