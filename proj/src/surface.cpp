#include "cwp/surface.hpp"

#include <algorithm>
#include <map>

namespace cwp {

IdealTriangulation::IdealTriangulation(std::vector<std::array<int, 3>> triangles,
                                       std::vector<std::pair<int, int>> pairing,
                                       std::vector<std::string> edge_names)
    : F_(static_cast<int>(triangles.size())), triangles_(std::move(triangles)),
      edge_names_(std::move(edge_names)) {
    int sides = 3 * F_;
    std::vector<int> seen(sides, 0);
    for (const auto& t : triangles_)
        for (int s : t) {
            if (s < 0 || s >= sides) throw std::invalid_argument("side id out of range");
            seen[s]++;
        }
    for (int s = 0; s < sides; ++s)
        if (seen[s] != 1) throw std::invalid_argument("side ids are not a permutation");

    pair_.assign(sides, -1);
    for (auto [a, b] : pairing) {
        if (a < 0 || a >= sides || b < 0 || b >= sides) throw std::invalid_argument("pairing side id");
        if (a == b) throw std::invalid_argument("side glued to itself");
        if (pair_[a] != -1 || pair_[b] != -1) throw std::invalid_argument("side paired twice");
        pair_[a] = b;
        pair_[b] = a;
    }
    for (int s = 0; s < sides; ++s)
        if (pair_[s] == -1) throw std::invalid_argument("dangling side");

    build();
}

namespace {

struct SidePos {
    int tri, pos;
};

}  // namespace

void IdealTriangulation::build() {
    int sides = 3 * F_;
    std::vector<SidePos> where(sides);
    for (int t = 0; t < F_; ++t)
        for (int p = 0; p < 3; ++p) where[triangles_[t][p]] = {t, p};
    auto next = [&](int s) {
        auto [t, p] = where[s];
        return triangles_[t][(p + 1) % 3];
    };

    // A triangle with two of its own sides glued collapses to a monogon or
    // bigon complementary region.
    for (int s = 0; s < sides; ++s)
        if (where[pair_[s]].tri == where[s].tri)
            throw std::invalid_argument("monogon or bigon complementary region (self-glued triangle)");

    // Edges.
    side_edge_.assign(sides, -1);
    edge_sides_.clear();
    for (int s = 0; s < sides; ++s) {
        if (side_edge_[s] >= 0) continue;
        int e = static_cast<int>(edge_sides_.size());
        side_edge_[s] = e;
        side_edge_[pair_[s]] = e;
        edge_sides_.emplace_back(s, pair_[s]);
    }
    E_ = static_cast<int>(edge_sides_.size());

    // Vertices: orbits of s -> next(pair(s)), one outgoing side per corner.
    side_vertex_.assign(sides, -1);
    vertex_orbits_.clear();
    for (int s = 0; s < sides; ++s) {
        if (side_vertex_[s] >= 0) continue;
        int v = static_cast<int>(vertex_orbits_.size());
        std::vector<int> orbit;
        int cur = s;
        do {
            side_vertex_[cur] = v;
            orbit.push_back(cur);
            cur = next(pair_[cur]);
        } while (cur != s);
        vertex_orbits_.push_back(std::move(orbit));
    }
    V_ = static_cast<int>(vertex_orbits_.size());

    for (int v = 0; v < V_; ++v)
        if (vertex_degree(v) < 2)
            throw std::invalid_argument("monogon complementary region (puncture of degree 1)");

    int chi = V_ - E_ + F_;
    if (chi > 2 || (2 - chi) % 2 != 0) throw std::invalid_argument("non-orientable or invalid gluing");
    genus_ = (2 - chi) / 2;

    if (edge_names_.empty()) {
        for (int e = 0; e < E_; ++e) edge_names_.push_back("e" + std::to_string(e));
    }
    if (static_cast<int>(edge_names_.size()) != E_)
        throw std::invalid_argument("edge name count");

    if (labels_.empty()) {
        for (int e = 0; e < E_; ++e) labels_.push_back(RationalFunction::variable(E_, e));
    }
}

int IdealTriangulation::edge_index(const std::string& name) const {
    auto it = std::find(edge_names_.begin(), edge_names_.end(), name);
    if (it == edge_names_.end()) throw std::invalid_argument("unknown edge name: " + name);
    return static_cast<int>(it - edge_names_.begin());
}

void IdealTriangulation::set_labels(std::vector<RationalFunction> labels) {
    if (static_cast<int>(labels.size()) != E_) throw std::invalid_argument("label count");
    labels_ = std::move(labels);
}

std::pair<int, int> IdealTriangulation::edge_endpoints(int e) const {
    auto [s, s2] = edge_sides_[e];
    return {side_vertex_[s], side_vertex_[s2]};
}

Classification IdealTriangulation::classify() const {
    Classification c;
    c.nice = true;
    for (const auto& t : triangles_) {
        int a = side_edge_[t[0]], b = side_edge_[t[1]], d = side_edge_[t[2]];
        if (a == b || a == d || b == d) c.nice = false;
    }
    c.degrees.resize(V_);
    for (int v = 0; v < V_; ++v) c.degrees[v] = vertex_degree(v);
    c.perfect = c.nice && std::all_of(c.degrees.begin(), c.degrees.end(),
                                      [](int d) { return d >= 3; });
    return c;
}

ExchangeMatrix IdealTriangulation::exchange_matrix() const {
    if (!is_nice()) throw std::domain_error("exchange matrix requires a nice triangulation");
    std::vector<std::vector<Int>> z(E_, std::vector<Int>(E_, 0));
    // Each consecutive corner pair around a vertex contributes one adjacency;
    // the rotation produced by next(pair(s)) reads clockwise in the
    // convention that reproduces the reference torus value, hence the order
    // swap below.
    for (const auto& orbit : vertex_orbits_) {
        int d = static_cast<int>(orbit.size());
        for (int t = 0; t < d; ++t) {
            int a = side_edge_[orbit[t]];
            int b = side_edge_[orbit[(t + 1) % d]];
            if (a == b) continue;
            z[b][a] += 1;
            z[a][b] -= 1;
        }
    }
    return ExchangeMatrix(std::move(z));
}

QuadNeighbors IdealTriangulation::quad_neighbors(int e) const {
    if (e < 0 || e >= E_) throw std::out_of_range("edge index");
    if (!is_nice()) throw std::domain_error("quad neighbors require a nice triangulation");
    auto [s, s2] = edge_sides_[e];
    int sides = 3 * F_;
    std::vector<SidePos> where(sides);
    for (int t = 0; t < F_; ++t)
        for (int p = 0; p < 3; ++p) where[triangles_[t][p]] = {t, p};
    if (where[s].tri == where[s2].tri)
        throw std::domain_error("edge borders the same triangle twice");
    auto next = [&](int x) {
        auto [t, p] = where[x];
        return triangles_[t][(p + 1) % 3];
    };
    auto prev = [&](int x) {
        auto [t, p] = where[x];
        return triangles_[t][(p + 2) % 3];
    };
    return QuadNeighbors{side_edge_[next(s)], side_edge_[prev(s)], side_edge_[next(s2)],
                         side_edge_[prev(s2)]};
}

bool IdealTriangulation::flip_allowed(int e) const {
    if (e < 0 || e >= E_) return false;
    if (!is_nice()) return false;
    auto [p, q] = edge_endpoints(e);
    return vertex_degree(p) >= 3 && vertex_degree(q) >= 3;
}

IdealTriangulation IdealTriangulation::flip(int e, bool update_labels) const {
    if (e < 0 || e >= E_) throw std::out_of_range("edge index");
    if (!is_nice()) throw std::domain_error("flip requires a nice triangulation");
    if (!flip_allowed(e)) throw std::domain_error("disallowed flip: endpoint of degree < 3");

    auto [s, s2] = edge_sides_[e];
    int sides = 3 * F_;
    std::vector<SidePos> where(sides);
    for (int t = 0; t < F_; ++t)
        for (int p = 0; p < 3; ++p) where[triangles_[t][p]] = {t, p};
    int t1 = where[s].tri, t2 = where[s2].tri;
    auto next = [&](int x) {
        auto [t, p] = where[x];
        return triangles_[t][(p + 1) % 3];
    };
    auto prev = [&](int x) {
        auto [t, p] = where[x];
        return triangles_[t][(p + 2) % 3];
    };
    int sA = next(s), sB = prev(s), sC = next(s2), sD = prev(s2);

    std::vector<std::array<int, 3>> tris = triangles_;
    tris[t1] = {s, sD, sA};
    tris[t2] = {s2, sB, sC};

    std::vector<std::pair<int, int>> pairing;
    for (int x = 0; x < sides; ++x)
        if (x < pair_[x]) pairing.emplace_back(x, pair_[x]);

    IdealTriangulation out(std::move(tris), std::move(pairing), edge_names_);
    if (!out.is_nice()) throw std::domain_error("flip produces a non-nice triangulation");

    std::vector<RationalFunction> labels = labels_;
    if (update_labels) {
        const RationalFunction& fa = labels_[side_edge_[sA]];
        const RationalFunction& fb = labels_[side_edge_[sB]];
        const RationalFunction& fc = labels_[side_edge_[sC]];
        const RationalFunction& fd = labels_[side_edge_[sD]];
        labels[e] = (fa * fc + fb * fd) / labels_[e];
    }
    out.set_labels(std::move(labels));
    return out;
}

IdealTriangulation build_triangulation(
    const std::vector<std::array<std::pair<int, bool>, 3>>& gluing,
    std::vector<std::string> edge_names) {
    int F = static_cast<int>(gluing.size());
    std::map<int, std::pair<int, int>> occ;  // edge -> (forward side, backward side)
    std::vector<std::array<int, 3>> tris(F);
    for (int t = 0; t < F; ++t) {
        for (int p = 0; p < 3; ++p) {
            int sid = 3 * t + p;
            tris[t][p] = sid;
            auto [edge, fwd] = gluing[t][p];
            auto& slot = occ.try_emplace(edge, std::make_pair(-1, -1)).first->second;
            int& target = fwd ? slot.first : slot.second;
            if (target != -1)
                throw std::invalid_argument("non-orientable gluing: edge traversed twice in the same direction");
            target = sid;
        }
    }
    std::vector<std::pair<int, int>> pairing;
    int expected = 0;
    for (const auto& [edge, slot] : occ) {
        if (edge != expected++) throw std::invalid_argument("edge ids must be contiguous from 0");
        if (slot.first < 0 || slot.second < 0) throw std::invalid_argument("dangling side");
        pairing.emplace_back(slot.first, slot.second);
    }
    return IdealTriangulation(std::move(tris), std::move(pairing), std::move(edge_names));
}

namespace {

// Triangulation from consistently oriented vertex triples (no loops, at
// most one edge per vertex pair).
IdealTriangulation from_vertex_triples(const std::vector<std::array<int, 3>>& faces) {
    std::map<std::pair<int, int>, int> edge_of;
    std::vector<std::string> names;
    std::vector<std::array<std::pair<int, bool>, 3>> gluing(faces.size());
    for (std::size_t t = 0; t < faces.size(); ++t) {
        for (int p = 0; p < 3; ++p) {
            int u = faces[t][p], v = faces[t][(p + 1) % 3];
            auto key = std::minmax(u, v);
            auto it = edge_of.find(key);
            if (it == edge_of.end()) {
                it = edge_of.emplace(key, static_cast<int>(names.size())).first;
                names.push_back("e" + std::to_string(key.first) + "_" + std::to_string(key.second));
            }
            gluing[t][p] = {it->second, u < v};
        }
    }
    return build_triangulation(gluing, std::move(names));
}

}  // namespace

IdealTriangulation make_sphere(int punctures) {
    if (punctures < 3) throw std::invalid_argument("sphere needs at least 3 punctures");
    if (punctures == 3) return from_vertex_triples({{0, 1, 2}, {0, 2, 1}});
    if (punctures == 4)
        return from_vertex_triples({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
    // Bipyramid over a (punctures-2)-gon: apexes 0 and 1, equator 2..s-1.
    int k = punctures - 2;
    auto eq = [&](int i) { return 2 + ((i % k) + k) % k; };
    std::vector<std::array<int, 3>> faces;
    for (int i = 0; i < k; ++i) {
        faces.push_back({eq(i), eq(i + 1), 0});
        faces.push_back({eq(i + 1), eq(i), 1});
    }
    return from_vertex_triples(faces);
}

IdealTriangulation make_torus(int punctures) {
    if (punctures < 1) throw std::invalid_argument("torus needs at least 1 puncture");
    int s = punctures;
    // 1 x s grid of squares on the torus, each split by a diagonal.
    // Edges per column i: horizontal h_i, vertical loop u_i, diagonal d_i.
    auto h = [&](int i) { return 3 * (((i % s) + s) % s); };
    auto u = [&](int i) { return 3 * (((i % s) + s) % s) + 1; };
    auto d = [&](int i) { return 3 * (((i % s) + s) % s) + 2; };
    std::vector<std::array<std::pair<int, bool>, 3>> gluing;
    std::vector<std::string> names;
    for (int i = 0; i < s; ++i) {
        gluing.push_back({{{h(i), true}, {u(i + 1), true}, {d(i), false}}});
        gluing.push_back({{{d(i), true}, {h(i), false}, {u(i), false}}});
        names.push_back("h" + std::to_string(i));
        names.push_back("u" + std::to_string(i));
        names.push_back("d" + std::to_string(i));
    }
    return build_triangulation(gluing, std::move(names));
}

IdealTriangulation make_genus2_one_puncture() {
    // Fan triangulation of the octagon with boundary word a b a' b' c d c' d'.
    enum { a = 0, b, c, d, g2, g3, g4, g5, g6 };
    std::vector<std::array<std::pair<int, bool>, 3>> gluing = {
        {{{a, true}, {b, true}, {g2, false}}},
        {{{g2, true}, {a, false}, {g3, false}}},
        {{{g3, true}, {b, false}, {g4, false}}},
        {{{g4, true}, {c, true}, {g5, false}}},
        {{{g5, true}, {d, true}, {g6, false}}},
        {{{g6, true}, {c, false}, {d, false}}},
    };
    return build_triangulation(gluing,
                               {"a", "b", "c", "d", "g2", "g3", "g4", "g5", "g6"});
}

IdealTriangulation make_surface(const std::string& name) {
    if (name.rfind("sphere", 0) == 0) return make_sphere(std::stoi(name.substr(6)));
    if (name.rfind("torus", 0) == 0) return make_torus(std::stoi(name.substr(5)));
    if (name == "genus2_1") return make_genus2_one_puncture();
    throw std::invalid_argument("unknown surface: " + name);
}

std::vector<std::string> builder_names() {
    return {"sphere3", "sphere4", "sphere5", "torus1", "torus2", "genus2_1"};
}

std::vector<int> allowed_flips(const IdealTriangulation& t) {
    std::vector<int> out;
    for (int e = 0; e < t.num_edges(); ++e) {
        if (!t.flip_allowed(e)) continue;
        QuadNeighbors q = t.quad_neighbors(e);
        // The flip must also keep the triangulation nice.
        if (q.e1 == q.e4 || q.e2 == q.e3) continue;
        out.push_back(e);
    }
    return out;
}

std::vector<int> random_flip_word(const IdealTriangulation& t, int len, Rng& rng) {
    IdealTriangulation cur = t;
    std::vector<int> word;
    for (int i = 0; i < len; ++i) {
        std::vector<int> opts = allowed_flips(cur);
        if (opts.empty()) break;
        int e = opts[rand_int(rng, 0, static_cast<long>(opts.size()) - 1)];
        cur = cur.flip(e, false);
        word.push_back(e);
    }
    return word;
}

}  // namespace cwp
