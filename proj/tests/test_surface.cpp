#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cwp/json_io.hpp"
#include "cwp/surface.hpp"

using namespace cwp;

namespace {

bool cyclic_equal(const std::array<int, 4>& a, const std::array<int, 4>& b) {
    for (int r = 0; r < 4; ++r) {
        bool eq = true;
        for (int i = 0; i < 4; ++i) eq = eq && a[i] == b[(i + r) % 4];
        if (eq) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("builders have the expected invariants") {
    struct Expect {
        const char* name;
        int genus, punctures;
        bool perfect;
    };
    for (Expect ex : {Expect{"sphere3", 0, 3, false}, Expect{"sphere4", 0, 4, true},
                      Expect{"sphere5", 0, 5, true}, Expect{"torus1", 1, 1, true},
                      Expect{"torus2", 1, 2, true}, Expect{"genus2_1", 2, 1, true}}) {
        IdealTriangulation t = make_surface(ex.name);
        CHECK(t.genus() == ex.genus);
        CHECK(t.num_vertices() == ex.punctures);
        CHECK(t.num_edges() == 6 * ex.genus - 6 + 3 * ex.punctures);
        Classification c = t.classify();
        CHECK(c.nice);
        CHECK(c.perfect == ex.perfect);
    }
    CHECK(make_torus(1).vertex_degree(0) == 6);
    for (int d : make_sphere(3).classify().degrees) CHECK(d == 2);
    CHECK_THROWS_AS(make_sphere(2), std::invalid_argument);
    CHECK_THROWS_AS(make_surface("klein"), std::invalid_argument);
    CHECK(builder_names().size() == 6);
}

TEST_CASE("gluing validation") {
    // dangling side: only one occurrence of edge 1
    CHECK_THROWS_AS(build_triangulation({{{{0, true}, {0, false}, {1, true}}}}),
                    std::invalid_argument);
    // same-direction double traversal is orientation-inconsistent
    CHECK_THROWS_AS(build_triangulation({{{{0, true}, {0, true}, {1, true}}},
                                         {{{1, false}, {2, true}, {2, false}}}}),
                    std::invalid_argument);
    // a triangle glued to itself collapses to a monogon/bigon region
    CHECK_THROWS_AS(build_triangulation({{{{0, true}, {0, false}, {1, true}}},
                                         {{{1, false}, {2, true}, {2, false}}}}),
                    std::invalid_argument);
    // malformed raw pairing: side paired with itself
    CHECK_THROWS_AS(IdealTriangulation({{0, 1, 2}, {3, 4, 5}},
                                       {{0, 0}, {1, 4}, {2, 5}, {3, 1}}),
                    std::invalid_argument);
}

TEST_CASE("exchange matrices of the two reference surfaces") {
    IdealTriangulation sph = make_sphere(3);
    ExchangeMatrix zs = sph.exchange_matrix();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(zs.at(i, j) == 0);

    IdealTriangulation tor = make_torus(1);
    ExchangeMatrix zt = tor.exchange_matrix();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(abs(zt.at(i, j)) == 2);
    CHECK(zt.at(tor.edge_index("h0"), tor.edge_index("u0")) == -2);
}

TEST_CASE("quad neighbors") {
    IdealTriangulation tor = make_torus(1);
    for (int e = 0; e < 3; ++e) {
        QuadNeighbors q = tor.quad_neighbors(e);
        CHECK(q.e1 == q.e3);
        CHECK(q.e2 == q.e4);
        CHECK(q.e1 != e);
        CHECK(q.e2 != e);
    }
    IdealTriangulation sph = make_sphere(4);
    for (int e = 0; e < sph.num_edges(); ++e) {
        QuadNeighbors q = sph.quad_neighbors(e);
        std::array<int, 4> a = q.as_array();
        std::sort(a.begin(), a.end());
        CHECK(std::unique(a.begin(), a.end()) == a.end());
    }
    // the Whitehead move fixes the quadrilateral
    for (const std::string& name : builder_names()) {
        IdealTriangulation t = make_surface(name);
        for (int e : allowed_flips(t)) {
            QuadNeighbors before = t.quad_neighbors(e);
            QuadNeighbors after = t.flip(e, false).quad_neighbors(e);
            CHECK(cyclic_equal(before.as_array(), after.as_array()));
        }
    }
}

TEST_CASE("flip is an involution on labels and exchange matrices") {
    for (const std::string& name : builder_names()) {
        IdealTriangulation t = make_surface(name);
        for (int e : allowed_flips(t)) {
            IdealTriangulation once = t.flip(e);
            IdealTriangulation twice = once.flip(e);
            CHECK(twice.labels() == t.labels());
            CHECK(twice.exchange_matrix() == t.exchange_matrix());
        }
    }
}

TEST_CASE("disallowed flips throw") {
    IdealTriangulation sph = make_sphere(3);  // all punctures have degree 2
    for (int e = 0; e < 3; ++e) {
        CHECK(!sph.flip_allowed(e));
        CHECK_THROWS_AS(sph.flip(e), std::domain_error);
    }
}

TEST_CASE("flip commutes with matrix mutation") {
    Rng rng(97);
    for (const std::string& name : builder_names()) {
        IdealTriangulation t = make_surface(name);
        for (int e : allowed_flips(t))
            CHECK(t.flip(e, false).exchange_matrix() == mutate_matrix(t.exchange_matrix(), e));
        // random allowed-flip sequences
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<int> w = random_flip_word(t, 8, rng);
            IdealTriangulation cur = t;
            ExchangeMatrix Z = t.exchange_matrix();
            for (int e : w) {
                cur = cur.flip(e, false);
                Z = mutate_matrix(Z, e);
                CHECK(cur.exchange_matrix() == Z);
                CHECK(cur.num_edges() == 6 * cur.genus() - 6 + 3 * cur.num_vertices());
                CHECK(cur.num_vertices() - cur.num_edges() + cur.num_triangles() ==
                      2 - 2 * t.genus());
            }
        }
    }
}

TEST_CASE("labels follow seed mutation") {
    Rng rng(103);
    for (const std::string& name : {std::string("torus1"), std::string("sphere4"),
                                    std::string("torus2")}) {
        IdealTriangulation t = make_surface(name);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<int> w = random_flip_word(t, 6, rng);
            IdealTriangulation cur = t;
            for (int e : w) cur = cur.flip(e);
            Seed s = apply_word(initial_seed(t.exchange_matrix()), w);
            CHECK(cur.labels() == s.variables);
        }
    }
}

TEST_CASE("two-flip label reproduction") {
    IdealTriangulation t = make_torus(2);
    int d0 = t.edge_index("d0"), h0 = t.edge_index("h0");
    int u0 = t.edge_index("u0"), h1 = t.edge_index("h1");
    int E = t.num_edges();
    RationalFunction a = RationalFunction::variable(E, u0);
    RationalFunction b = RationalFunction::variable(E, h0);
    RationalFunction c = RationalFunction::variable(E, h1);
    RationalFunction d = RationalFunction::variable(E, d0);

    IdealTriangulation once = t.flip(d0);
    CHECK(once.labels()[d0] == (a * c + b * b) / d);

    IdealTriangulation twice = once.flip(h0);
    CHECK(twice.labels()[h0] == (a * c * d * d + (a * c + b * b).pow(2)) / (b * d * d));
}

TEST_CASE("flip of a perfect triangulation stays nice") {
    for (const std::string& name : {std::string("sphere4"), std::string("sphere5"),
                                    std::string("torus1"), std::string("torus2"),
                                    std::string("genus2_1")}) {
        IdealTriangulation t = make_surface(name);
        for (int e = 0; e < t.num_edges(); ++e) {
            if (!t.flip_allowed(e)) continue;
            CHECK(t.flip(e, false).is_nice());
        }
    }
}

TEST_CASE("triangulation json round trip") {
    for (const std::string& name : builder_names()) {
        IdealTriangulation t = make_surface(name);
        IdealTriangulation back = triangulation_from_json(triangulation_to_json(t));
        CHECK(back.num_edges() == t.num_edges());
        CHECK(back.num_vertices() == t.num_vertices());
        CHECK(back.genus() == t.genus());
        CHECK(back.edge_names() == t.edge_names());
        CHECK(back.exchange_matrix() == t.exchange_matrix());
    }
}
