#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cwp/json_io.hpp"
#include "cwp/verify.hpp"

using namespace cwp;

TEST_CASE("gauge action") {
    IdealTriangulation sph = make_sphere(3);
    std::vector<Rat> values{Rat(1), Rat(1), Rat(1)};

    std::vector<Rat> id = gauge_act(sph, {Rat(1), Rat(1), Rat(1)}, values);
    CHECK(id == values);

    // scaling one puncture doubles its incident edges, leaves the opposite one
    std::vector<Rat> lam{Rat(1), Rat(1), Rat(1)};
    lam[0] = 2;
    std::vector<Rat> scaled = gauge_act(sph, lam, values);
    int doubled = 0, fixed = 0;
    for (int e = 0; e < 3; ++e) {
        auto [p, q] = sph.edge_endpoints(e);
        if (p == 0 || q == 0) {
            CHECK(scaled[e] == 2);
            ++doubled;
        } else {
            CHECK(scaled[e] == 1);
            ++fixed;
        }
    }
    CHECK(doubled == 2);
    CHECK(fixed == 1);

    // every edge of the once-punctured torus is a loop: everything scales by t^2
    IdealTriangulation tor = make_torus(1);
    Rat t(3, 2);
    std::vector<Rat> tv = gauge_act(tor, {t}, {Rat(1), Rat(1), Rat(1)});
    for (const Rat& v : tv) CHECK(v == t * t);

    CHECK_THROWS_AS(gauge_act(tor, {Rat(0)}, {Rat(1), Rat(1), Rat(1)}), std::invalid_argument);
    CHECK_THROWS_AS(gauge_act(tor, {Rat(1)}, {Rat(1), Rat(-1), Rat(1)}), std::invalid_argument);
}

TEST_CASE("tau values are gauge invariant") {
    Rng rng(113);
    for (const std::string& name : builder_names()) {
        IdealTriangulation t = make_surface(name);
        std::vector<Rat> values(t.num_edges());
        std::vector<Rat> lam(t.num_vertices());
        for (Rat& v : values) v = rand_pos_rat(rng);
        for (Rat& l : lam) l = rand_pos_rat(rng);
        std::vector<Rat> scaled = gauge_act(t, lam, values);
        CHECK(tau_values(t, scaled) == tau_values(t, values));
    }
}

TEST_CASE("corank equals puncture count with matching kernels") {
    CorankReport tor = corank_check(make_torus(1));
    CHECK(tor.rank == 2);
    CHECK(tor.corank == 1);
    CHECK(tor.agrees);
    REQUIRE(tor.kernel_basis.size() == 1);
    QVec k = tor.kernel_basis[0];
    CHECK(k[0] == k[1]);
    CHECK(k[1] == k[2]);
    CHECK(k[0] != 0);
    // the single incidence row is (2,2,2) = 2 * kernel generator direction
    CHECK(tor.incidence_image == std::vector<QVec>{{Rat(2), Rat(2), Rat(2)}});

    CorankReport sph = corank_check(make_sphere(3));
    CHECK(sph.rank == 0);
    CHECK(sph.corank == 3);
    CHECK(sph.agrees);

    CorankReport g2 = corank_check(make_genus2_one_puncture());
    CHECK(g2.rank == 8);
    CHECK(g2.corank == 1);
    CHECK(g2.agrees);

    for (const std::string& name : builder_names()) CHECK(corank_check(make_surface(name)).agrees);
}

TEST_CASE("corank agreement survives flips") {
    Rng rng(127);
    for (const std::string& name : builder_names()) {
        IdealTriangulation t = make_surface(name);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> w = random_flip_word(t, 6, rng);
            IdealTriangulation cur = t;
            for (int e : w) cur = cur.flip(e, false);
            CHECK(corank_check(cur).agrees);
        }
    }
}

TEST_CASE("representative subsets") {
    RepresentativeSubset tor = find_representative(make_torus(1));
    CHECK(tor.edges.size() == 1);
    CHECK(tor.cycle_lengths == std::vector<int>{1});
    CHECK(tor.complement.size() == 2);
    CHECK(tor.restricted_nondegenerate);

    RepresentativeSubset sph = find_representative(make_sphere(3));
    CHECK(sph.edges == std::vector<int>{0, 1, 2});
    CHECK(sph.complement.empty());
    CHECK(sph.restricted_nondegenerate);  // vacuous

    for (const std::string& name : builder_names()) {
        IdealTriangulation t = make_surface(name);
        RepresentativeSubset r = find_representative(t);
        CHECK(static_cast<int>(r.edges.size()) == t.num_vertices());
        for (int c : r.cycle_lengths) {
            CHECK(c >= 1);
            CHECK(c % 2 == 1);
        }
        CHECK(r.restricted_nondegenerate);
        std::size_t covered = 0;
        for (const auto& comp : r.components) covered += comp.size();
        CHECK(covered == r.edges.size());
    }
}

TEST_CASE("shear coordinates match tau coordinates") {
    for (const std::string& name : builder_names()) {
        IdealTriangulation t = make_surface(name);
        if (!t.classify().perfect) {
            CHECK_THROWS_AS(shear_tau_check(t), std::domain_error);
            continue;
        }
        CHECK(shear_tau_check(t));
    }

    // with all labels set to 1, both sides are identically 1
    IdealTriangulation tor = make_torus(1);
    std::vector<RationalFunction> ones(tor.num_edges(), RationalFunction::one(tor.num_edges()));
    tor.set_labels(ones);
    CHECK(shear_tau_check(tor));
}

TEST_CASE("flip tracking") {
    IdealTriangulation t = make_torus(2);
    int d0 = t.edge_index("d0"), h0 = t.edge_index("h0");
    int E = t.num_edges();

    FlipTrace empty = track_flips(t, std::vector<int>{});
    for (int i = 0; i < E; ++i)
        for (int j = 0; j < E; ++j) {
            CHECK(empty.inter[i][j] == (i == j ? -1 : 0));
            CHECK(empty.delta[i][j] == (i == j ? -1 : 0));
        }
    CHECK(empty.seed_vars == t.labels());

    FlipTrace one = track_flips(t, std::vector<int>{d0});
    CHECK(one.inter[d0][d0] == 1);

    FlipTrace two = track_flips(t, std::vector<int>{d0, h0});
    CHECK(two.inter[h0][h0] == 1);
    CHECK(two.inter[h0][d0] == 2);
    CHECK(two.delta == two.inter);

    CHECK_THROWS_AS(track_flips(make_sphere(3), std::vector<int>{0}), std::domain_error);
}

TEST_CASE("denominator exponents equal tracked intersection numbers") {
    IdealTriangulation t = make_torus(2);
    int d0 = t.edge_index("d0"), h0 = t.edge_index("h0");
    CHECK(thm34_check(t, std::vector<int>{d0, h0}));
    CHECK(thm34_check(t, std::vector<int>{}));

    Rng rng(131);
    for (const std::string& name : {std::string("torus1"), std::string("sphere4"),
                                    std::string("genus2_1")}) {
        IdealTriangulation s = make_surface(name);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<int> w = random_flip_word(s, 10, rng);
            CHECK(thm34_check(s, w));
        }
    }
}

TEST_CASE("verification report shape") {
    json r = report_json("corank", "torus1", {0, 1}, true, {{"rank", 2}});
    CHECK(r.at("check") == "corank");
    CHECK(r.at("surface") == "torus1");
    CHECK(r.at("word") == json::array({0, 1}));
    CHECK(r.at("pass") == true);
    CHECK(r.at("witness").at("rank") == 2);
}
