// Acceptance battery: one pass/fail line per criterion, nonzero exit on any
// failure. All comparisons are exact.
#include <functional>
#include <iostream>
#include <vector>

#include "cwp/forms.hpp"
#include "cwp/verify.hpp"

using namespace cwp;

namespace {

ExchangeMatrix cyclic3() {
    return ExchangeMatrix({{Int(0), Int(1), Int(-1)},
                           {Int(-1), Int(0), Int(1)},
                           {Int(1), Int(-1), Int(0)}});
}

ExchangeMatrix make_mat(std::vector<std::vector<long>> v) {
    std::vector<std::vector<Int>> m;
    for (auto& row : v) m.emplace_back(row.begin(), row.end());
    return ExchangeMatrix(std::move(m));
}

ExchangeMatrix random_skew(Rng& rng, int n, long bound) {
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long v = rand_int(rng, -bound, bound);
            m[i][j] = v;
            m[j][i] = -v;
        }
    return ExchangeMatrix(std::move(m));
}

// Estimated term count of the exchange binomial at i, to keep randomly
// drawn words at desk scale (cluster variables grow doubly exponentially on
// dense matrices).
bool mutation_feasible(const Seed& s, int i, double limit) {
    double pos = 1, neg = 1;
    for (int k = 0; k < s.matrix.n(); ++k) {
        long z = s.matrix.at(i, k).get_si();
        double tc = static_cast<double>(s.variables[k].num().term_count());
        for (long e = 0; e < z; ++e) pos *= tc;
        for (long e = 0; e < -z; ++e) neg *= tc;
        if (pos + neg > limit) return false;
    }
    return true;
}

std::vector<int> random_word(Rng& rng, const ExchangeMatrix& Z, int max_len) {
    int n = Z.n();
    int len = static_cast<int>(rand_int(rng, 0, max_len));
    Seed s = initial_seed(Z);
    std::vector<int> w;
    for (int k = 0; k < len; ++k) {
        int i = static_cast<int>(rand_int(rng, 0, n - 1));
        if (!mutation_feasible(s, i, 1e5)) break;
        s = mutate_seed(s, i);
        w.push_back(i);
    }
    return w;
}

QVec vectorize_upper(const QMat& m, int n) {
    QVec r;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r.push_back(m[i][j]);
    return r;
}

bool in_span(const std::vector<QMat>& basis, const QMat& m, int n) {
    QMat rows;
    for (const QMat& b : basis) rows.push_back(vectorize_upper(b, n));
    int r0 = rows.empty() ? 0 : rank_rat(rows);
    rows.push_back(vectorize_upper(m, n));
    return rank_rat(rows) == r0;
}

// Criterion 1: the three reference mutations of the 3x3 matrix plus the
// mutated variable.
bool criterion1() {
    ExchangeMatrix Z = cyclic3();
    bool ok = mutate_matrix(Z, 0) == make_mat({{0, -1, 1}, {1, 0, 0}, {-1, 0, 0}}) &&
              mutate_matrix(Z, 1) == make_mat({{0, -1, 0}, {1, 0, -1}, {0, 1, 0}}) &&
              mutate_matrix(Z, 2) == make_mat({{0, 0, 1}, {0, 0, -1}, {-1, 1, 0}});
    Seed m = mutate_seed(initial_seed(Z), 0);
    RationalFunction f1 = RationalFunction::variable(3, 0);
    RationalFunction f2 = RationalFunction::variable(3, 1);
    RationalFunction f3 = RationalFunction::variable(3, 2);
    return ok && m.variables[0] == (f2 + f3) / f1;
}

// Criterion 2: Poisson solver dimensions on the two reference cases.
bool criterion2() {
    Rng rng(2);
    if (!solve_poisson_star(cyclic3(), rng).empty()) return false;
    ExchangeMatrix a2({{Int(0), Int(1)}, {Int(-1), Int(0)}});
    return solve_poisson_star(a2, rng).size() == 1;
}

// Criterion 3: 100 random Z — basis size equals nonzero block count, every
// basis element passes pullback along random words, out-of-span forms fail.
bool criterion3() {
    Rng rng(3);
    for (int iter = 0; iter < 100; ++iter) {
        int n = static_cast<int>(rand_int(rng, 2, 6));
        ExchangeMatrix Z = random_skew(rng, n, 3);
        FormBasis fb = compatible_form_basis(Z);
        BlockPartition bp = block_partition(Z);
        int nonzero = 0;
        std::vector<int> block_of(n);
        for (std::size_t b = 0; b < bp.classes.size(); ++b) {
            if (bp.classes[b].size() > 1) ++nonzero;
            for (int v : bp.classes[b]) block_of[v] = static_cast<int>(b);
        }
        if (static_cast<int>(fb.basis.size()) != nonzero) return false;

        for (const QMat& omega : fb.basis)
            for (int w = 0; w < 5; ++w)
                if (!pullback_verify(omega, Z, random_word(rng, Z, 4), 2, rng)) return false;

        // Perturb one pair with both ends in nonzero blocks to leave the span.
        QMat base = fb.basis.empty() ? qmat_zero(n, n) : fb.basis[0];
        bool found = false;
        for (int a = 0; a < n && !found; ++a) {
            if (bp.classes[block_of[a]].size() == 1) continue;
            for (int b = a + 1; b < n && !found; ++b) {
                if (bp.classes[block_of[b]].size() == 1) continue;
                QMat cand = base;
                cand[a][b] += 1;
                cand[b][a] -= 1;
                if (in_span(fb.basis, cand, n)) continue;
                found = true;
                bool failed = false;
                for (int i = 0; i < n && !failed; ++i) {
                    if (bp.classes[block_of[i]].size() == 1) continue;
                    failed = !pullback_verify(cand, Z, std::vector<int>{i}, 3, rng);
                }
                if (!failed) return false;
            }
        }
    }
    return true;
}

// Criterion 4: reference exchange-matrix entries of the two small surfaces.
bool criterion4() {
    ExchangeMatrix zs = make_sphere(3).exchange_matrix();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (zs.at(i, j) != 0) return false;
    IdealTriangulation tor = make_torus(1);
    ExchangeMatrix zt = tor.exchange_matrix();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && abs(zt.at(i, j)) != 2) return false;
    return zt.at(tor.edge_index("h0"), tor.edge_index("u0")) == -2;
}

// Criterion 5: edge count 6g-6+3s on every builder and after flips.
bool criterion5() {
    Rng rng(5);
    for (const std::string& name : builder_names()) {
        IdealTriangulation t = make_surface(name);
        if (t.num_edges() != 6 * t.genus() - 6 + 3 * t.num_vertices()) return false;
        for (int trial = 0; trial < 5; ++trial) {
            IdealTriangulation cur = t;
            for (int e : random_flip_word(t, 6, rng)) cur = cur.flip(e, false);
            if (cur.num_edges() != 6 * cur.genus() - 6 + 3 * cur.num_vertices()) return false;
        }
    }
    return true;
}

// Criterion 6: corank = punctures and kernel = incidence image, on builders
// and after 50 random flip words each.
bool criterion6() {
    Rng rng(6);
    for (const std::string& name : builder_names()) {
        IdealTriangulation t = make_surface(name);
        if (!corank_check(t).agrees) return false;
        for (int trial = 0; trial < 50; ++trial) {
            IdealTriangulation cur = t;
            for (int e : random_flip_word(t, 8, rng)) cur = cur.flip(e, false);
            if (!corank_check(cur).agrees) return false;
        }
    }
    return true;
}

// Criterion 7: representative subsets are unicyclic with odd cycles and the
// complementary restriction is nondegenerate.
bool criterion7() {
    for (const std::string& name : builder_names()) {
        IdealTriangulation t = make_surface(name);
        RepresentativeSubset r = find_representative(t);
        if (static_cast<int>(r.edges.size()) != t.num_vertices()) return false;
        for (int c : r.cycle_lengths)
            if (c < 1 || c % 2 == 0) return false;
        if (!r.restricted_nondegenerate) return false;
    }
    return true;
}

// Criterion 8: the two-flip label and exponent reproduction.
bool criterion8() {
    IdealTriangulation t = make_torus(2);
    int d0 = t.edge_index("d0"), h0 = t.edge_index("h0");
    int u0 = t.edge_index("u0"), h1 = t.edge_index("h1");
    int E = t.num_edges();
    RationalFunction a = RationalFunction::variable(E, u0);
    RationalFunction b = RationalFunction::variable(E, h0);
    RationalFunction c = RationalFunction::variable(E, h1);
    RationalFunction d = RationalFunction::variable(E, d0);

    IdealTriangulation once = t.flip(d0);
    IdealTriangulation twice = once.flip(h0);
    if (once.labels()[d0] != (a * c + b * b) / d) return false;
    if (twice.labels()[h0] != (a * c * d * d + (a * c + b * b).pow(2)) / (b * d * d)) return false;

    if (once.labels()[d0].denominator_exponent(d0) != 1) return false;
    if (twice.labels()[h0].denominator_exponent(h0) != 1) return false;
    if (twice.labels()[h0].denominator_exponent(d0) != 2) return false;

    FlipTrace tr = track_flips(t, std::vector<int>{d0, h0});
    return tr.inter[d0][d0] == 1 && tr.inter[h0][h0] == 1 && tr.inter[h0][d0] == 2 &&
           tr.delta == tr.inter;
}

// Criterion 9: symbolic denominator exponents equal both tracked recurrences
// along 50 random words on each of the three surfaces.
bool criterion9() {
    Rng rng(9);
    for (const std::string& name : {std::string("torus1"), std::string("sphere4"),
                                    std::string("genus2_1")}) {
        IdealTriangulation t = make_surface(name);
        for (int trial = 0; trial < 50; ++trial) {
            if (!thm34_check(t, random_flip_word(t, 12, rng))) return false;
        }
    }
    return true;
}

// Criterion 10: structural properties — involutions, skew-symmetry, rank
// invariance, Laurentness, flip/mutation commutation, tau gauge invariance.
bool criterion10() {
    Rng rng(10);
    for (int iter = 0; iter < 10; ++iter) {
        int n = static_cast<int>(rand_int(rng, 2, 5));
        ExchangeMatrix Z = random_skew(rng, n, 2);
        int r = Z.rank();
        for (int i = 0; i < n; ++i) {
            ExchangeMatrix M = mutate_matrix(Z, i);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (M.at(a, b) != -M.at(b, a)) return false;
            if (mutate_matrix(M, i) != Z) return false;
            if (M.rank() != r) return false;
        }
        Seed s = initial_seed(Z);
        int i = static_cast<int>(rand_int(rng, 0, n - 1));
        Seed back = mutate_seed(mutate_seed(s, i), i);
        if (back.variables != s.variables || back.matrix != s.matrix) return false;

        Seed deep = apply_word(s, random_word(rng, Z, 8));
        for (const RationalFunction& f : deep.variables)
            if (!f.is_laurent()) return false;
    }

    for (const std::string& name : builder_names()) {
        IdealTriangulation t = make_surface(name);
        for (int e : allowed_flips(t))
            if (t.flip(e, false).exchange_matrix() != mutate_matrix(t.exchange_matrix(), e))
                return false;
        std::vector<Rat> values(t.num_edges());
        std::vector<Rat> lam(t.num_vertices());
        for (Rat& v : values) v = rand_pos_rat(rng);
        for (Rat& l : lam) l = rand_pos_rat(rng);
        if (tau_values(t, gauge_act(t, lam, values)) != tau_values(t, values)) return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool()> run;
    };
    std::vector<Criterion> criteria = {
        {"1 reference 3x3 mutations and mutated variable", criterion1},
        {"2 Poisson solver reference dimensions", criterion2},
        {"3 compatible-form basis and pullback on 100 random matrices", criterion3},
        {"4 reference surface exchange matrices", criterion4},
        {"5 edge count 6g-6+3s on builders and flips", criterion5},
        {"6 corank = punctures with matching kernels (50 words/surface)", criterion6},
        {"7 representative subsets: odd unicyclic, nondegenerate complement", criterion7},
        {"8 two-flip labels and exponents", criterion8},
        {"9 denominator = intersection recurrences (50 words/surface)", criterion9},
        {"10 structural properties battery", criterion10},
    };
    bool all = true;
    for (const Criterion& c : criteria) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cout << "criterion " << c.name << ": exception: " << e.what() << "\n";
        }
        std::cout << "criterion " << c.name << ": " << (ok ? "PASS" : "FAIL") << "\n";
        all = all && ok;
    }
    return all ? 0 : 1;
}
