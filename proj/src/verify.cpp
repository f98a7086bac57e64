#include "cwp/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cwp {

std::vector<Rat> gauge_act(const IdealTriangulation& t, const std::vector<Rat>& lambda,
                           const std::vector<Rat>& values) {
    if (static_cast<int>(lambda.size()) != t.num_vertices())
        throw std::invalid_argument("one scalar per puncture required");
    if (static_cast<int>(values.size()) != t.num_edges())
        throw std::invalid_argument("one value per edge required");
    for (const Rat& l : lambda)
        if (l <= 0) throw std::invalid_argument("nonpositive gauge scalar");
    for (const Rat& v : values)
        if (v <= 0) throw std::invalid_argument("nonpositive edge value");
    std::vector<Rat> out(values.size());
    for (int e = 0; e < t.num_edges(); ++e) {
        auto [p, q] = t.edge_endpoints(e);
        out[e] = lambda[p] * lambda[q] * values[e];
    }
    return out;
}

namespace {

Rat rat_pow(const Rat& base, long k) {
    if (k < 0) return 1 / rat_pow(base, -k);
    Rat acc(1);
    for (long i = 0; i < k; ++i) acc *= base;
    return acc;
}

long small_exponent(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("exponent out of range");
    return z.get_si();
}

}  // namespace

std::vector<Rat> tau_values(const IdealTriangulation& t, const std::vector<Rat>& values) {
    ExchangeMatrix Z = t.exchange_matrix();
    int E = t.num_edges();
    std::vector<Rat> tau(E, Rat(1));
    for (int e = 0; e < E; ++e)
        for (int k = 0; k < E; ++k) {
            long z = small_exponent(Z.at(e, k));
            if (z != 0) tau[e] *= rat_pow(values[k], z);
        }
    return tau;
}

CorankReport corank_check(const IdealTriangulation& t) {
    ExchangeMatrix Z = t.exchange_matrix();
    int E = t.num_edges();
    CorankReport rep;
    rep.rank = Z.rank();
    rep.corank = E - rep.rank;
    rep.punctures = t.num_vertices();
    rep.kernel_basis = Z.kernel_basis();
    for (int v = 0; v < t.num_vertices(); ++v) {
        QVec row(E, Rat(0));
        for (int e = 0; e < E; ++e) {
            auto [p, q] = t.edge_endpoints(e);
            if (p == v) row[e] += 1;
            if (q == v) row[e] += 1;
        }
        rep.incidence_image.push_back(std::move(row));
    }
    rep.agrees = rep.corank == rep.punctures && same_span(rep.kernel_basis, rep.incidence_image, E);
    return rep;
}

namespace {

struct SubgraphShape {
    std::vector<std::vector<int>> components;
    std::vector<int> cycle_lengths;
    bool ok;  // every component unicyclic with an odd cycle
};

// Component/cycle structure of the subgraph spanned by the edge set S.
SubgraphShape subgraph_shape(const IdealTriangulation& t, const std::vector<int>& S) {
    int V = t.num_vertices();
    std::vector<int> root(V);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (int e : S) {
        auto [p, q] = t.edge_endpoints(e);
        root[find(p)] = find(q);
    }
    std::map<int, std::vector<int>> by_comp;
    for (int e : S) by_comp[find(t.edge_endpoints(e).first)].push_back(e);

    SubgraphShape shape;
    shape.ok = true;
    for (auto& [r, edges] : by_comp) {
        std::map<int, int> degree;  // loops count twice
        for (int e : edges) {
            auto [p, q] = t.edge_endpoints(e);
            degree[p] += 1;
            degree[q] += 1;
        }
        // Unicyclic connected graph: #edges == #vertices.
        bool unicyclic = edges.size() == degree.size();
        int cycle_len = -1;
        if (unicyclic) {
            // Prune leaves; what survives is the unique cycle.
            std::vector<int> live = edges;
            bool changed = true;
            while (changed) {
                changed = false;
                for (auto it = live.begin(); it != live.end();) {
                    auto [p, q] = t.edge_endpoints(*it);
                    if (degree[p] == 1 || degree[q] == 1) {
                        degree[p] -= 1;
                        degree[q] -= 1;
                        it = live.erase(it);
                        changed = true;
                    } else {
                        ++it;
                    }
                }
            }
            cycle_len = static_cast<int>(live.size());
        }
        if (!unicyclic || cycle_len % 2 == 0) shape.ok = false;
        shape.components.push_back(edges);
        shape.cycle_lengths.push_back(cycle_len);
    }
    return shape;
}

// Rank of the puncture-by-edge weight matrix restricted to columns S.
int weight_rank(const IdealTriangulation& t, const std::vector<int>& S) {
    QMat m(t.num_vertices(), QVec(S.size(), Rat(0)));
    for (std::size_t c = 0; c < S.size(); ++c) {
        auto [p, q] = t.edge_endpoints(S[c]);
        m[p][c] += 1;
        m[q][c] += 1;
    }
    return rank_rat(m);
}

}  // namespace

RepresentativeSubset find_representative(const IdealTriangulation& t) {
    int E = t.num_edges();
    int s = t.num_vertices();
    for (int size = 1; size <= E; ++size) {
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            if (weight_rank(t, idx) == s) {
                SubgraphShape shape = subgraph_shape(t, idx);
                if (shape.ok) {
                    RepresentativeSubset out;
                    out.edges = idx;
                    out.components = shape.components;
                    out.cycle_lengths = shape.cycle_lengths;
                    for (int e = 0; e < E; ++e)
                        if (std::find(idx.begin(), idx.end(), e) == idx.end())
                            out.complement.push_back(e);
                    ExchangeMatrix Z = t.exchange_matrix();
                    std::vector<std::vector<Int>> sub;
                    for (int a : out.complement) {
                        std::vector<Int> row;
                        for (int b : out.complement) row.push_back(Z.at(a, b));
                        sub.push_back(std::move(row));
                    }
                    out.restricted_nondegenerate =
                        sub.empty() || bareiss_rank(sub) == static_cast<int>(sub.size());
                    return out;
                }
            }
            // Next combination in lex order.
            int i = size - 1;
            while (i >= 0 && idx[i] == E - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw std::logic_error("no representative subset found");
}

bool shear_tau_check(const IdealTriangulation& t) {
    if (!t.classify().perfect) throw std::domain_error("shear coordinates require a perfect triangulation");
    ExchangeMatrix Z = t.exchange_matrix();
    const auto& f = t.labels();
    int E = t.num_edges();
    int orientation = 0;  // +1: shear == tau, -1: shear == 1/tau; fixed by the first edge
    for (int e = 0; e < E; ++e) {
        QuadNeighbors q = t.quad_neighbors(e);
        RationalFunction shear = (f[q.e1] * f[q.e3]) / (f[q.e2] * f[q.e4]);
        RationalFunction tau = RationalFunction::one(f[0].arity());
        for (int k = 0; k < E; ++k) {
            long z = small_exponent(Z.at(e, k));
            if (z != 0) tau = tau * f[k].pow(z);
        }
        if (orientation >= 0 && shear == tau) {
            orientation = 1;
        } else if (orientation <= 0 && shear == tau.inv()) {
            orientation = -1;
        } else {
            return false;
        }
    }
    return true;
}

namespace {

std::vector<int> inter_row_update(const std::vector<std::vector<int>>& m, const QuadNeighbors& q,
                                  int p) {
    std::size_t n = m[p].size();
    std::vector<int> out(n);
    for (std::size_t x = 0; x < n; ++x) {
        int ac = m[q.e1][x] + m[q.e3][x];
        int bd = m[q.e2][x] + m[q.e4][x];
        out[x] = std::max(ac, bd) - m[p][x];
    }
    return out;
}

std::vector<int> delta_row_update(const std::vector<std::vector<int>>& m, const QuadNeighbors& q,
                                  int p) {
    std::size_t n = m[p].size();
    std::vector<int> out(n);
    for (std::size_t x = 0; x < n; ++x) {
        int first = m[q.e1][x] + m[q.e3][x];
        int second = m[q.e2][x] + m[q.e4][x];
        out[x] = (first > second ? first : second) - m[p][x];
    }
    return out;
}

std::vector<std::vector<int>> negative_identity(int n) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = -1;
    return m;
}

}  // namespace

FlipTrace track_flips(const IdealTriangulation& t, std::span<const int> word) {
    int E = t.num_edges();
    FlipTrace tr;
    tr.inter = negative_identity(E);
    tr.delta = negative_identity(E);
    IdealTriangulation cur = t;
    for (int e : word) {
        QuadNeighbors q = cur.quad_neighbors(e);
        if (!cur.flip_allowed(e)) throw std::domain_error("disallowed flip in word");
        tr.inter[e] = inter_row_update(tr.inter, q, e);
        tr.delta[e] = delta_row_update(tr.delta, q, e);
        cur = cur.flip(e, true);
        tr.word.push_back(e);
    }
    tr.seed_vars = cur.labels();
    return tr;
}

bool thm34_check(const IdealTriangulation& t, std::span<const int> word) {
    int E = t.num_edges();
    std::vector<std::vector<int>> inter = negative_identity(E);
    std::vector<std::vector<int>> delta = negative_identity(E);
    IdealTriangulation cur = t;
    std::vector<int> done;
    for (int e : word) {
        QuadNeighbors q = cur.quad_neighbors(e);
        inter[e] = inter_row_update(inter, q, e);
        delta[e] = delta_row_update(delta, q, e);
        cur = cur.flip(e, true);
        for (int p = 0; p < E; ++p) {
            for (int x = 0; x < E; ++x) {
                long d = cur.labels()[p].denominator_exponent(x);
                if (d != inter[p][x] || d != delta[p][x]) return false;
            }
        }
    }
    return true;
}

}  // namespace cwp
