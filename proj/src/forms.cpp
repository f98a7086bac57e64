#include "cwp/forms.hpp"

#include <algorithm>

namespace cwp {

FormBasis compatible_form_basis(const ExchangeMatrix& Z) {
    int n = Z.n();
    BlockPartition bp = block_partition(Z);
    FormBasis out{{}, 0, bp.r};
    for (const auto& cls : bp.classes) {
        bool zero_block = cls.size() == 1;
        if (zero_block) {
            ++out.zero_blocks;
            continue;
        }
        QMat m = qmat_zero(n, n);
        for (int a : cls)
            for (int b : cls) m[a][b] = Rat(Z.at(a, b));
        out.basis.push_back(std::move(m));
    }
    return out;
}

QMat mutate_form_matrix(const QMat& omega, const ExchangeMatrix& Z, int i) {
    int n = Z.n();
    if (static_cast<int>(omega.size()) != n) throw std::invalid_argument("size mismatch");
    if (i < 0 || i >= n) throw std::out_of_range("mutation index");
    QMat w = omega;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (j == i || k == i) continue;
            if (Z.at(i, j) > 0 && Z.at(i, k) < 0) {
                w[j][k] = omega[j][k] + omega[i][k] * Rat(Z.at(i, j));
            } else if (Z.at(i, j) < 0 && Z.at(i, k) > 0) {
                w[j][k] = omega[j][k] - omega[i][j] * Rat(Z.at(i, k));
            }
        }
    }
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        w[i][j] = -omega[i][j];
        w[j][i] = -omega[j][i];
    }
    w[i][i] = 0;
    // Skew-symmetrize.
    QMat out = qmat_zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out[j][k] = (w[j][k] - w[k][j]) / 2;
    return out;
}

namespace {

// Value of the 2-form with coefficients `om` in the chart `vars` on the
// tangent pair (u, v) at the point x, all exact.
Rat form_value(const QMat& om, const std::vector<RationalFunction>& vars,
               const std::vector<std::vector<RationalFunction>>& partials,
               const std::vector<Rat>& x, const std::vector<Rat>& u, const std::vector<Rat>& v) {
    int n = static_cast<int>(vars.size());
    QVec a(n), b(n);
    for (int j = 0; j < n; ++j) {
        Rat fj = vars[j].eval(x);
        if (fj == 0) throw std::domain_error("evaluation pole");
        Rat au(0), av(0);
        for (int l = 0; l < n; ++l) {
            if (partials[j][l].is_zero()) continue;
            Rat d = partials[j][l].eval(x);
            au += d * u[l];
            av += d * v[l];
        }
        a[j] = au / fj;
        b[j] = av / fj;
    }
    Rat val(0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (om[j][k] != 0) val += om[j][k] * (a[j] * b[k] - a[k] * b[j]);
    return val;
}

}  // namespace

bool pullback_verify(const QMat& omega, const ExchangeMatrix& Z, std::span<const int> word,
                     int trials, Rng& rng) {
    int n = Z.n();
    Seed barred = apply_word(initial_seed(Z), word);
    QMat om_bar = omega;
    ExchangeMatrix zc = Z;
    for (int i : word) {
        om_bar = mutate_form_matrix(om_bar, zc, i);
        zc = mutate_matrix(zc, i);
    }

    std::vector<RationalFunction> identity;
    std::vector<std::vector<RationalFunction>> id_partials(n), bar_partials(n);
    for (int j = 0; j < n; ++j) {
        identity.push_back(RationalFunction::variable(n, j));
        for (int l = 0; l < n; ++l) {
            id_partials[j].push_back(identity[j].partial(l));
            bar_partials[j].push_back(barred.variables[j].partial(l));
        }
    }

    for (int t = 0; t < trials; ++t) {
        for (int attempt = 0;; ++attempt) {
            std::vector<Rat> x(n), u(n), v(n);
            for (int l = 0; l < n; ++l) {
                x[l] = rand_pos_rat(rng);
                u[l] = rand_rat(rng);
                v[l] = rand_rat(rng);
            }
            try {
                Rat lhs = form_value(omega, identity, id_partials, x, u, v);
                Rat rhs = form_value(om_bar, barred.variables, bar_partials, x, u, v);
                if (lhs != rhs) return false;
                break;
            } catch (const std::domain_error&) {
                if (attempt >= 20) throw;
            }
        }
    }
    return true;
}

namespace {

// Contribution of the elementary bracket p_kl = 1 (p_lk = -1) to {A, B}:
// (d_k A d_l B - d_l A d_k B) x_k x_l.
RationalFunction elementary_bracket(const RationalFunction& A, const RationalFunction& B, int k,
                                    int l) {
    int n = A.arity();
    RationalFunction xkxl = RationalFunction::variable(n, k) * RationalFunction::variable(n, l);
    return (A.partial(k) * B.partial(l) - A.partial(l) * B.partial(k)) * xkxl;
}

RationalFunction rf_from_rat(int arity, const Rat& q) {
    return RationalFunction(LaurentPoly::constant(arity, q.get_num()),
                            LaurentPoly::constant(arity, q.get_den()));
}

}  // namespace

std::vector<QMat> solve_poisson_star(const ExchangeMatrix& Z, Rng& rng) {
    int n = Z.n();
    std::vector<std::pair<int, int>> unknowns;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) unknowns.emplace_back(k, l);
    int m = static_cast<int>(unknowns.size());

    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    std::vector<Rat> x0(n);
    for (int i = 0; i < n; ++i) x0[i] = Rat(primes[i % 8]);

    Seed seed0 = initial_seed(Z);

    // For each one-step mutation i and each pair involving the mutated
    // variable, W_u = B_u - c_u * G must vanish when contracted with p
    // (pairs of unchanged variables are log-canonical by definition).
    std::vector<std::vector<RationalFunction>> W_rows;
    for (int i = 0; i < n; ++i) {
        Seed si = mutate_seed(seed0, i);
        for (int b = 0; b < n; ++b) {
            if (b == i) continue;
            const RationalFunction& A = si.variables[i];
            const RationalFunction& B = si.variables[b];
            RationalFunction G = A * B;
            Rat gval = G.eval(x0);
            std::vector<RationalFunction> row;
            for (auto [k, l] : unknowns) {
                RationalFunction Bkl = elementary_bracket(A, B, k, l);
                Rat c = Bkl.eval(x0) / gval;
                row.push_back(Bkl - rf_from_rat(n, c) * G);
            }
            W_rows.push_back(std::move(row));
        }
    }

    // Sampled constraints prune the candidate space.
    QMat sampled;
    for (int t = 0; t < 10; ++t) {
        std::vector<Rat> x(n);
        for (int i = 0; i < n; ++i) x[i] = rand_pos_rat(rng);
        for (const auto& row : W_rows) {
            QVec eq(m);
            for (int u = 0; u < m; ++u) eq[u] = row[u].eval(x);
            sampled.push_back(std::move(eq));
        }
    }
    std::vector<QVec> candidates =
        sampled.empty() ? std::vector<QVec>{} : nullspace_rat(sampled);
    if (sampled.empty()) {
        for (int u = 0; u < m; ++u) {
            QVec e(m, Rat(0));
            e[u] = 1;
            candidates.push_back(std::move(e));
        }
    }

    auto vanishes = [&](const QVec& p) {
        RationalFunction acc = RationalFunction::zero(n);
        for (const auto& row : W_rows) {
            acc = RationalFunction::zero(n);
            for (int u = 0; u < m; ++u)
                if (p[u] != 0) acc = acc + rf_from_rat(n, p[u]) * row[u];
            if (!acc.is_zero()) return false;
        }
        return true;
    };

    bool confirmed = std::all_of(candidates.begin(), candidates.end(), vanishes);
    if (!confirmed) {
        // Fall back to the full symbolic linear system: every W is a Laurent
        // polynomial, so clearing the monomial denominators gives one linear
        // equation per exponent vector.
        QMat equations;
        for (const auto& row : W_rows) {
            std::map<LaurentPoly::Exponents, QVec> eqs;
            for (int u = 0; u < m; ++u) {
                const RationalFunction& w = row[u];
                if (w.is_zero()) continue;
                if (!w.is_laurent()) throw std::logic_error("non-Laurent bracket residual");
                const auto& [dexp, dcoef] = w.den().leading_term();
                for (const auto& [e, c] : w.num().terms()) {
                    LaurentPoly::Exponents key(e.size());
                    for (std::size_t q = 0; q < e.size(); ++q)
                        key[q] = e[q] - dexp[static_cast<int>(q)];
                    auto [it, ins] = eqs.try_emplace(std::move(key), QVec(m, Rat(0)));
                    it->second[u] += Rat(c) / Rat(dcoef);
                }
            }
            for (auto& [e, eq] : eqs) equations.push_back(std::move(eq));
        }
        candidates = equations.empty() ? std::vector<QVec>{} : nullspace_rat(equations);
        if (equations.empty()) {
            candidates.clear();
            for (int u = 0; u < m; ++u) {
                QVec e(m, Rat(0));
                e[u] = 1;
                candidates.push_back(std::move(e));
            }
        }
        for (const auto& p : candidates)
            if (!vanishes(p)) throw std::logic_error("symbolic Poisson check failed");
    }

    std::vector<QMat> basis;
    for (const auto& p : candidates) {
        QMat mat = qmat_zero(n, n);
        for (int u = 0; u < m; ++u) {
            auto [k, l] = unknowns[u];
            mat[k][l] = p[u];
            mat[l][k] = -p[u];
        }
        basis.push_back(std::move(mat));
    }
    return basis;
}

QMat wp_poisson_tau(const ExchangeMatrix& Z, const Rat& lambda, std::span<const int> I) {
    std::vector<std::vector<Int>> rows;
    for (int i : I) {
        if (i < 0 || i >= Z.n()) throw std::out_of_range("row index");
        rows.push_back(Z.entries()[i]);
    }
    if (bareiss_rank(rows) != static_cast<int>(I.size()))
        throw std::invalid_argument("dependent rows in I");
    int k = static_cast<int>(I.size());
    QMat out = qmat_zero(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) out[a][b] = lambda * Rat(Z.at(I[a], I[b]));
    return out;
}

}  // namespace cwp
