#include "cwp/exchange.hpp"

namespace cwp {

ExchangeMatrix::ExchangeMatrix(std::vector<std::vector<Int>> entries)
    : n_(static_cast<int>(entries.size())), z_(std::move(entries)) {
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(z_[i].size()) != n_) throw std::invalid_argument("not square");
        for (int j = 0; j < n_; ++j)
            if (z_[i][j] != -z_[j][i]) throw std::invalid_argument("not skew-symmetric");
    }
}

int ExchangeMatrix::rank() const { return bareiss_rank(z_); }

QMat ExchangeMatrix::to_qmat() const {
    QMat m(n_, QVec(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m[i][j] = Rat(z_[i][j]);
    return m;
}

std::vector<QVec> ExchangeMatrix::kernel_basis() const { return nullspace_rat(to_qmat()); }

ExchangeMatrix mutate_matrix(const ExchangeMatrix& Z, int i) {
    int n = Z.n();
    if (i < 0 || i >= n) throw std::out_of_range("mutation index");
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            if (k == i || l == i) {
                m[k][l] = -Z.at(k, l);
            } else {
                m[k][l] = Z.at(k, l) + (abs(Z.at(k, i)) * Z.at(i, l) + Z.at(k, i) * abs(Z.at(i, l))) / 2;
            }
        }
    }
    return ExchangeMatrix(std::move(m));
}

BlockPartition block_partition(const ExchangeMatrix& Z) {
    int n = Z.n();
    std::vector<int> comp(n, -1);
    int r = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = r;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (comp[v] < 0 && Z.at(u, v) != 0) {
                    comp[v] = r;
                    stack.push_back(v);
                }
            }
        }
        ++r;
    }
    BlockPartition bp;
    bp.classes.resize(r);
    for (int v = 0; v < n; ++v) bp.classes[comp[v]].push_back(v);
    bp.r = r;
    return bp;
}

Seed initial_seed(const ExchangeMatrix& Z) {
    int n = Z.n();
    std::vector<RationalFunction> vars;
    vars.reserve(n);
    for (int i = 0; i < n; ++i) vars.push_back(RationalFunction::variable(n, i));
    return Seed{Z, std::move(vars), {}};
}

namespace {

long exponent_as_long(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("exchange exponent out of range");
    return z.get_si();
}

}  // namespace

Seed mutate_seed(const Seed& s, int i) {
    int n = s.matrix.n();
    if (i < 0 || i >= n) throw std::out_of_range("mutation index");
    if (s.variables[i].is_zero()) throw std::domain_error("zero cluster variable");

    RationalFunction pos = RationalFunction::one(n);
    RationalFunction neg = RationalFunction::one(n);
    for (int k = 0; k < n; ++k) {
        long z = exponent_as_long(s.matrix.at(i, k));
        if (z > 0) pos = pos * s.variables[k].pow(z);
        if (z < 0) neg = neg * s.variables[k].pow(-z);
    }
    RationalFunction replaced = (pos + neg) / s.variables[i];
    if (!replaced.is_laurent())
        throw std::logic_error("Laurent phenomenon violated by mutation result");

    Seed out{mutate_matrix(s.matrix, i), s.variables, s.history};
    out.variables[i] = std::move(replaced);
    out.history.push_back(i);
    return out;
}

Seed apply_word(const Seed& s, std::span<const int> word) {
    Seed cur = s;
    for (int i : word) cur = mutate_seed(cur, i);
    return cur;
}

std::vector<RationalFunction> tau_tuple(const Seed& s) {
    int n = s.matrix.n();
    std::vector<RationalFunction> tau;
    tau.reserve(n);
    for (int j = 0; j < n; ++j) {
        RationalFunction t = RationalFunction::one(n);
        for (int k = 0; k < n; ++k) {
            long z = exponent_as_long(s.matrix.at(j, k));
            if (z != 0) t = t * s.variables[k].pow(z);
        }
        tau.push_back(std::move(t));
    }
    return tau;
}

std::vector<int> select_nondegenerate_rows(const ExchangeMatrix& Z) {
    int n = Z.n();
    std::vector<int> chosen;
    std::vector<std::vector<Int>> rows;
    for (int i = 0; i < n; ++i) {
        rows.push_back(Z.entries()[i]);
        if (bareiss_rank(rows) == static_cast<int>(rows.size())) {
            chosen.push_back(i);
        } else {
            rows.pop_back();
        }
    }
    return chosen;
}

}  // namespace cwp
