#include "cwp/linalg.hpp"

#include <algorithm>

namespace cwp {

QMat qmat_zero(int rows, int cols) {
    return QMat(rows, QVec(cols, Rat(0)));
}

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<int> row_echelon(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rat inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank_rat(QMat m) { return static_cast<int>(row_echelon(m).size()); }

std::vector<QVec> nullspace_rat(const QMat& m) {
    if (m.empty()) return {};
    int cols = static_cast<int>(m[0].size());
    QMat e = m;
    std::vector<int> pivots = row_echelon(e);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, Rat(0));
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat det_rat(QMat m) {
    int n = static_cast<int>(m.size());
    Rat det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i) {
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) return Rat(0);
        if (p != c) {
            std::swap(m[c], m[p]);
            det = -det;
        }
        det *= m[c][c];
        Rat inv = 1 / m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] * inv;
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

int bareiss_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    Int prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

bool same_span(const std::vector<QVec>& a, const std::vector<QVec>& b, int n) {
    QMat ma(a.begin(), a.end());
    QMat mb(b.begin(), b.end());
    for (auto& v : ma)
        if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector length");
    for (auto& v : mb)
        if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector length");
    int ra = ma.empty() ? 0 : rank_rat(ma);
    int rb = mb.empty() ? 0 : rank_rat(mb);
    if (ra != rb) return false;
    QMat stacked = ma;
    stacked.insert(stacked.end(), mb.begin(), mb.end());
    if (stacked.empty()) return true;
    return rank_rat(stacked) == ra;
}

bool is_skew_symmetric(const QMat& m) {
    int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n) return false;
        for (int j = 0; j < n; ++j)
            if (m[i][j] != -m[j][i]) return false;
    }
    return true;
}

}  // namespace cwp
