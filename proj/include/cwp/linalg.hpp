#pragma once

#include <vector>

#include "cwp/numeric.hpp"

namespace cwp {

using QMat = std::vector<std::vector<Rat>>;
using QVec = std::vector<Rat>;

QMat qmat_zero(int rows, int cols);

/// Rank by exact Gaussian elimination over the rationals.
int rank_rat(QMat m);

/// Basis of the right nullspace { x : m x = 0 }.
std::vector<QVec> nullspace_rat(const QMat& m);

/// Determinant of a square matrix, exact.
Rat det_rat(QMat m);

/// Fraction-free (Bareiss) rank of an integer matrix.
int bareiss_rank(std::vector<std::vector<Int>> m);

/// True when the row spans of a and b coincide as subspaces of Q^n.
bool same_span(const std::vector<QVec>& a, const std::vector<QVec>& b, int n);

bool is_skew_symmetric(const QMat& m);

}  // namespace cwp
