#pragma once

#include "cwp/exchange.hpp"

namespace cwp {

/// Basis of coefficient matrices of 2-forms compatible with the cluster
/// algebra of Z: one element Lambda_b * Z per nonzero block b of the support
/// graph. Zero blocks contribute nothing to the span and are reported
/// separately.
struct FormBasis {
    std::vector<QMat> basis;
    int zero_blocks;
    int r;  // total number of blocks of Z
};

FormBasis compatible_form_basis(const ExchangeMatrix& Z);

/// Coefficient-matrix transport of a log-canonical 2-form under one
/// mutation: row/column i flips sign, and mixed-sign pairs pick up the
/// correction term; output is skew-symmetrized.
QMat mutate_form_matrix(const QMat& omega, const ExchangeMatrix& Z, int i);

/// Exact check that the 2-form with coefficients `omega` in the initial
/// chart has coefficients `mutated omega` in the chart reached by `word`:
/// evaluates both expressions on random positive points and random tangent
/// pairs and compares exactly.
bool pullback_verify(const QMat& omega, const ExchangeMatrix& Z, std::span<const int> word,
                     int trials, Rng& rng);

/// Basis of the space of skew coefficient matrices (p_ij) for which the
/// bracket {f_j,f_k} = p_jk f_j f_k stays log-canonical across every
/// one-step mutation. Random samples prune the candidate space; the result
/// is confirmed symbolically.
std::vector<QMat> solve_poisson_star(const ExchangeMatrix& Z, Rng& rng);

/// Coefficient matrix (lambda * z_ij) for i,j in I of the dual Poisson
/// structure on independent tau-coordinates.
QMat wp_poisson_tau(const ExchangeMatrix& Z, const Rat& lambda, std::span<const int> I);

}  // namespace cwp
