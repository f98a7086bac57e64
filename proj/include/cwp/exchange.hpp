#pragma once

#include <span>

#include "cwp/linalg.hpp"
#include "cwp/rational_function.hpp"

namespace cwp {

/// Skew-symmetric integer exchange matrix.
class ExchangeMatrix {
public:
    explicit ExchangeMatrix(std::vector<std::vector<Int>> entries);

    static ExchangeMatrix zero(int n) {
        return ExchangeMatrix(std::vector<std::vector<Int>>(n, std::vector<Int>(n, 0)));
    }

    int n() const { return n_; }
    const Int& at(int i, int j) const { return z_[i][j]; }
    const std::vector<std::vector<Int>>& entries() const { return z_; }

    bool operator==(const ExchangeMatrix& o) const { return z_ == o.z_; }
    bool operator!=(const ExchangeMatrix& o) const { return !(*this == o); }

    int rank() const;
    std::vector<QVec> kernel_basis() const;
    QMat to_qmat() const;

private:
    int n_;
    std::vector<std::vector<Int>> z_;
};

/// Matrix mutation in direction i.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& Z, int i);

struct BlockPartition {
    std::vector<std::vector<int>> classes;  // connected components of the support graph
    int r;                                  // number of classes
};

BlockPartition block_partition(const ExchangeMatrix& Z);

using MutationWord = std::vector<int>;

/// A seed: exchange matrix plus the cluster variables expressed in the
/// initial chart, with the mutation history that produced it.
struct Seed {
    ExchangeMatrix matrix;
    std::vector<RationalFunction> variables;
    MutationWord history;
};

Seed initial_seed(const ExchangeMatrix& Z);

/// Exchange relation: variable i is replaced by
/// (prod_{z_ik>0} f_k^{z_ik} + prod_{z_ik<0} f_k^{-z_ik}) / f_i,
/// empty products being 1. Asserts the result is Laurent.
Seed mutate_seed(const Seed& s, int i);

Seed apply_word(const Seed& s, std::span<const int> word);

/// tau_j = prod_k f_k^{z_jk}, from the seed's current variables and matrix.
std::vector<RationalFunction> tau_tuple(const Seed& s);

/// A maximal set of linearly independent rows, greedy by increasing index.
std::vector<int> select_nondegenerate_rows(const ExchangeMatrix& Z);

}  // namespace cwp
