// generators.hpp — Antisymmetric SO(N) generator sets and pair indexing.

#pragma once

#include "qconc/state.hpp"

#include <stdexcept>
#include <vector>

namespace qconc {

// Number of index pairs i < j in dimension n.
constexpr Index pair_count(Index n) { return n * (n - 1) / 2; }

// Lexicographic rank of the pair (i, j), i < j:
// (0,1), (0,2), ..., (0,n-1), (1,2), ...
constexpr Index pair_rank(Index i, Index j, Index n) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Inverse of pair_rank.
inline std::pair<Index, Index> pair_from_rank(Index rank, Index n) {
    if (rank < 0 || rank >= pair_count(n))
        throw std::out_of_range("pair_from_rank: rank out of range");
    Index i = 0;
    Index row = n - 1;  // pairs with first index i
    while (rank >= row) {
        rank -= row;
        --row;
        ++i;
    }
    return {i, i + 1 + rank};
}

// The n(n-1)/2 antisymmetric generators L with entries +1 at (i, j) and -1 at
// (j, i), ordered lexicographically in (i, j). The +-1 scale is the one under
// which the generator-pair sum of the inverter superoperator reproduces its
// closed form exactly.
template <class Real>
struct BasicGeneratorSet {
    Index dim = 0;
    std::vector<MatrixR<Real>> generators;
};

using GeneratorSet = BasicGeneratorSet<double>;

template <class Real = double>
BasicGeneratorSet<Real> generator_set(Index n) {
    if (n < 2) throw std::invalid_argument("generator_set: dimension must be >= 2");
    BasicGeneratorSet<Real> g;
    g.dim = n;
    g.generators.reserve(static_cast<std::size_t>(pair_count(n)));
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            MatrixR<Real> L = MatrixR<Real>::Zero(n, n);
            L(i, j) = Real(1);
            L(j, i) = Real(-1);
            g.generators.push_back(std::move(L));
        }
    }
    return g;
}

}  // namespace qconc
