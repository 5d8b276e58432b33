// concurrence.hpp — Concurrence vectors over SO(N1) x SO(N2) generator pairs,
// scalar concurrences by two independent routes, and the inverter
// superoperator S(sigma) = Tr(sigma) I - sigma_A ⊗ I - I ⊗ sigma_B + sigma.

#pragma once

#include "qconc/generators.hpp"
#include "qconc/state.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qconc {

// ----------------------------- concurrence vector ---------------------------

// Components C(a, b) = <x| L_a ⊗ L_b |y*>, a over A-side index pairs, b over
// B-side index pairs, both lexicographic. Symmetric in (x, y).
template <class Real>
struct BasicConcurrenceVector {
    Index dim_a = 0;
    Index dim_b = 0;
    MatrixC<Real> components;  // pair_count(dim_a) x pair_count(dim_b)

    Real norm() const { return components.norm(); }
};

using ConcurrenceVector = BasicConcurrenceVector<double>;

// Each L_a ⊗ L_b has four nonzero entries, so with X, Y the coefficient
// matrices and a = (i, j), b = (k, l):
//   C(a, b) = conj( X(i,k) Y(j,l) + X(j,l) Y(i,k) - X(i,l) Y(j,k) - X(j,k) Y(i,l) ).
// The expression is manifestly symmetric under X <-> Y.
template <class Real>
BasicConcurrenceVector<Real> concurrence_vector(const BasicPureState<Real>& x,
                                                const BasicPureState<Real>& y) {
    if (x.dim_a != y.dim_a || x.dim_b != y.dim_b)
        throw std::invalid_argument("concurrence_vector: dimension mismatch");
    const MatrixC<Real> X = x.coefficient_matrix();
    const MatrixC<Real> Y = y.coefficient_matrix();
    const Index n1 = x.dim_a;
    const Index n2 = x.dim_b;
    BasicConcurrenceVector<Real> cv;
    cv.dim_a = n1;
    cv.dim_b = n2;
    cv.components.resize(pair_count(n1), pair_count(n2));
    Index a = 0;
    for (Index i = 0; i < n1; ++i) {
        for (Index j = i + 1; j < n1; ++j, ++a) {
            Index b = 0;
            for (Index k = 0; k < n2; ++k) {
                for (Index l = k + 1; l < n2; ++l, ++b) {
                    cv.components(a, b) =
                        std::conj(X(i, k) * Y(j, l) + X(j, l) * Y(i, k) -
                                  X(i, l) * Y(j, k) - X(j, k) * Y(i, l));
                }
            }
        }
    }
    return cv;
}

template <class Real>
BasicConcurrenceVector<Real> concurrence_vector(const BasicPureState<Real>& x) {
    return concurrence_vector(x, x);
}

// Bilinear dot sum_{ab} u(a,b) v(a,b), no conjugation. This is the form whose
// cross terms vanish for biorthogonal and one-sided orthogonal states.
template <class Real>
std::complex<Real> concurrence_vector_dot(const BasicConcurrenceVector<Real>& u,
                                          const BasicConcurrenceVector<Real>& v) {
    if (u.components.rows() != v.components.rows() ||
        u.components.cols() != v.components.cols())
        throw std::invalid_argument("concurrence_vector_dot: shape mismatch");
    return (u.components.array() * v.components.array()).sum();
}

// ----------------------------- scalar concurrences ---------------------------

// Vector-norm route: C = sqrt(sum |C(a,b)|^2).
template <class Real>
Real concurrence(const BasicPureState<Real>& x) {
    return concurrence_vector(x, x).norm();
}

// Purity route: C = sqrt(2 (1 - Tr rho_A^2)). Agrees with the vector norm.
template <class Real>
Real concurrence_from_purity(const BasicPureState<Real>& x) {
    const MatrixC<Real> rho = partial_trace_a(x, x).entries;
    const Real purity = (rho * rho).trace().real();
    return std::sqrt(Real(2) * std::max(Real(0), Real(1) - purity));
}

// Pair concurrence C(x, y), vector-norm route.
template <class Real>
Real pair_concurrence(const BasicPureState<Real>& x, const BasicPureState<Real>& y) {
    return concurrence_vector(x, y).norm();
}

// Closed form C^2(x, y) = 1 + |<x|y>|^2 - Tr[rho_A^x rho_A^y] - Tr[rho_B^x rho_B^y].
template <class Real>
Real pair_concurrence_closed_form(const BasicPureState<Real>& x,
                                  const BasicPureState<Real>& y) {
    if (x.dim_a != y.dim_a || x.dim_b != y.dim_b)
        throw std::invalid_argument("pair_concurrence_closed_form: dimension mismatch");
    const Real overlap_sq = std::norm(inner_product(x, y));
    const Real trace_a =
        (partial_trace_a(x, x).entries * partial_trace_a(y, y).entries).trace().real();
    const Real trace_b =
        (partial_trace_b(x, x).entries * partial_trace_b(y, y).entries).trace().real();
    return std::sqrt(std::max(Real(0), Real(1) + overlap_sq - trace_a - trace_b));
}

// ----------------------------- universal inverter ----------------------------

// Closed form: S(sigma) = Tr(sigma) I ⊗ I - sigma_A ⊗ I - I ⊗ sigma_B + sigma.
template <class Real>
BasicDensityOperator<Real> universal_inverter(const BasicDensityOperator<Real>& sigma,
                                              Index n1, Index n2) {
    const MatrixC<Real>& s = sigma.entries;
    if (s.rows() != n1 * n2)
        throw std::invalid_argument("universal_inverter: size mismatch with dims");
    const MatrixC<Real> sa = partial_trace_a(s, n1, n2);
    const MatrixC<Real> sb = partial_trace_b(s, n1, n2);
    const MatrixC<Real> ia = MatrixC<Real>::Identity(n1, n1);
    const MatrixC<Real> ib = MatrixC<Real>::Identity(n2, n2);
    MatrixC<Real> out = s.trace() * MatrixC<Real>::Identity(n1 * n2, n1 * n2);
    out -= Eigen::kroneckerProduct(sa, ib);
    out -= Eigen::kroneckerProduct(ia, sb);
    out += s;
    return BasicDensityOperator<Real>(std::move(out));
}

// Generator-pair route: S(sigma) = sum_{ab} (L_a ⊗ L_b) sigma^T (L_a ⊗ L_b).
// Entrywise equal to the closed form for arbitrary square sigma.
template <class Real>
BasicDensityOperator<Real> universal_inverter_generator_sum(
    const BasicDensityOperator<Real>& sigma, Index n1, Index n2) {
    const MatrixC<Real>& s = sigma.entries;
    if (s.rows() != n1 * n2)
        throw std::invalid_argument("universal_inverter_generator_sum: size mismatch with dims");
    const BasicGeneratorSet<Real> ga = generator_set<Real>(n1);
    const BasicGeneratorSet<Real> gb = generator_set<Real>(n2);
    const MatrixC<Real> st = s.transpose();
    MatrixC<Real> out = MatrixC<Real>::Zero(n1 * n2, n1 * n2);
    for (const auto& la : ga.generators) {
        for (const auto& lb : gb.generators) {
            MatrixC<Real> sab =
                Eigen::kroneckerProduct(la, lb).template cast<std::complex<Real>>();
            out += sab * st * sab;
        }
    }
    return BasicDensityOperator<Real>(std::move(out));
}

}  // namespace qconc
