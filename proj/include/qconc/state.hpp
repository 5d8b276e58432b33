// state.hpp — Bipartite pure states on C^{N1} x C^{N2}: flat tensor indexing,
// inner products, Schmidt decomposition, reduced and cross density operators.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace qconc {

template <class Real>
using MatrixC = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using VectorC = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <class Real>
using MatrixR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using VectorR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Matrix  = MatrixC<double>;
using Vector  = VectorC<double>;
using Complex = std::complex<double>;
using Index   = Eigen::Index;

// |i>_A ⊗ |j>_B sits at amplitude slot i*dim_b + j. Every module uses this
// convention; nothing else may flatten tensor indices.
constexpr Index flat_index(Index i, Index j, Index dim_b) { return i * dim_b + j; }

// Normalization tolerance for states and coefficient vectors.
inline constexpr double kStateNormTol = 1e-12;
// Rank-counting threshold for Schmidt coefficients (double noise floor).
inline constexpr double kSchmidtThreshold = 1e-12;

// ----------------------------- PureState ------------------------------------

// Normalized pure state with explicit local dimensions. Construction
// renormalizes when the amplitudes are off by more than kStateNormTol and
// rejects degenerate input (zero vector, local dimension < 2).
template <class Real>
struct BasicPureState {
    using Scalar = std::complex<Real>;

    Index dim_a = 0;
    Index dim_b = 0;
    VectorC<Real> amplitudes;

    BasicPureState(Index n1, Index n2, VectorC<Real> amps)
        : dim_a(n1), dim_b(n2), amplitudes(std::move(amps)) {
        if (dim_a < 2 || dim_b < 2)
            throw std::invalid_argument("BasicPureState: local dimensions must be >= 2");
        if (amplitudes.size() != dim_a * dim_b)
            throw std::invalid_argument("BasicPureState: amplitude count must equal dim_a*dim_b");
        const Real sq = amplitudes.squaredNorm();
        if (!(sq > Real(1e-24)))
            throw std::invalid_argument("BasicPureState: amplitudes have (near-)zero norm");
        if (std::abs(sq - Real(1)) > Real(kStateNormTol))
            amplitudes /= std::sqrt(sq);
    }

    Index dim() const { return dim_a * dim_b; }
    Index index(Index i, Index j) const { return flat_index(i, j, dim_b); }
    Scalar amplitude(Index i, Index j) const { return amplitudes(index(i, j)); }

    // N1 x N2 coefficient matrix M with M(i, j) the amplitude of |i>_A|j>_B.
    MatrixC<Real> coefficient_matrix() const {
        using RowMajor =
            Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
        return Eigen::Map<const RowMajor>(amplitudes.data(), dim_a, dim_b);
    }
};

using PureState = BasicPureState<double>;

// Computational product basis state |i>_A|j>_B.
template <class Real = double>
BasicPureState<Real> basis_state(Index n1, Index n2, Index i, Index j) {
    if (i < 0 || i >= n1 || j < 0 || j >= n2)
        throw std::out_of_range("basis_state: index out of range");
    VectorC<Real> v = VectorC<Real>::Zero(n1 * n2);
    v(flat_index(i, j, n2)) = std::complex<Real>(1, 0);
    return BasicPureState<Real>(n1, n2, std::move(v));
}

// Product state from local vectors (normalized by the PureState constructor).
template <class Real>
BasicPureState<Real> product_state(const VectorC<Real>& a, const VectorC<Real>& b) {
    VectorC<Real> v(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i)
        for (Index j = 0; j < b.size(); ++j) v(flat_index(i, j, b.size())) = a(i) * b(j);
    return BasicPureState<Real>(a.size(), b.size(), std::move(v));
}

// State from its N1 x N2 coefficient matrix.
template <class Real>
BasicPureState<Real> state_from_matrix(const MatrixC<Real>& m) {
    VectorC<Real> v(m.rows() * m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) v(flat_index(i, j, m.cols())) = m(i, j);
    return BasicPureState<Real>(m.rows(), m.cols(), std::move(v));
}

// ----------------------------- inner product --------------------------------

template <class Real>
std::complex<Real> inner_product(const BasicPureState<Real>& x, const BasicPureState<Real>& y) {
    if (x.dim_a != y.dim_a || x.dim_b != y.dim_b)
        throw std::invalid_argument("inner_product: dimension mismatch");
    return x.amplitudes.dot(y.amplitudes);  // Eigen conjugates the left factor
}

// ----------------------------- DensityOperator ------------------------------

// Square operator on one subsystem (or the joint space). Not restricted to
// trace one or to Hermitian entries: cross operators such as Tr_B|phi><psi|
// live here as well. The trace is recorded at construction.
template <class Real>
struct BasicDensityOperator {
    MatrixC<Real> entries;
    std::complex<Real> trace{};

    BasicDensityOperator() = default;
    explicit BasicDensityOperator(MatrixC<Real> m) : entries(std::move(m)) {
        if (entries.rows() != entries.cols())
            throw std::invalid_argument("BasicDensityOperator: matrix must be square");
        trace = entries.trace();
    }

    Index dim() const { return entries.rows(); }

    bool is_hermitian(Real tol = Real(1e-12)) const {
        return (entries - entries.adjoint()).cwiseAbs().maxCoeff() <= tol;
    }
};

using DensityOperator = BasicDensityOperator<double>;

// Tr_B |y><x| as an N1 x N1 operator; with x = y this is the reduced state
// rho_A. Entry (i, i') = sum_j y(i,j) conj(x(i',j)).
template <class Real>
BasicDensityOperator<Real> partial_trace_a(const BasicPureState<Real>& x,
                                           const BasicPureState<Real>& y) {
    if (x.dim_a != y.dim_a || x.dim_b != y.dim_b)
        throw std::invalid_argument("partial_trace_a: dimension mismatch");
    const MatrixC<Real> X = x.coefficient_matrix();
    const MatrixC<Real> Y = y.coefficient_matrix();
    return BasicDensityOperator<Real>(Y * X.adjoint());
}

// Tr_A |y><x| as an N2 x N2 operator; with x = y this is rho_B.
template <class Real>
BasicDensityOperator<Real> partial_trace_b(const BasicPureState<Real>& x,
                                           const BasicPureState<Real>& y) {
    if (x.dim_a != y.dim_a || x.dim_b != y.dim_b)
        throw std::invalid_argument("partial_trace_b: dimension mismatch");
    const MatrixC<Real> X = x.coefficient_matrix();
    const MatrixC<Real> Y = y.coefficient_matrix();
    return BasicDensityOperator<Real>(Y.transpose() * X.conjugate());
}

// Matrix-level partial traces for operators on the joint space.
template <class Derived>
auto partial_trace_a(const Eigen::MatrixBase<Derived>& sigma, Index n1, Index n2) {
    using Scalar = typename Derived::Scalar;
    if (sigma.rows() != n1 * n2 || sigma.cols() != n1 * n2)
        throw std::invalid_argument("partial_trace_a: size mismatch with dims");
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n1, n1);
    for (Index i = 0; i < n1; ++i)
        for (Index k = 0; k < n1; ++k)
            for (Index j = 0; j < n2; ++j)
                out(i, k) += sigma(flat_index(i, j, n2), flat_index(k, j, n2));
    return out;
}

template <class Derived>
auto partial_trace_b(const Eigen::MatrixBase<Derived>& sigma, Index n1, Index n2) {
    using Scalar = typename Derived::Scalar;
    if (sigma.rows() != n1 * n2 || sigma.cols() != n1 * n2)
        throw std::invalid_argument("partial_trace_b: size mismatch with dims");
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n2, n2);
    for (Index j = 0; j < n2; ++j)
        for (Index l = 0; l < n2; ++l)
            for (Index i = 0; i < n1; ++i)
                out(j, l) += sigma(flat_index(i, j, n2), flat_index(i, l, n2));
    return out;
}

// ----------------------------- Schmidt form ----------------------------------

// Schmidt data of a state: descending coefficients, orthonormal local bases
// (columns), and the count of coefficients above the rank threshold.
template <class Real>
struct BasicSchmidtForm {
    Index dim_a = 0;
    Index dim_b = 0;
    VectorR<Real> coefficients;  // length min(dim_a, dim_b), sorted descending
    MatrixC<Real> basis_a;       // dim_a x min, column k = |e_k>
    MatrixC<Real> basis_b;       // dim_b x min, column k = |f_k>
    Index rank = 0;
};

using SchmidtForm = BasicSchmidtForm<double>;

// SVD of the coefficient matrix. Column phases are fixed so that the
// largest-magnitude entry of each left vector is real positive, which makes
// the output deterministic away from degenerate coefficients.
template <class Real>
BasicSchmidtForm<Real> schmidt_decompose(const BasicPureState<Real>& s,
                                         Real threshold = Real(kSchmidtThreshold)) {
    if (threshold < Real(0))
        throw std::invalid_argument("schmidt_decompose: threshold must be >= 0");
    Eigen::JacobiSVD<MatrixC<Real>> svd(s.coefficient_matrix(),
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
    BasicSchmidtForm<Real> f;
    f.dim_a = s.dim_a;
    f.dim_b = s.dim_b;
    f.coefficients = svd.singularValues();
    f.basis_a = svd.matrixU();
    f.basis_b = svd.matrixV().conjugate();
    for (Index k = 0; k < f.coefficients.size(); ++k) {
        Index imax = 0;
        f.basis_a.col(k).cwiseAbs().maxCoeff(&imax);
        const std::complex<Real> entry = f.basis_a(imax, k);
        if (std::abs(entry) > Real(0)) {
            const std::complex<Real> phase = entry / std::abs(entry);
            f.basis_a.col(k) *= std::conj(phase);
            f.basis_b.col(k) *= phase;
        }
        if (f.coefficients(k) > threshold) f.rank = k + 1;
    }
    return f;
}

// Rebuild sum_k lambda_k |e_k>|f_k>; reproduces the source state up to
// numerical noise (phases were already fixed per column pair).
template <class Real>
BasicPureState<Real> reassemble(const BasicSchmidtForm<Real>& f) {
    VectorC<Real> v = VectorC<Real>::Zero(f.dim_a * f.dim_b);
    for (Index k = 0; k < f.coefficients.size(); ++k)
        for (Index i = 0; i < f.dim_a; ++i)
            for (Index j = 0; j < f.dim_b; ++j)
                v(flat_index(i, j, f.dim_b)) +=
                    f.coefficients(k) * f.basis_a(i, k) * f.basis_b(j, k);
    return BasicPureState<Real>(f.dim_a, f.dim_b, std::move(v));
}

}  // namespace qconc
