#include "qconc/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qconc {

std::uint64_t SplitMix64::next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below: n must be positive");
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % n;
}

double SplitMix64::next_normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = next_double_open();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t stream) {
    // One finalizer round separates neighbouring stream indices.
    std::uint64_t z = stream + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return SplitMix64(seed ^ z);
}

Vector random_unit_vector(Index dim, SplitMix64& rng) {
    if (dim < 1) throw std::invalid_argument("random_unit_vector: dim must be >= 1");
    Vector v(dim);
    double sq = 0;
    do {
        for (Index k = 0; k < dim; ++k) v(k) = rng.next_complex_normal();
        sq = v.squaredNorm();
    } while (!(sq > 1e-12));
    return v / std::sqrt(sq);
}

PureState random_pure_state(Index n1, Index n2, SplitMix64& rng) {
    if (n1 < 2 || n2 < 2)
        throw std::invalid_argument("random_pure_state: dims must be >= 2");
    return PureState(n1, n2, random_unit_vector(n1 * n2, rng));
}

Vector random_coefficients(Index m, SplitMix64& rng) { return random_unit_vector(m, rng); }

Matrix random_unitary(Index n, SplitMix64& rng) {
    Matrix g(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) g(i, j) = rng.next_complex_normal();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index k = 0; k < n; ++k) {
        const Complex d = r(k, k);
        if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
    }
    return q;
}

namespace {

// Ranks in {1, 2} summing to at most `budget`, one per state; later states
// shrink to rank 1 when the budget runs low.
std::vector<Index> draw_ranks(int m, Index budget, SplitMix64& rng) {
    std::vector<Index> ranks(static_cast<std::size_t>(m), 1);
    Index left = budget - m;  // beyond the reserved rank-1 slots
    for (auto& r : ranks) {
        if (left >= 1 && rng.next_bit()) {
            r = 2;
            --left;
        }
    }
    return ranks;
}

// Haar state supported on rows [row0, row0+ra) and columns [col0, col0+rb).
PureState block_state(Index n1, Index n2, Index row0, Index ra, Index col0, Index rb,
                      SplitMix64& rng) {
    const Vector sub = random_unit_vector(ra * rb, rng);
    Vector v = Vector::Zero(n1 * n2);
    for (Index i = 0; i < ra; ++i)
        for (Index j = 0; j < rb; ++j)
            v(flat_index(row0 + i, col0 + j, n2)) = sub(flat_index(i, j, rb));
    return PureState(n1, n2, std::move(v));
}

std::vector<PureState> draw_biorthogonal(Index n1, Index n2, int m, SplitMix64& rng) {
    const auto ranks = draw_ranks(m, std::min(n1, n2), rng);
    std::vector<PureState> out;
    out.reserve(static_cast<std::size_t>(m));
    Index off = 0;
    for (const Index r : ranks) {
        out.push_back(block_state(n1, n2, off, r, off, r, rng));
        off += r;
    }
    return out;
}

std::vector<PureState> draw_one_sided_a(Index n1, Index n2, int m, SplitMix64& rng) {
    const auto ranks = draw_ranks(m, n1, rng);
    std::vector<PureState> out;
    out.reserve(static_cast<std::size_t>(m));
    Index off = 0;
    for (const Index r : ranks) {
        out.push_back(block_state(n1, n2, off, r, 0, n2, rng));  // shared B support
        off += r;
    }
    return out;
}

std::vector<PureState> draw_orthogonal(Index n1, Index n2, int m, SplitMix64& rng) {
    std::vector<Vector> basis;
    basis.reserve(static_cast<std::size_t>(m));
    while (basis.size() < static_cast<std::size_t>(m)) {
        Vector v = random_unit_vector(n1 * n2, rng);
        for (const Vector& q : basis) v -= q.dot(v) * q;
        const double res = v.norm();
        if (res < 1e-8) continue;  // linearly dependent draw
        basis.push_back(v / res);
    }
    std::vector<PureState> out;
    out.reserve(basis.size());
    for (Vector& v : basis) out.emplace_back(n1, n2, std::move(v));
    return out;
}

std::vector<PureState> draw_arbitrary(Index n1, Index n2, int m, SplitMix64& rng) {
    std::vector<PureState> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) out.push_back(random_pure_state(n1, n2, rng));
    return out;
}

}  // namespace

bool class_set_feasible(OrthoClass target, Index n1, Index n2, int m) {
    if (m < 1 || n1 < 2 || n2 < 2) return false;
    switch (target) {
        case OrthoClass::Biorthogonal: return m <= std::min(n1, n2);
        case OrthoClass::OneSidedA: return m <= n1;
        case OrthoClass::OneSidedB: return m <= n2;
        case OrthoClass::Orthogonal: return m <= n1 * n2;
        case OrthoClass::Arbitrary: return true;
    }
    return false;
}

std::vector<PureState> random_class_set(OrthoClass target, Index n1, Index n2, int m,
                                        SplitMix64& rng) {
    if (!class_set_feasible(target, n1, n2, m))
        throw std::invalid_argument("random_class_set: infeasible request for class " +
                                    to_string(target));
    for (int attempt = 0; attempt < 128; ++attempt) {
        std::vector<PureState> out;
        switch (target) {
            case OrthoClass::Biorthogonal: out = draw_biorthogonal(n1, n2, m, rng); break;
            case OrthoClass::OneSidedA: out = draw_one_sided_a(n1, n2, m, rng); break;
            case OrthoClass::OneSidedB: {
                // Build on the swapped system, then swap back.
                std::vector<PureState> swapped = draw_one_sided_a(n2, n1, m, rng);
                out.reserve(swapped.size());
                for (const PureState& s : swapped)
                    out.push_back(state_from_matrix<double>(s.coefficient_matrix().transpose()));
                break;
            }
            case OrthoClass::Orthogonal: out = draw_orthogonal(n1, n2, m, rng); break;
            case OrthoClass::Arbitrary: out = draw_arbitrary(n1, n2, m, rng); break;
        }
        if (m == 1) return out;
        if (classify_set(out) == target) return out;
        // Accidentally stronger (or, for one-sided targets, accidentally
        // biorthogonal): redraw.
    }
    throw std::runtime_error("random_class_set: could not hit target class");
}

}  // namespace qconc
