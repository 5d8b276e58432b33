#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qconc/figure.hpp"
#include "qconc/random.hpp"
#include "qconc/state.hpp"

#include "test_util.hpp"

#include <cmath>

using namespace qconc;
using testutil::bell_phi_plus;
using testutil::inv_sqrt2;

TEST_CASE("pure state construction validates and normalizes") {
    Vector v = Vector::Zero(4);
    v(0) = 2.0;  // off-normalization by far more than the tolerance
    const PureState s(2, 2, v);
    CHECK(std::abs(s.amplitudes.squaredNorm() - 1.0) < 1e-12);

    CHECK_THROWS_AS(PureState(1, 2, Vector::Ones(2)), std::invalid_argument);
    CHECK_THROWS_AS(PureState(2, 2, Vector::Ones(3)), std::invalid_argument);
    CHECK_THROWS_AS(PureState(2, 2, Vector::Zero(4)), std::invalid_argument);
}

TEST_CASE("flat index convention is row-major in the A index") {
    const PureState s = basis_state(3, 4, 2, 1);
    CHECK(s.amplitudes(2 * 4 + 1) == Complex(1, 0));
    CHECK(s.coefficient_matrix()(2, 1) == Complex(1, 0));
}

TEST_CASE("inner products") {
    const PureState bell = bell_phi_plus();
    CHECK(std::abs(inner_product(bell, bell) - Complex(1, 0)) < 1e-12);

    const PureState s00 = basis_state(2, 2, 0, 0);
    const PureState s11 = basis_state(2, 2, 1, 1);
    CHECK(std::abs(inner_product(s00, s11)) < 1e-15);

    const auto [psi, phi] = figure_states();
    CHECK(std::abs(inner_product(psi, phi) - Complex(0.5, 0)) < 1e-15);

    CHECK_THROWS_AS(inner_product(s00, basis_state(2, 3, 0, 0)), std::invalid_argument);
}

TEST_CASE("schmidt decomposition of named states") {
    const SchmidtForm bell = schmidt_decompose(bell_phi_plus());
    REQUIRE(bell.coefficients.size() == 2);
    CHECK(std::abs(bell.coefficients(0) - inv_sqrt2()) < 1e-12);
    CHECK(std::abs(bell.coefficients(1) - inv_sqrt2()) < 1e-12);
    CHECK(bell.rank == 2);

    const SchmidtForm prod = schmidt_decompose(basis_state(2, 2, 0, 0));
    CHECK(std::abs(prod.coefficients(0) - 1.0) < 1e-12);
    CHECK(std::abs(prod.coefficients(1)) < 1e-12);
    CHECK(prod.rank == 1);

    const auto [psi, phi] = figure_states();
    const SchmidtForm f = schmidt_decompose(psi);
    REQUIRE(f.coefficients.size() == 3);
    CHECK(std::abs(f.coefficients(0) - inv_sqrt2()) < 1e-12);
    CHECK(std::abs(f.coefficients(1) - 0.5) < 1e-12);
    CHECK(std::abs(f.coefficients(2) - 0.5) < 1e-12);
    CHECK(f.rank == 3);

    CHECK_THROWS_AS(schmidt_decompose(psi, -1.0), std::invalid_argument);
}

TEST_CASE("partial traces of named states") {
    const PureState bell = bell_phi_plus();
    const DensityOperator rho = partial_trace_a(bell, bell);
    CHECK((rho.entries - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(rho.is_hermitian());
    CHECK(std::abs(rho.trace - Complex(1, 0)) < 1e-12);

    const auto [psi, phi] = figure_states();
    Matrix expected = Matrix::Zero(3, 3);
    expected(0, 0) = 0.5;
    expected(1, 1) = 0.25;
    expected(2, 2) = 0.25;
    CHECK((partial_trace_a(psi, psi).entries - expected).cwiseAbs().maxCoeff() < 1e-12);

    const PureState s00 = basis_state(2, 2, 0, 0);
    const PureState s11 = basis_state(2, 2, 1, 1);
    CHECK(partial_trace_a(s00, s11).entries.cwiseAbs().maxCoeff() < 1e-15);
    CHECK(partial_trace_b(s00, s11).entries.cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("matrix partial traces agree with the pure-state versions") {
    SplitMix64 rng(11);
    const PureState x = random_pure_state(3, 4, rng);
    const PureState y = random_pure_state(3, 4, rng);
    const Matrix cross = y.amplitudes * x.amplitudes.adjoint();  // |y><x|
    CHECK((partial_trace_a(cross, 3, 4) - partial_trace_a(x, y).entries).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK((partial_trace_b(cross, 3, 4) - partial_trace_b(x, y).entries).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK_THROWS_AS(partial_trace_a(cross, 4, 4), std::invalid_argument);
}

TEST_CASE("schmidt properties over seeded random states") {
    SplitMix64 rng(20240817);
    double worst_sum = 0, worst_ortho = 0, worst_rebuild = 0, worst_purity = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Index n1 = 2 + static_cast<Index>(rng.next_below(5));
        const Index n2 = 2 + static_cast<Index>(rng.next_below(5));
        const PureState s = random_pure_state(n1, n2, rng);
        const SchmidtForm f = schmidt_decompose(s);

        worst_sum = std::max(worst_sum, std::abs(f.coefficients.squaredNorm() - 1.0));
        const Matrix ga = f.basis_a.adjoint() * f.basis_a;
        const Matrix gb = f.basis_b.adjoint() * f.basis_b;
        const Index k = f.coefficients.size();
        worst_ortho = std::max(worst_ortho,
                               (ga - Matrix::Identity(k, k)).cwiseAbs().maxCoeff());
        worst_ortho = std::max(worst_ortho,
                               (gb - Matrix::Identity(k, k)).cwiseAbs().maxCoeff());

        // Reassembly up to a global phase.
        const PureState rebuilt = reassemble(f);
        Complex phase = rebuilt.amplitudes.dot(s.amplitudes);
        phase /= std::abs(phase);
        worst_rebuild = std::max(worst_rebuild,
                                 (s.amplitudes - phase * rebuilt.amplitudes).norm());

        // Purity route: Tr[rho_A^2] = sum lambda^4.
        const Matrix rho = partial_trace_a(s, s).entries;
        const double purity = (rho * rho).trace().real();
        const double quartic = f.coefficients.array().pow(4).sum();
        worst_purity = std::max(worst_purity, std::abs(purity - quartic));
        CHECK(std::abs(partial_trace_a(s, s).trace.real() - 1.0) < 1e-12);
    }
    CHECK(worst_sum < 1e-10);
    CHECK(worst_ortho < 1e-10);
    CHECK(worst_rebuild < 1e-10);
    CHECK(worst_purity < 1e-10);
}
