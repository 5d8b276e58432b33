#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qconc/concurrence.hpp"
#include "qconc/figure.hpp"
#include "qconc/ortho.hpp"
#include "qconc/random.hpp"

#include "test_util.hpp"

#include <vector>

using namespace qconc;
using testutil::bell_phi_minus;
using testutil::bell_phi_plus;

TEST_CASE("pair classification of named states") {
    const PureState s00 = basis_state(2, 2, 0, 0);
    const PureState s11 = basis_state(2, 2, 1, 1);
    CHECK(classify_pair(s00, s11) == OrthoClass::Biorthogonal);

    const auto [psi, phi] = figure_states();
    CHECK(classify_pair(psi, phi) == OrthoClass::Arbitrary);

    // Both Bell marginals are I/2, so the trace conditions evaluate to 1/2
    // and only plain orthogonality is left.
    const PairConditions c = pair_conditions(bell_phi_plus(), bell_phi_minus());
    CHECK(std::abs(c.trace_a - 0.5) < 1e-12);
    CHECK(std::abs(c.trace_b - 0.5) < 1e-12);
    CHECK(c.overlap < 1e-12);
    CHECK(classify_pair(bell_phi_plus(), bell_phi_minus()) == OrthoClass::Orthogonal);

    const PureState s10 = basis_state(2, 2, 1, 0);
    CHECK(classify_pair(s00, s10) == OrthoClass::OneSidedA);
    CHECK(classify_pair(s00, basis_state(2, 2, 0, 1)) == OrthoClass::OneSidedB);

    CHECK_THROWS_AS(classify_pair(s00, basis_state(2, 3, 0, 0)), std::invalid_argument);
}

TEST_CASE("classification is symmetric up to the one-sided label swap") {
    SplitMix64 rng(21);
    for (int t = 0; t < 30; ++t) {
        const auto target = static_cast<OrthoClass>(rng.next_below(5));
        if (!class_set_feasible(target, 4, 3, 2)) continue;
        const auto set = random_class_set(target, 4, 3, 2, rng);
        const OrthoClass ab = classify_pair(set[0], set[1]);
        const OrthoClass ba = classify_pair(set[1], set[0]);
        CHECK(ab == ba);  // conditions are symmetric in the two states
    }
    // The A/B label swaps under subsystem exchange.
    const PureState s00 = basis_state(2, 2, 0, 0);
    const PureState s10 = basis_state(2, 2, 1, 0);
    const auto swap = [](const PureState& s) {
        return state_from_matrix<double>(Matrix(s.coefficient_matrix().transpose()));
    };
    CHECK(classify_pair(s00, s10) == OrthoClass::OneSidedA);
    CHECK(classify_pair(swap(s00), swap(s10)) == OrthoClass::OneSidedB);
}

TEST_CASE("biorthogonal pairs are orthogonal and have unit pair concurrence") {
    SplitMix64 rng(22);
    for (int t = 0; t < 40; ++t) {
        const auto set = random_class_set(OrthoClass::Biorthogonal, 5, 5, 2, rng);
        CHECK(std::abs(inner_product(set[0], set[1])) < 1e-9);
        CHECK(std::abs(pair_concurrence(set[0], set[1]) - 1.0) < 1e-9);
    }
}

TEST_CASE("set classification") {
    std::vector<PureState> triple{basis_state(3, 3, 0, 0), basis_state(3, 3, 1, 1),
                                  basis_state(3, 3, 2, 2)};
    CHECK(classify_set(triple) == OrthoClass::Biorthogonal);

    std::vector<PureState> one_sided{basis_state(2, 2, 0, 0), basis_state(2, 2, 1, 0)};
    CHECK(classify_set(one_sided) == OrthoClass::OneSidedA);

    std::vector<PureState> bells{bell_phi_plus(), bell_phi_minus()};
    CHECK(classify_set(bells) == OrthoClass::Orthogonal);

    // Mixing an A-sided and a B-sided pair leaves only plain orthogonality.
    std::vector<PureState> mixed{basis_state(2, 2, 0, 0), basis_state(2, 2, 1, 0),
                                 basis_state(2, 2, 0, 1)};
    CHECK(classify_pair(mixed[0], mixed[1]) == OrthoClass::OneSidedA);
    CHECK(classify_pair(mixed[0], mixed[2]) == OrthoClass::OneSidedB);
    CHECK(classify_pair(mixed[1], mixed[2]) == OrthoClass::Biorthogonal);
    CHECK(classify_set(mixed) == OrthoClass::Orthogonal);

    CHECK_THROWS_AS(classify_set(std::vector<PureState>{bell_phi_plus()}),
                    std::invalid_argument);
}

TEST_CASE("class strength order and names round-trip") {
    CHECK(ortho_strength(OrthoClass::Biorthogonal) > ortho_strength(OrthoClass::OneSidedA));
    CHECK(ortho_strength(OrthoClass::OneSidedA) == ortho_strength(OrthoClass::OneSidedB));
    CHECK(ortho_strength(OrthoClass::OneSidedB) > ortho_strength(OrthoClass::Orthogonal));
    CHECK(ortho_strength(OrthoClass::Orthogonal) > ortho_strength(OrthoClass::Arbitrary));
    for (const OrthoClass c : {OrthoClass::Biorthogonal, OrthoClass::OneSidedA,
                               OrthoClass::OneSidedB, OrthoClass::Orthogonal,
                               OrthoClass::Arbitrary})
        CHECK(ortho_class_from_string(to_string(c)) == c);
    CHECK_THROWS_AS(ortho_class_from_string("nonsense"), std::invalid_argument);
}

TEST_CASE("constructed ensembles classify as requested") {
    SplitMix64 rng(23);
    for (const OrthoClass target : {OrthoClass::Biorthogonal, OrthoClass::OneSidedA,
                                    OrthoClass::OneSidedB, OrthoClass::Orthogonal,
                                    OrthoClass::Arbitrary}) {
        for (int m = 2; m <= 4; ++m) {
            if (!class_set_feasible(target, 4, 4, m)) continue;
            for (int t = 0; t < 10; ++t) {
                const auto set = random_class_set(target, 4, 4, m, rng);
                CHECK(classify_set(set) == target);
            }
        }
    }
    CHECK_THROWS_AS(random_class_set(OrthoClass::Biorthogonal, 3, 3, 4, rng),
                    std::invalid_argument);
}
