#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qconc/io.hpp"
#include "qconc/verify.hpp"

using namespace qconc;

namespace {

EnsembleSpec make_spec(OrthoClass cls, Index n1, Index n2, int m, int trials,
                       std::uint64_t seed) {
    EnsembleSpec spec;
    spec.ortho_class = cls;
    spec.dim_a = n1;
    spec.dim_b = n2;
    spec.m = m;
    spec.trials = trials;
    spec.seed = seed;
    return spec;
}

}  // namespace

TEST_CASE("biorthogonal ensemble certifies the closed form") {
    const VerificationReport r =
        verify(make_spec(OrthoClass::Biorthogonal, 4, 4, 2, 500, 7));
    CHECK(r.violations == 0);
    CHECK(r.trials_run == 500);
    CHECK(r.per_check.at("biorthogonal_exact").checked == 500);
    CHECK(r.per_check.count("cross_dot_zero") == 1);
    CHECK(r.worst_margin > -1e-9);
}

TEST_CASE("orthogonal ensemble certifies the bracket") {
    const VerificationReport r =
        verify(make_spec(OrthoClass::Orthogonal, 3, 3, 3, 500, 11));
    CHECK(r.violations == 0);
    CHECK(r.per_check.at("orthogonal_lower").checked == 500);
    CHECK(r.per_check.at("arbitrary_upper").checked == 500);
    // Orthogonal draws run neither the closed form nor the dot checks.
    CHECK(r.per_check.count("biorthogonal_exact") == 0);
    CHECK(r.per_check.count("cross_dot_zero") == 0);
}

TEST_CASE("arbitrary ensemble certifies the partition bounds") {
    const VerificationReport r =
        verify(make_spec(OrthoClass::Arbitrary, 3, 3, 3, 500, 13));
    CHECK(r.violations == 0);
    CHECK(r.per_check.at("arbitrary_lower").checked == 500);
    CHECK(r.per_check.at("pair_cap").checked == 1500);
}

TEST_CASE("one-sided ensemble runs the dot and cap checks") {
    const VerificationReport r =
        verify(make_spec(OrthoClass::OneSidedA, 4, 3, 2, 200, 17));
    CHECK(r.violations == 0);
    CHECK(r.per_check.at("cross_dot_zero").checked > 0);
    CHECK(r.per_check.at("one_sided_lower").checked == 200);
    CHECK(r.per_check.count("biorthogonal_exact") == 0);
}

TEST_CASE("reports are reproducible bit for bit") {
    const EnsembleSpec spec = make_spec(OrthoClass::Arbitrary, 3, 4, 3, 50, 12345);
    const std::string a = verification_report_to_json(verify(spec)).dump();
    const std::string b = verification_report_to_json(verify(spec)).dump();
    CHECK(a == b);

    EnsembleSpec other = spec;
    other.seed = 12346;
    CHECK(verification_report_to_json(verify(other)).dump() != a);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(verify(make_spec(OrthoClass::Biorthogonal, 3, 3, 4, 10, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify(make_spec(OrthoClass::Arbitrary, 3, 3, 7, 10, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify(make_spec(OrthoClass::Arbitrary, 3, 3, 1, 10, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify(make_spec(OrthoClass::Arbitrary, 1, 3, 2, 10, 1)),
                    std::invalid_argument);
    EnsembleSpec bad_trials = make_spec(OrthoClass::Arbitrary, 3, 3, 2, 0, 1);
    CHECK_THROWS_AS(verify(bad_trials), std::invalid_argument);
    EnsembleSpec bad_tol = make_spec(OrthoClass::Arbitrary, 3, 3, 2, 10, 1);
    bad_tol.tolerance = 0.0;
    CHECK_THROWS_AS(verify(bad_tol), std::invalid_argument);
}
