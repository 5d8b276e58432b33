// verify.hpp — Monte Carlo certification: draw class-targeted state sets with
// Haar coefficients, evaluate every bound family valid for the drawn class,
// and count violations beyond tolerance.

#pragma once

#include "qconc/ortho.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace qconc {

struct EnsembleSpec {
    Index dim_a = 2;
    Index dim_b = 2;
    int m = 2;
    OrthoClass ortho_class = OrthoClass::Arbitrary;
    int trials = 100;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
};

// Slack convention: every check produces a signed slack that is >= 0 when the
// property holds exactly (distance inside a bound, or minus the deviation for
// an equality check). A check violates when slack < -tolerance.
struct CheckStats {
    long checked = 0;
    long violations = 0;
    double worst_margin = 0;  // most negative slack seen (0 until first check)

    void update(double slack, double tol) {
        if (checked == 0 || slack < worst_margin) worst_margin = slack;
        ++checked;
        if (slack < -tol) ++violations;
    }
};

struct VerificationReport {
    EnsembleSpec spec;  // echo, including the seed
    long trials_run = 0;
    long violations = 0;
    double worst_margin = 0;
    std::map<std::string, CheckStats> per_check;
    // The inequalities fix no sampling prescription, so the report names the
    // one in use.
    std::string sampler = "haar(splitmix64+box-muller)";
};

// Per trial: draw the state set and coefficients from the trial's own stream,
// compute the exact value, and check
//   - the expansion/direct dual route agreement,
//   - the closed form (biorthogonal draws),
//   - the bracket of every bound family whose precondition the class implies,
//   - cross-vector dot products (biorthogonal/one-sided draws),
//   - the per-class cap on pair concurrences.
// Identical specs produce identical reports.
VerificationReport verify(const EnsembleSpec& spec);

// Feasibility validation used by verify (throws std::invalid_argument).
void validate_ensemble_spec(const EnsembleSpec& spec);

}  // namespace qconc
