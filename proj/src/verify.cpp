#include "qconc/verify.hpp"

#include "qconc/bounds.hpp"
#include "qconc/concurrence.hpp"
#include "qconc/random.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qconc {

void validate_ensemble_spec(const EnsembleSpec& spec) {
    if (spec.dim_a < 2 || spec.dim_b < 2)
        throw std::invalid_argument("EnsembleSpec: local dimensions must be >= 2");
    if (spec.m < 2) throw std::invalid_argument("EnsembleSpec: m must be >= 2");
    if (spec.m > 6)
        throw std::invalid_argument("EnsembleSpec: m exceeds the partition enumeration cap (6)");
    if (spec.trials < 1) throw std::invalid_argument("EnsembleSpec: trials must be >= 1");
    if (!(spec.tolerance > 0)) throw std::invalid_argument("EnsembleSpec: tolerance must be > 0");
    if (!class_set_feasible(spec.ortho_class, spec.dim_a, spec.dim_b, spec.m))
        throw std::invalid_argument("EnsembleSpec: class " + to_string(spec.ortho_class) +
                                    " is infeasible for m=" + std::to_string(spec.m) + " at " +
                                    std::to_string(spec.dim_a) + "x" + std::to_string(spec.dim_b));
}

VerificationReport verify(const EnsembleSpec& spec) {
    validate_ensemble_spec(spec);
    VerificationReport report;
    report.spec = spec;
    const double tol = spec.tolerance;
    const int strength = ortho_strength(spec.ortho_class);

    for (int trial = 0; trial < spec.trials; ++trial) {
        SplitMix64 rng = derive_stream(spec.seed, static_cast<std::uint64_t>(trial));
        std::vector<PureState> states =
            random_class_set(spec.ortho_class, spec.dim_a, spec.dim_b, spec.m, rng);
        const Vector gamma = random_coefficients(spec.m, rng);
        const Superposition s(gamma, states);

        const SuperposedValue v = superpose_exact(s);
        report.per_check["dual_path"].update(-std::abs(v.exact - v.exact_expansion), tol);

        if (strength >= 3) {
            const double closed = exact_biorthogonal(s);
            report.per_check["biorthogonal_exact"].update(-std::abs(closed - v.exact), tol);
        }
        if (strength >= 2) {
            const BoundsReport r = bounds_one_sided(s);
            report.per_check["one_sided_lower"].update(v.exact - r.lower, tol);
            report.per_check["one_sided_upper"].update(r.upper - v.exact, tol);
        }
        if (strength >= 1) {
            const BoundsReport r = bounds_orthogonal(s);
            report.per_check["orthogonal_lower"].update(v.exact - r.lower, tol);
            report.per_check["orthogonal_upper"].update(r.upper - v.exact, tol);
        }
        {
            const BoundsReport r =
                (spec.m == 2) ? bounds_arbitrary_pair(s) : bounds_arbitrary_multi(s);
            report.per_check["arbitrary_lower"].update(v.exact - r.lower, tol);
            report.per_check["arbitrary_upper"].update(r.upper - v.exact, tol);
        }

        if (strength >= 2) {
            // Cross-vector dots over all unordered state index pairs (i <= j):
            // any two distinct vectors must be orthogonal under the bilinear dot.
            std::vector<ConcurrenceVector> vecs;
            for (std::size_t i = 0; i < states.size(); ++i)
                for (std::size_t j = i; j < states.size(); ++j)
                    vecs.push_back(concurrence_vector(states[i], states[j]));
            for (std::size_t a = 0; a < vecs.size(); ++a)
                for (std::size_t b = a + 1; b < vecs.size(); ++b)
                    report.per_check["cross_dot_zero"].update(
                        -std::abs(concurrence_vector_dot(vecs[a], vecs[b])), tol);
        }

        for (std::size_t i = 0; i < states.size(); ++i) {
            for (std::size_t j = i + 1; j < states.size(); ++j) {
                const double cp = pair_concurrence(states[i], states[j]);
                if (strength >= 3) {
                    report.per_check["pair_cap"].update(-std::abs(cp - 1.0), tol);
                } else if (strength >= 1) {
                    report.per_check["pair_cap"].update(1.0 - cp, tol);
                } else {
                    const double cap =
                        std::sqrt(1.0 + std::norm(inner_product(states[i], states[j])));
                    report.per_check["pair_cap"].update(cap - cp, tol);
                }
            }
        }
    }

    report.trials_run = spec.trials;
    bool first = true;
    for (const auto& [name, stats] : report.per_check) {
        report.violations += stats.violations;
        if (stats.checked == 0) continue;
        if (first || stats.worst_margin < report.worst_margin) {
            report.worst_margin = stats.worst_margin;
            first = false;
        }
    }
    return report;
}

}  // namespace qconc
