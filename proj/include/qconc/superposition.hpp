// superposition.hpp — Coefficient-weighted superpositions of pure states and
// the exact concurrence of their normalized version.

#pragma once

#include "qconc/state.hpp"

#include <vector>

namespace qconc {

// Gamma = sum_i gamma_i |psi_i>, with sum |gamma_i|^2 = 1 (renormalized on
// construction when off by more than kStateNormTol). States share dimensions.
struct Superposition {
    Vector coefficients;
    std::vector<PureState> states;

    Superposition(Vector gamma, std::vector<PureState> psis);

    Index size() const { return coefficients.size(); }
    Index dim_a() const { return states.front().dim_a; }
    Index dim_b() const { return states.front().dim_b; }
};

struct SuperposedValue {
    double norm;             // ||Gamma|| before normalization
    double exact;            // concurrence of Gamma' = Gamma / ||Gamma||
    double exact_expansion;  // same value assembled from per-state concurrence
                             // components; agrees with `exact` to ~1e-10
};

// ||Gamma||^2 C(Gamma') equals the norm of
//   sum_i conj(gamma_i)^2 C(psi_i) + 2 sum_{i<j} conj(gamma_i gamma_j) C(psi_i, psi_j)
// taken componentwise over generator pairs. `exact` is computed directly on
// the normalized state, `exact_expansion` through this component expansion.
SuperposedValue superpose_exact(const Superposition& s);

// The normalized superposed state Gamma'. Throws when the terms cancel.
PureState superposed_state(const Superposition& s);

}  // namespace qconc
