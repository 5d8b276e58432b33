#include "qconc/superposition.hpp"

#include "qconc/concurrence.hpp"

#include <cmath>
#include <stdexcept>

namespace qconc {

Superposition::Superposition(Vector gamma, std::vector<PureState> psis)
    : coefficients(std::move(gamma)), states(std::move(psis)) {
    if (states.empty()) throw std::invalid_argument("Superposition: need at least 1 state");
    if (coefficients.size() != static_cast<Index>(states.size()))
        throw std::invalid_argument("Superposition: coefficient/state count mismatch");
    for (const PureState& s : states)
        if (s.dim_a != states.front().dim_a || s.dim_b != states.front().dim_b)
            throw std::invalid_argument("Superposition: states must share dimensions");
    const double sq = coefficients.squaredNorm();
    if (!(sq > 1e-24))
        throw std::invalid_argument("Superposition: coefficients have (near-)zero norm");
    if (std::abs(sq - 1.0) > kStateNormTol) coefficients /= std::sqrt(sq);
}

namespace {

Vector raw_amplitudes(const Superposition& s) {
    Vector v = Vector::Zero(s.states.front().amplitudes.size());
    for (Index i = 0; i < s.size(); ++i) v += s.coefficients(i) * s.states[i].amplitudes;
    return v;
}

}  // namespace

PureState superposed_state(const Superposition& s) {
    Vector v = raw_amplitudes(s);
    const double norm = v.norm();
    if (!(norm > 1e-12))
        throw std::invalid_argument("superposed_state: terms cancel (vanishing norm)");
    return PureState(s.dim_a(), s.dim_b(), std::move(v));
}

SuperposedValue superpose_exact(const Superposition& s) {
    Vector v = raw_amplitudes(s);
    const double norm = v.norm();
    if (!(norm > 1e-12))
        throw std::invalid_argument("superpose_exact: terms cancel (vanishing norm)");

    SuperposedValue out;
    out.norm = norm;
    out.exact = concurrence(PureState(s.dim_a(), s.dim_b(), v / norm));

    Matrix acc = Matrix::Zero(pair_count(s.dim_a()), pair_count(s.dim_b()));
    for (Index i = 0; i < s.size(); ++i) {
        const Complex gi = std::conj(s.coefficients(i));
        acc += gi * gi * concurrence_vector(s.states[i]).components;
        for (Index j = i + 1; j < s.size(); ++j) {
            const Complex gj = std::conj(s.coefficients(j));
            acc += 2.0 * gi * gj * concurrence_vector(s.states[i], s.states[j]).components;
        }
    }
    out.exact_expansion = acc.norm() / (norm * norm);
    return out;
}

}  // namespace qconc
