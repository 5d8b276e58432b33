#include "qconc/ortho.hpp"

#include <stdexcept>

namespace qconc {

int ortho_strength(OrthoClass c) {
    switch (c) {
        case OrthoClass::Biorthogonal: return 3;
        case OrthoClass::OneSidedA:
        case OrthoClass::OneSidedB: return 2;
        case OrthoClass::Orthogonal: return 1;
        case OrthoClass::Arbitrary: return 0;
    }
    return 0;
}

std::string to_string(OrthoClass c) {
    switch (c) {
        case OrthoClass::Biorthogonal: return "biorthogonal";
        case OrthoClass::OneSidedA: return "one-sided-a";
        case OrthoClass::OneSidedB: return "one-sided-b";
        case OrthoClass::Orthogonal: return "orthogonal";
        case OrthoClass::Arbitrary: return "arbitrary";
    }
    return "arbitrary";
}

OrthoClass ortho_class_from_string(std::string_view name) {
    if (name == "biorthogonal") return OrthoClass::Biorthogonal;
    if (name == "one-sided-a" || name == "one-sided" || name == "onesided")
        return OrthoClass::OneSidedA;
    if (name == "one-sided-b") return OrthoClass::OneSidedB;
    if (name == "orthogonal") return OrthoClass::Orthogonal;
    if (name == "arbitrary") return OrthoClass::Arbitrary;
    throw std::invalid_argument("unknown orthogonality class: " + std::string(name));
}

PairConditions pair_conditions(const PureState& x, const PureState& y) {
    if (x.dim_a != y.dim_a || x.dim_b != y.dim_b)
        throw std::invalid_argument("pair_conditions: dimension mismatch");
    PairConditions c;
    c.trace_a =
        (partial_trace_a(x, x).entries * partial_trace_a(y, y).entries).trace().real();
    c.trace_b =
        (partial_trace_b(x, x).entries * partial_trace_b(y, y).entries).trace().real();
    c.overlap = std::abs(inner_product(x, y));
    return c;
}

OrthoClass classify_pair(const PureState& x, const PureState& y, double tol) {
    const PairConditions c = pair_conditions(x, y);
    const bool cond_a = c.trace_a < tol;
    const bool cond_b = c.trace_b < tol;
    if (cond_a && cond_b) return OrthoClass::Biorthogonal;
    if (cond_a) return OrthoClass::OneSidedA;
    if (cond_b) return OrthoClass::OneSidedB;
    if (c.overlap < tol) return OrthoClass::Orthogonal;
    return OrthoClass::Arbitrary;
}

OrthoClass classify_set(std::span<const PureState> states, double tol) {
    if (states.size() < 2)
        throw std::invalid_argument("classify_set: need at least 2 states");
    bool all_a = true, all_b = true, all_orth = true;
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            const PairConditions c = pair_conditions(states[i], states[j]);
            const bool cond_a = c.trace_a < tol;
            const bool cond_b = c.trace_b < tol;
            all_a = all_a && cond_a;
            all_b = all_b && cond_b;
            all_orth = all_orth && (cond_a || cond_b || c.overlap < tol);
        }
    }
    if (all_a && all_b) return OrthoClass::Biorthogonal;
    if (all_a) return OrthoClass::OneSidedA;
    if (all_b) return OrthoClass::OneSidedB;
    if (all_orth) return OrthoClass::Orthogonal;
    return OrthoClass::Arbitrary;
}

}  // namespace qconc
