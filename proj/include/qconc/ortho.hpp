// ortho.hpp — Orthogonality classes of state pairs and sets. The class of a
// pair decides which superposition bound applies to it.

#pragma once

#include "qconc/state.hpp"

#include <span>
#include <string>
#include <string_view>

namespace qconc {

// Strongest-first lattice. Biorthogonal: reduced operators have orthogonal
// supports on both subsystems. OneSidedA/B: on that subsystem only.
// Orthogonal: <x|y> = 0 but neither support condition. Arbitrary: none hold.
enum class OrthoClass { Biorthogonal, OneSidedA, OneSidedB, Orthogonal, Arbitrary };

// Comparable strength; the two one-sided classes tie.
int ortho_strength(OrthoClass c);

std::string to_string(OrthoClass c);
OrthoClass ortho_class_from_string(std::string_view name);

inline constexpr double kClassifyTol = 1e-9;

// Support-overlap measures of a pair: Tr[rho_A^x rho_A^y], Tr[rho_B^x rho_B^y]
// and |<x|y>|. All three lie in [0, 1].
struct PairConditions {
    double trace_a = 0;
    double trace_b = 0;
    double overlap = 0;
};

PairConditions pair_conditions(const PureState& x, const PureState& y);

// Strongest class whose defining conditions hold within tol. A vanishing
// A-side trace condition implies orthogonality, so the lattice is consistent.
OrthoClass classify_pair(const PureState& x, const PureState& y, double tol = kClassifyTol);

// Strongest class that holds for every pair of the set. A set mixing
// A-sided and B-sided pairs is only Orthogonal.
OrthoClass classify_set(std::span<const PureState> states, double tol = kClassifyTol);

}  // namespace qconc
