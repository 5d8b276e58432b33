// bounds.hpp — Exact values and lower/upper bounds for the concurrence of a
// superposition, one bound family per orthogonality class, plus the published
// comparison bounds for two-state superpositions.

#pragma once

#include "qconc/ortho.hpp"
#include "qconc/superposition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace qconc {

struct BoundsOptions {
    // Evaluate a weaker class's bound family than the set's actual class.
    std::optional<OrthoClass> force_class;
    // Sharper caps for two-qubit two-state input (orthogonal and arbitrary
    // families only).
    bool two_qubit_refine = false;
    // Attach the comparison bounds (two-state input only).
    bool with_reference = false;
    // Partition enumeration is exhaustive up to this many states; beyond it
    // only the non-partition bounds are evaluated and the report is flagged.
    int partition_m_cap = 6;
    double class_tol = kClassifyTol;
};

struct BoundsReport {
    OrthoClass ortho_class = OrthoClass::Arbitrary;
    std::string method;      // bound family that produced lower/upper
    double norm_gamma = 0;   // ||Gamma||
    double exact = 0;        // C(Gamma') from superpose_exact
    double lower = 0;        // clamped at 0
    double upper = 0;
    double lower_raw = 0;    // before clamping; the formulas can go negative
    std::optional<double> reference_lower;  // clamped
    std::optional<double> reference_upper;
    std::optional<double> reference_lower_raw;
    std::optional<std::int64_t> partition_count;
    bool partition_capped = false;
};

// Closed form for biorthogonal sets (exact, not a bound):
//   C(Gamma) = sqrt( sum |gamma_i|^4 C^2(psi_i) + 4 sum_{i<j} |gamma_i gamma_j|^2 ).
// Accepts m = 1 (vacuously biorthogonal).
double exact_biorthogonal(const Superposition& s, double class_tol = kClassifyTol);

// One-sided orthogonal sets:
//   sqrt(sum |gamma_i|^4 C_i^2)  <=  C(Gamma)  <=  sqrt(sum |gamma_i|^4 C_i^2 + 4 sum |gamma_i gamma_j|^2).
BoundsReport bounds_one_sided(const Superposition& s, const BoundsOptions& opt = {});

// Orthogonal sets:
//   upper = sum |gamma_i|^2 C_i + 2 sum_{i<j} |gamma_i gamma_j|
//   lower = 2 max_i{|gamma_i|^2 C_i} - sum |gamma_i|^2 C_i - 2 sum |gamma_i gamma_j|
// (for two states the lower reduces to | |a|^2 C_1 - |b|^2 C_2 | - 2|ab|).
BoundsReport bounds_orthogonal(const Superposition& s, const BoundsOptions& opt = {});

// Two arbitrary states; bounds on ||Gamma||^2 C(Gamma'), reported divided by
// ||Gamma||^2. Upper is the min of three expressions, lower the max of three,
// built from |a^2 + 2ab<x|y>|, |b^2 + 2ab<y|x>| and sqrt(1 +- |<x|y>|^2).
BoundsReport bounds_arbitrary_pair(const Superposition& s, const BoundsOptions& opt = {});

// m arbitrary states; min/max over the non-partition expressions and an
// exhaustive family indexed by two-way partitions of the index pairs {i<j}.
BoundsReport bounds_arbitrary_multi(const Superposition& s, const BoundsOptions& opt = {});

// Comparison bounds for two-state superpositions, divided by ||Gamma||^2.
// Their lower bound carries the correction
//   delta = min(|gamma_1/gamma_2| C_1, |gamma_2/gamma_1| C_2)
// (finite terms only; 0 when none remain) inside the subtracted cross term.
struct ReferenceBounds {
    double lower = 0;      // clamped at 0
    double upper = 0;
    double lower_raw = 0;
};
ReferenceBounds reference_bounds(const Superposition& s, double class_tol = kClassifyTol);

// Classifies the set and evaluates the strongest applicable family (or the
// forced weaker one). Single-state input short-circuits to C(psi_1).
BoundsReport bounds_auto(const Superposition& s, const BoundsOptions& opt = {});

}  // namespace qconc
