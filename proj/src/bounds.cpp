#include "qconc/bounds.hpp"

#include "qconc/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qconc {

namespace {

// Scalars every bound family is built from.
struct Terms {
    std::vector<double> c;      // C(psi_i)
    std::vector<double> g;      // |gamma_i|
    Matrix ov;                  // ov(i, j) = <psi_i|psi_j>
};

Terms make_terms(const Superposition& s) {
    const Index m = s.size();
    Terms t;
    t.c.resize(static_cast<std::size_t>(m));
    t.g.resize(static_cast<std::size_t>(m));
    t.ov.resize(m, m);
    for (Index i = 0; i < m; ++i) {
        t.c[static_cast<std::size_t>(i)] = concurrence(s.states[static_cast<std::size_t>(i)]);
        t.g[static_cast<std::size_t>(i)] = std::abs(s.coefficients(i));
        for (Index j = 0; j < m; ++j)
            t.ov(i, j) = inner_product(s.states[static_cast<std::size_t>(i)],
                                       s.states[static_cast<std::size_t>(j)]);
    }
    return t;
}

OrthoClass actual_class(const Superposition& s, double tol) {
    if (s.size() == 1) return OrthoClass::Biorthogonal;  // vacuous
    return classify_set(s.states, tol);
}

void require_class_at_least(OrthoClass actual, int required_strength, const char* what) {
    if (ortho_strength(actual) < required_strength)
        throw std::invalid_argument(std::string(what) + ": orthogonality precondition not met (set is " +
                                    to_string(actual) + ")");
}

BoundsReport base_report(const Superposition& s, OrthoClass cls, const char* method) {
    const SuperposedValue v = superpose_exact(s);
    BoundsReport r;
    r.ortho_class = cls;
    r.method = method;
    r.norm_gamma = v.norm;
    r.exact = v.exact;
    return r;
}

void set_bounds(BoundsReport& r, double lower_raw, double upper) {
    r.lower_raw = lower_raw;
    r.lower = std::max(0.0, lower_raw);
    r.upper = upper;
}

BoundsReport single_state_report(const Superposition& s) {
    BoundsReport r = base_report(s, OrthoClass::Biorthogonal, "single-state");
    const double c = concurrence(s.states.front());
    set_bounds(r, c, c);
    return r;
}

// Sharper two-qubit cap on the pair concurrence of orthogonal states:
// C(x, y) <= sqrt(1 - delta^2) with delta = max{C(x), C(y)}.
double refined_cap_orthogonal(const Terms& t) {
    const double delta = std::max(t.c[0], t.c[1]);
    return std::sqrt(std::max(0.0, 1.0 - delta * delta));
}

// Two-qubit cap for a non-orthogonal pair: delta built from the overlap.
double refined_cap_arbitrary(const Terms& t) {
    const double w = std::abs(t.ov(0, 1));
    const double delta = std::max(std::abs(t.c[0] - w), std::abs(t.c[1] - w));
    return std::sqrt(std::max(0.0, 1.0 - delta * delta));
}

void validate_refine(const Superposition& s, const BoundsOptions& opt) {
    if (!opt.two_qubit_refine) return;
    if (s.size() != 2 || s.dim_a() != 2 || s.dim_b() != 2)
        throw std::invalid_argument(
            "two-qubit refinement requires a two-state superposition of 2x2 states");
}

}  // namespace

double exact_biorthogonal(const Superposition& s, double class_tol) {
    if (s.size() > 1)
        require_class_at_least(actual_class(s, class_tol), 3, "exact_biorthogonal");
    const Terms t = make_terms(s);
    double quartic = 0, cross = 0;
    for (std::size_t i = 0; i < t.c.size(); ++i) {
        const double gi2 = t.g[i] * t.g[i];
        quartic += gi2 * gi2 * t.c[i] * t.c[i];
        for (std::size_t j = i + 1; j < t.c.size(); ++j)
            cross += 4.0 * gi2 * t.g[j] * t.g[j];
    }
    return std::sqrt(quartic + cross);
}

BoundsReport bounds_one_sided(const Superposition& s, const BoundsOptions& opt) {
    validate_refine(s, opt);
    const OrthoClass cls = actual_class(s, opt.class_tol);
    if (s.size() > 1) require_class_at_least(cls, 2, "bounds_one_sided");
    BoundsReport r = base_report(s, cls, "one-sided");
    const Terms t = make_terms(s);
    double quartic = 0, cross = 0;
    for (std::size_t i = 0; i < t.c.size(); ++i) {
        const double gi2 = t.g[i] * t.g[i];
        quartic += gi2 * gi2 * t.c[i] * t.c[i];
        for (std::size_t j = i + 1; j < t.c.size(); ++j)
            cross += 4.0 * gi2 * t.g[j] * t.g[j];
    }
    set_bounds(r, std::sqrt(quartic), std::sqrt(quartic + cross));
    return r;
}

BoundsReport bounds_orthogonal(const Superposition& s, const BoundsOptions& opt) {
    validate_refine(s, opt);
    const OrthoClass cls = actual_class(s, opt.class_tol);
    if (s.size() > 1) require_class_at_least(cls, 1, "bounds_orthogonal");
    BoundsReport r = base_report(s, cls, opt.two_qubit_refine ? "orthogonal-refined" : "orthogonal");
    const Terms t = make_terms(s);

    double cap = 1.0;
    if (opt.two_qubit_refine) cap = refined_cap_orthogonal(t);

    double diag = 0, cross = 0, biggest = 0;
    for (std::size_t i = 0; i < t.c.size(); ++i) {
        const double a = t.g[i] * t.g[i] * t.c[i];
        diag += a;
        biggest = std::max(biggest, a);
        for (std::size_t j = i + 1; j < t.c.size(); ++j) cross += t.g[i] * t.g[j];
    }
    const double upper = diag + 2.0 * cross * cap;
    // 2*max - sum reduces to |a1 - a2| when there are two terms.
    const double lower_raw = 2.0 * biggest - diag - 2.0 * cross * cap;
    set_bounds(r, lower_raw, upper);
    return r;
}

BoundsReport bounds_arbitrary_pair(const Superposition& s, const BoundsOptions& opt) {
    if (s.size() != 2)
        throw std::invalid_argument("bounds_arbitrary_pair: exactly two states required");
    validate_refine(s, opt);
    BoundsReport r = base_report(s, actual_class(s, opt.class_tol),
                                 opt.two_qubit_refine ? "arbitrary-pair-refined" : "arbitrary-pair");
    const Terms t = make_terms(s);

    const Complex a = s.coefficients(0);
    const Complex b = s.coefficients(1);
    const Complex w = t.ov(0, 1);  // <psi_1|psi_2>
    const double ww = std::norm(w);
    const double s_plus = std::sqrt(1.0 + ww);
    const double s_minus = std::sqrt(std::max(0.0, 1.0 - ww));
    const double cross = 2.0 * t.g[0] * t.g[1];

    double cap_plain = s_plus;
    if (opt.two_qubit_refine) cap_plain = std::min(cap_plain, refined_cap_arbitrary(t));

    const double a1 = t.g[0] * t.g[0] * t.c[0];
    const double b1 = t.g[1] * t.g[1] * t.c[1];
    const double a3 = std::abs(a * a + 2.0 * a * b * w) * t.c[0];
    const double b2 = std::abs(b * b + 2.0 * a * b * std::conj(w)) * t.c[1];

    const double upper = std::min({a1 + b1 + cross * cap_plain,
                                   a1 + b2 + cross * s_minus,
                                   a3 + b1 + cross * s_minus});
    const double lower_raw = std::max({std::abs(a1 - b1) - cross * cap_plain,
                                       std::abs(a1 - b2) - cross * s_minus,
                                       std::abs(a3 - b1) - cross * s_minus});
    const double nn = r.norm_gamma * r.norm_gamma;
    set_bounds(r, lower_raw / nn, upper / nn);
    if (opt.with_reference) {
        const ReferenceBounds ref = reference_bounds(s, opt.class_tol);
        r.reference_lower = ref.lower;
        r.reference_upper = ref.upper;
        r.reference_lower_raw = ref.lower_raw;
    }
    return r;
}

BoundsReport bounds_arbitrary_multi(const Superposition& s, const BoundsOptions& opt) {
    const Index m = s.size();
    if (m < 2) throw std::invalid_argument("bounds_arbitrary_multi: at least two states required");
    if (opt.two_qubit_refine)
        throw std::invalid_argument(
            "bounds_arbitrary_multi: the two-qubit refinement applies to the pair form only");
    BoundsReport r = base_report(s, actual_class(s, opt.class_tol), "arbitrary-multi");
    const Terms t = make_terms(s);
    const std::size_t mm = static_cast<std::size_t>(m);

    // Non-partition expressions, caps sqrt(1 + |<psi_i|psi_j>|^2).
    double diag = 0, biggest = 0, cross_plus = 0, cross_minus = 0;
    for (std::size_t i = 0; i < mm; ++i) {
        const double ai = t.g[i] * t.g[i] * t.c[i];
        diag += ai;
        biggest = std::max(biggest, ai);
        for (std::size_t j = i + 1; j < mm; ++j) {
            const double ww = std::norm(t.ov(static_cast<Index>(i), static_cast<Index>(j)));
            const double gij = t.g[i] * t.g[j];
            cross_plus += gij * std::sqrt(1.0 + ww);
            cross_minus += gij * std::sqrt(std::max(0.0, 1.0 - ww));
        }
    }
    double upper = diag + 2.0 * cross_plus;
    double lower_raw = 2.0 * biggest - diag - 2.0 * cross_plus;

    // Partition family: each index pair (i, j) either folds its overlap into
    // the coefficient of C(psi_i) ("minus") or of C(psi_j) ("plus"); the
    // leftover cross terms are capped by sqrt(1 - |<psi_i|psi_j>|^2). For each
    // of the 2^{m(m-1)/2} choices the folded coefficient of state k is
    //   gamma_k^2 + 2 sum_{l: (k,l) minus} gamma_k gamma_l <psi_k|psi_l>
    //             + 2 sum_{r: (r,k) plus}  gamma_r gamma_k <psi_k|psi_r>,
    // accumulated jointly so each gamma_k^2 enters exactly once.
    const Index np = pair_count(m);
    if (m <= opt.partition_m_cap) {
        r.partition_count = std::int64_t(1) << np;
        std::vector<std::pair<Index, Index>> pairs;
        pairs.reserve(static_cast<std::size_t>(np));
        for (Index i = 0; i < m; ++i)
            for (Index j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

        std::vector<Complex> folded(mm);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << np); ++mask) {
            for (std::size_t k = 0; k < mm; ++k)
                folded[k] = s.coefficients(static_cast<Index>(k)) *
                            s.coefficients(static_cast<Index>(k));
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                const auto [i, j] = pairs[p];
                const Complex gg = 2.0 * s.coefficients(i) * s.coefficients(j);
                if (mask & (std::uint64_t(1) << p))
                    folded[static_cast<std::size_t>(j)] += gg * std::conj(t.ov(i, j));
                else
                    folded[static_cast<std::size_t>(i)] += gg * t.ov(i, j);
            }
            double part_diag = 0, part_biggest = 0;
            for (std::size_t k = 0; k < mm; ++k) {
                const double ak = std::abs(folded[k]) * t.c[k];
                part_diag += ak;
                part_biggest = std::max(part_biggest, ak);
            }
            upper = std::min(upper, part_diag + 2.0 * cross_minus);
            lower_raw = std::max(lower_raw, 2.0 * part_biggest - part_diag - 2.0 * cross_minus);
        }
    } else {
        r.partition_capped = true;
    }

    const double nn = r.norm_gamma * r.norm_gamma;
    set_bounds(r, lower_raw / nn, upper / nn);
    return r;
}

ReferenceBounds reference_bounds(const Superposition& s, double class_tol) {
    if (s.size() != 2)
        throw std::invalid_argument("reference_bounds: exactly two states required");
    const Terms t = make_terms(s);
    const double a1 = t.g[0] * t.g[0] * t.c[0];
    const double b1 = t.g[1] * t.g[1] * t.c[1];
    const double cross = 2.0 * t.g[0] * t.g[1];
    const double ww = std::norm(t.ov(0, 1));

    // Coupled correction; only finite candidate terms participate.
    double delta = 0;
    {
        bool have = false;
        double best = std::numeric_limits<double>::infinity();
        if (t.g[1] > 0) { best = std::min(best, t.g[0] / t.g[1] * t.c[0]); have = true; }
        if (t.g[0] > 0) { best = std::min(best, t.g[1] / t.g[0] * t.c[1]); have = true; }
        if (have) delta = best;
    }

    ReferenceBounds ref;
    double upper = 0, lower_raw = 0;
    if (std::abs(t.ov(0, 1)) < class_tol) {
        upper = a1 + b1 + cross;
        lower_raw = std::abs(a1 - b1) - cross * (1.0 + delta);
    } else {
        upper = a1 + b1 + cross * std::sqrt(1.0 + ww);
        lower_raw = std::abs(a1 - b1) - cross * std::sqrt(1.0 + ww + delta);
    }
    const SuperposedValue v = superpose_exact(s);
    const double nn = v.norm * v.norm;
    ref.upper = upper / nn;
    ref.lower_raw = lower_raw / nn;
    ref.lower = std::max(0.0, ref.lower_raw);
    return ref;
}

BoundsReport bounds_auto(const Superposition& s, const BoundsOptions& opt) {
    if (opt.with_reference && s.size() != 2)
        throw std::invalid_argument("bounds_auto: reference bounds are two-state only");
    if (s.size() == 1) return single_state_report(s);

    const OrthoClass cls = actual_class(s, opt.class_tol);
    OrthoClass effective = cls;
    if (opt.force_class) {
        if (ortho_strength(*opt.force_class) > ortho_strength(cls))
            throw std::invalid_argument("bounds_auto: cannot force class " +
                                        to_string(*opt.force_class) + " on a " + to_string(cls) +
                                        " set");
        effective = *opt.force_class;
    }

    BoundsReport r;
    switch (effective) {
        case OrthoClass::Biorthogonal: {
            r = base_report(s, cls, "biorthogonal-exact");
            const double c = exact_biorthogonal(s, opt.class_tol);
            set_bounds(r, c, c);
            break;
        }
        case OrthoClass::OneSidedA:
        case OrthoClass::OneSidedB:
            r = bounds_one_sided(s, opt);
            break;
        case OrthoClass::Orthogonal:
            r = bounds_orthogonal(s, opt);
            break;
        case OrthoClass::Arbitrary:
            r = (s.size() == 2) ? bounds_arbitrary_pair(s, opt) : bounds_arbitrary_multi(s, opt);
            break;
    }
    r.ortho_class = cls;
    if (opt.with_reference && !r.reference_upper) {
        const ReferenceBounds ref = reference_bounds(s, opt.class_tol);
        r.reference_lower = ref.lower;
        r.reference_upper = ref.upper;
        r.reference_lower_raw = ref.lower_raw;
    }
    return r;
}

}  // namespace qconc
