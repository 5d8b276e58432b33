// figure.hpp — Bound-comparison sweep over the built-in qutrit pair, emitted
// as CSV for plotting.

#pragma once

#include "qconc/state.hpp"

#include <ostream>
#include <utility>
#include <vector>

namespace qconc {

// The built-in C^3 x C^3 pair: equal concurrence sqrt(5)/2, overlap 1/2.
//   psi = (1/sqrt(2))|00> + (1/2)|11> + (1/2)|22>
//   phi = (1/sqrt(2))|00> - (1/2)|11> + (1/2)|22>
std::pair<PureState, PureState> figure_states();

struct FigureRow {
    double x;          // coefficients are (x, -sqrt(1 - x^2))
    double exact;
    double lower;
    double upper;
    double ref_lower;
    double ref_upper;
};

// `samples` abscissas uniform on [0, 1], except that the interior point
// nearest 1/sqrt(2) is moved onto it exactly, so the row where the
// superposition collapses to the product state |11> is part of the data.
std::vector<FigureRow> figure_sweep(int samples);

// Header x,exact,lower,upper,ref_lower,ref_upper; 10 significant digits.
void write_figure_csv(std::ostream& out, const std::vector<FigureRow>& rows);

}  // namespace qconc
