#include "qconc/figure.hpp"

#include "qconc/bounds.hpp"
#include "qconc/io.hpp"

#include <cmath>
#include <stdexcept>

namespace qconc {

std::pair<PureState, PureState> figure_states() {
    const double h = 1.0 / std::sqrt(2.0);
    Vector psi = Vector::Zero(9);
    psi(flat_index(0, 0, 3)) = h;
    psi(flat_index(1, 1, 3)) = 0.5;
    psi(flat_index(2, 2, 3)) = 0.5;
    Vector phi = psi;
    phi(flat_index(1, 1, 3)) = -0.5;
    return {PureState(3, 3, std::move(psi)), PureState(3, 3, std::move(phi))};
}

std::vector<FigureRow> figure_sweep(int samples) {
    if (samples < 2) throw std::invalid_argument("figure_sweep: need at least 2 samples");
    const auto [psi, phi] = figure_states();

    std::vector<double> xs(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k)
        xs[static_cast<std::size_t>(k)] = double(k) / double(samples - 1);
    // Pin the cancellation abscissa when it falls strictly inside the grid.
    const double xc = 1.0 / std::sqrt(2.0);
    int nearest = static_cast<int>(std::lround(xc * (samples - 1)));
    if (nearest > 0 && nearest < samples - 1) xs[static_cast<std::size_t>(nearest)] = xc;

    std::vector<FigureRow> rows;
    rows.reserve(xs.size());
    BoundsOptions opt;
    opt.with_reference = true;
    for (const double x : xs) {
        Vector gamma(2);
        gamma(0) = x;
        gamma(1) = -std::sqrt(std::max(0.0, 1.0 - x * x));
        const Superposition s(gamma, {psi, phi});
        const BoundsReport r = bounds_arbitrary_pair(s, opt);
        rows.push_back({x, r.exact, r.lower, r.upper, r.reference_lower.value_or(0.0),
                        r.reference_upper.value_or(0.0)});
    }
    return rows;
}

void write_figure_csv(std::ostream& out, const std::vector<FigureRow>& rows) {
    out << "x,exact,lower,upper,ref_lower,ref_upper\n";
    for (const FigureRow& r : rows)
        out << format_sig(r.x) << ',' << format_sig(r.exact) << ',' << format_sig(r.lower)
            << ',' << format_sig(r.upper) << ',' << format_sig(r.ref_lower) << ','
            << format_sig(r.ref_upper) << '\n';
}

}  // namespace qconc
