#include "qconc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qconc {

namespace {

Complex complex_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument(std::string(what) + ": complex entries must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json complex_to_json(const Complex& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

void note_renormalization(double squared_norm, const char* what, std::string* warning) {
    const double deviation = std::abs(std::sqrt(squared_norm) - 1.0);
    if (deviation > 1e-9 && warning) {
        if (!warning->empty()) *warning += "; ";
        *warning += std::string(what) + " renormalized (norm deviated by " +
                    format_sig(deviation) + ")";
    }
}

}  // namespace

PureState state_from_json(const nlohmann::json& j, std::string* warning) {
    if (!j.is_object()) throw std::invalid_argument("state: expected a JSON object");
    if (!j.contains("dim_a") || !j.contains("dim_b") || !j.contains("amplitudes"))
        throw std::invalid_argument("state: requires dim_a, dim_b and amplitudes");
    if (!j["dim_a"].is_number_integer() || !j["dim_b"].is_number_integer())
        throw std::invalid_argument("state: dim_a and dim_b must be integers");
    const Index n1 = j["dim_a"].get<Index>();
    const Index n2 = j["dim_b"].get<Index>();
    if (n1 < 2 || n2 < 2) throw std::invalid_argument("state: dims must be >= 2");
    const auto& amps = j["amplitudes"];
    if (!amps.is_array() || static_cast<Index>(amps.size()) != n1 * n2)
        throw std::invalid_argument("state: amplitudes must hold dim_a*dim_b entries");
    Vector v(n1 * n2);
    for (Index k = 0; k < v.size(); ++k)
        v(k) = complex_from_json(amps[static_cast<std::size_t>(k)], "state");
    note_renormalization(v.squaredNorm(), "state", warning);
    return PureState(n1, n2, std::move(v));
}

nlohmann::json state_to_json(const PureState& s) {
    nlohmann::json amps = nlohmann::json::array();
    for (Index k = 0; k < s.amplitudes.size(); ++k)
        amps.push_back(complex_to_json(s.amplitudes(k)));
    return {{"dim_a", s.dim_a}, {"dim_b", s.dim_b}, {"amplitudes", std::move(amps)}};
}

Superposition superposition_from_json(const nlohmann::json& j, std::string* warning) {
    if (!j.is_object()) throw std::invalid_argument("superposition: expected a JSON object");
    if (!j.contains("coefficients") || !j.contains("states"))
        throw std::invalid_argument("superposition: requires coefficients and states");
    const auto& coeffs = j["coefficients"];
    const auto& states = j["states"];
    if (!coeffs.is_array() || !states.is_array() || coeffs.empty() ||
        coeffs.size() != states.size())
        throw std::invalid_argument(
            "superposition: coefficients and states must be equal-length non-empty arrays");
    Vector gamma(static_cast<Index>(coeffs.size()));
    for (Index k = 0; k < gamma.size(); ++k)
        gamma(k) = complex_from_json(coeffs[static_cast<std::size_t>(k)], "superposition");
    std::vector<PureState> psis;
    psis.reserve(states.size());
    for (const auto& sj : states) psis.push_back(state_from_json(sj, warning));
    note_renormalization(gamma.squaredNorm(), "coefficients", warning);
    return Superposition(std::move(gamma), std::move(psis));
}

nlohmann::json superposition_to_json(const Superposition& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (Index k = 0; k < s.coefficients.size(); ++k)
        coeffs.push_back(complex_to_json(s.coefficients(k)));
    nlohmann::json states = nlohmann::json::array();
    for (const PureState& p : s.states) states.push_back(state_to_json(p));
    return {{"coefficients", std::move(coeffs)}, {"states", std::move(states)}};
}

namespace {

nlohmann::json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return j;
}

}  // namespace

PureState load_state_file(const std::string& path, std::string* warning) {
    return state_from_json(parse_file(path), warning);
}

Superposition load_superposition_file(const std::string& path, std::string* warning) {
    return superposition_from_json(parse_file(path), warning);
}

nlohmann::json bounds_report_to_json(const BoundsReport& r) {
    nlohmann::json j{{"class", to_string(r.ortho_class)},
                     {"method", r.method},
                     {"norm", r.norm_gamma},
                     {"exact", r.exact},
                     {"lower", r.lower},
                     {"upper", r.upper},
                     {"lower_raw", r.lower_raw}};
    if (r.reference_lower) j["reference_lower"] = *r.reference_lower;
    if (r.reference_upper) j["reference_upper"] = *r.reference_upper;
    if (r.reference_lower_raw) j["reference_lower_raw"] = *r.reference_lower_raw;
    if (r.partition_count) j["partition_count"] = *r.partition_count;
    if (r.partition_capped) j["partition_capped"] = true;
    return j;
}

nlohmann::json verification_report_to_json(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [name, stats] : r.per_check)
        checks[name] = {{"checked", stats.checked},
                        {"violations", stats.violations},
                        {"worst_margin", stats.worst_margin}};
    return {{"spec",
             {{"dim_a", r.spec.dim_a},
              {"dim_b", r.spec.dim_b},
              {"m", r.spec.m},
              {"class", to_string(r.spec.ortho_class)},
              {"trials", r.spec.trials},
              {"seed", r.spec.seed},
              {"tolerance", r.spec.tolerance}}},
            {"sampler", r.sampler},
            {"trials_run", r.trials_run},
            {"violations", r.violations},
            {"worst_margin", r.worst_margin},
            {"per_check", std::move(checks)}};
}

std::string format_sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace qconc
