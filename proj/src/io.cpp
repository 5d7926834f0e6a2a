#include "ladderamp/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ladderamp {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const IntMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += std::to_string(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string to_csv(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += format_double(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string to_csv_row(std::span<const double> v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_double(v[i]);
    }
    out += '\n';
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

nlohmann::json graph_to_json(const OrientedGraph& graph) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : graph.edges) edges.push_back({e.tail, e.head});
    nlohmann::json plaquettes = nlohmann::json::array();
    for (const Plaquette& p : graph.plaquettes) {
        nlohmann::json cell = nlohmann::json::array();
        for (const SignedEdge& se : p) cell.push_back({se.edge, se.sign});
        plaquettes.push_back(cell);
    }
    return {{"vertex_count", graph.vertex_count},
            {"edges", edges},
            {"plaquettes", plaquettes}};
}

nlohmann::json kernel_sidecar_json(const ActionKernel& kernel) {
    return {{"alpha", kernel.alpha},
            {"beta", kernel.beta},
            {"hbar", kernel.hbar},
            {"N", kernel.size()},
            {"edge_count", kernel.graph.edges.size()}};
}

nlohmann::json resolved_sum_limits_json() {
    const ResolvedSumLimits limits;
    return {{"spatial_k", limits.spatial_k},
            {"temporal_k", limits.temporal_k},
            {"mode_j", limits.mode_j},
            {"mixed_denominator", limits.mixed_denominator}};
}

nlohmann::json amplitude_report_json(const ActionKernel& kernel,
                                     const SymmetryAmplitude& amplitude,
                                     const LadderPhaseDecomposition& decomposition,
                                     const AmplitudeResiduals& residuals) {
    return {{"N", kernel.size()},
            {"alpha", kernel.alpha},
            {"beta", kernel.beta},
            {"hbar", kernel.hbar},
            {"phase_total", amplitude.phase_total},
            {"phi_s", decomposition.phi_spatial},
            {"phi_t", decomposition.phi_temporal},
            {"phi_st", decomposition.phi_mixed},
            {"prefactor_magnitude", amplitude.prefactor_magnitude},
            {"prefactor_log_magnitude", amplitude.prefactor_log_magnitude},
            {"prefactor_phase", amplitude.prefactor_phase},
            {"resolved_sum_limits", resolved_sum_limits_json()},
            {"residuals",
             {{"closed_vs_numeric_rel", residuals.closed_vs_numeric_rel},
              {"null_projection_rel", residuals.null_projection_rel},
              {"arg_consistency", residuals.arg_consistency},
              {"stationary_phase_abs", residuals.stationary_phase_abs}}}};
}

std::string pattern_to_csv(const std::vector<PatternRow>& rows) {
    std::string out = "e_x_tilde,delta_phi,intensity,n_value,is_maximum\n";
    for (const PatternRow& r : rows) {
        out += format_double(r.e_x_tilde);
        out += ',';
        out += format_double(r.delta_phi);
        out += ',';
        out += format_double(r.intensity);
        out += ',';
        out += format_double(r.n_value);
        out += ',';
        out += r.is_maximum ? "true" : "false";
        out += '\n';
    }
    return out;
}

nlohmann::json twinslit_config_json(const TwinSlitConfig& config) {
    nlohmann::json j = {{"N", config.n},
                        {"e_T", config.e_temporal},
                        {"e_x", config.e_spatial_1},
                        {"e_x_tilde", config.e_spatial_2},
                        {"lambda", config.lambda},
                        {"h", config.h},
                        {"alpha", config.alpha()},
                        {"beta", config.beta()},
                        {"hbar", config.hbar()},
                        {"coherent", config.coherent()}};
    if (config.e_temporal_2) j["e_T_tilde"] = *config.e_temporal_2;
    return j;
}

nlohmann::json pattern_to_json(const TwinSlitConfig& config,
                               const std::vector<PatternRow>& rows) {
    nlohmann::json out;
    out["config"] = twinslit_config_json(config);
    if (!config.coherent())
        out["warning"] = "unequal temporal links: outside the coherent-source model";
    nlohmann::json table = nlohmann::json::array();
    for (const PatternRow& r : rows)
        table.push_back({{"e_x_tilde", r.e_x_tilde},
                         {"delta_phi", r.delta_phi},
                         {"intensity", r.intensity},
                         {"n_value", r.n_value},
                         {"is_maximum", r.is_maximum}});
    out["rows"] = table;
    return out;
}

}  // namespace ladderamp
