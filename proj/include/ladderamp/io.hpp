#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ladderamp/action.hpp"
#include "ladderamp/amplitude.hpp"
#include "ladderamp/graph.hpp"
#include "ladderamp/intmat.hpp"
#include "ladderamp/matrix.hpp"
#include "ladderamp/spectral.hpp"
#include "ladderamp/twinslit.hpp"

namespace ladderamp {

// Row-major CSV, no header. Integer matrices dump exactly; reals use %.17g so
// a reload round-trips bit-for-bit.
std::string to_csv(const IntMatrix& m);
std::string to_csv(const Matrix& m);
std::string to_csv_row(std::span<const double> v);
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);

// Graph serialization: vertex count, edges as [tail, head], plaquettes as
// [[edge, sign], ...]; all indices 0-based.
nlohmann::json graph_to_json(const OrientedGraph& graph);

nlohmann::json kernel_sidecar_json(const ActionKernel& kernel);

nlohmann::json resolved_sum_limits_json();

// Amplitude report: sizes, phase split, prefactor data, the resolved sum
// ranges and the self-check residuals.
struct AmplitudeResiduals {
    double closed_vs_numeric_rel = 0.0;
    double null_projection_rel = 0.0;
    double arg_consistency = 0.0;
    double stationary_phase_abs = 0.0;
};

nlohmann::json amplitude_report_json(const ActionKernel& kernel,
                                     const SymmetryAmplitude& amplitude,
                                     const LadderPhaseDecomposition& decomposition,
                                     const AmplitudeResiduals& residuals);

// Pattern table: CSV with the fixed header, or a JSON variant that echoes the
// generating configuration.
std::string pattern_to_csv(const std::vector<PatternRow>& rows);
nlohmann::json pattern_to_json(const TwinSlitConfig& config,
                               const std::vector<PatternRow>& rows);
nlohmann::json twinslit_config_json(const TwinSlitConfig& config);

}  // namespace ladderamp
