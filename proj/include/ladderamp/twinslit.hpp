#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ladderamp/action.hpp"
#include "ladderamp/amplitude.hpp"
#include "ladderamp/graph.hpp"

namespace ladderamp {

// Two uniform ladder configurations sharing their temporal links, one per
// slit. The scales alpha and beta are always derived from the relational
// length unit lambda and the action unit h, never set independently.
// e_temporal_2 is an exploratory escape hatch: when set to a different value
// the two sources are no longer coherent and outputs are flagged as outside
// the model's assumptions.
struct TwinSlitConfig {
    int n = 8;                 // vertices per ladder, even, >= 4
    double e_temporal = 1.0;   // shared temporal link value
    double e_spatial_1 = 1.0;  // spatial link value, slit-1 graph
    double e_spatial_2 = 1.0;  // spatial link value, slit-2 graph
    double lambda = 1.0;       // relational length unit, > 0
    double h = 1.0;            // action unit, > 0
    std::optional<double> e_temporal_2;

    double alpha() const { return h / lambda; }
    double beta() const { return h / (lambda * lambda); }
    double hbar() const;
    double temporal_2() const { return e_temporal_2 ? *e_temporal_2 : e_temporal; }
    bool coherent() const { return !e_temporal_2 || *e_temporal_2 == e_temporal; }
};

void validate_config(const TwinSlitConfig& config);

// Uniform link assignment: every temporal edge gets e_t, every rung e_x.
LinkValues uniform_ladder_links(const LadderComplex& ladder, double e_t, double e_x);

// Per-slit phases via the full spectral pipeline plus the inner phase
// difference delta = phi2 - phi1 (the conventional overall sign is dropped).
// The mixed closed-form part must vanish for uniform links and delta must
// match its closed form N*alpha^2*(e1^2 - e2^2)/(4*hbar*beta); violations
// throw because they can only come from an indexing bug.
struct TwinSlitPhases {
    double phi_1 = 0.0;
    double phi_2 = 0.0;
    double delta_phi_inner = 0.0;
    double phi_mixed_1 = 0.0;
    double phi_mixed_2 = 0.0;
};

TwinSlitPhases twin_slit_phase(const TwinSlitConfig& config);

// Two-source interference intensity, 2 + 2 cos(delta).
double interference_intensity(double delta_phi);

// Quantization count n = (N/2)(e1^2 - e2^2)/2; a maximum when n is within
// 1e-9 of an integer.
struct MaximaResult {
    double n_value = 0.0;
    bool is_maximum = false;
};

MaximaResult maxima_condition(const TwinSlitConfig& config);

// Relational length units carried by the spatial links: N*e_x^2/4 in total,
// e_x^2/2 per rung.
struct WaveCount {
    double total_waves = 0.0;
    double waves_per_link = 0.0;
};

WaveCount wave_count(const LadderComplex& ladder, double e_x);

// Reference two-source pattern, 2 + 2 cos(2 pi v_phi (t1 - t2) / lambda).
double qm_reference_pattern(double v_phi, double t1, double t2, double lambda);

struct PatternRow {
    double e_x_tilde = 0.0;
    double delta_phi = 0.0;
    double intensity = 0.0;
    double n_value = 0.0;
    bool is_maximum = false;
};

// One row per slit-2 spatial value, each internally consistent with
// twin_slit_phase, interference_intensity and maxima_condition. The ladder
// spectrum is decomposed once and shared across rows.
std::vector<PatternRow> pattern_sweep(const TwinSlitConfig& base,
                                      std::span<const double> e_x_tilde_values);

}  // namespace ladderamp
