#include "ladderamp/twinslit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ladderamp/spectral.hpp"

namespace ladderamp {

double TwinSlitConfig::hbar() const { return h / (2.0 * std::numbers::pi); }

void validate_config(const TwinSlitConfig& config) {
    if (config.n < 4 || config.n % 2 != 0)
        throw std::invalid_argument("twinslit: n must be an even integer >= 4");
    if (!(config.lambda > 0.0)) throw std::invalid_argument("twinslit: lambda must be positive");
    if (!(config.h > 0.0)) throw std::invalid_argument("twinslit: h must be positive");
    for (double v : {config.e_temporal, config.e_spatial_1, config.e_spatial_2,
                     config.temporal_2()})
        if (!std::isfinite(v)) throw std::invalid_argument("twinslit: non-finite link value");
}

LinkValues uniform_ladder_links(const LadderComplex& ladder, double e_t, double e_x) {
    LinkValues links;
    links.values.resize(ladder.base.edges.size());
    for (std::size_t i = 0; i < links.values.size(); ++i)
        links.values[i] = ladder.edge_role[i] == EdgeRole::Spatial ? e_x : e_t;
    return links;
}

namespace {

// Everything that is independent of the slit-2 spatial value: the ladder, its
// spectrum, and the slit-1 phase.
struct SweepEngine {
    TwinSlitConfig config;
    LadderComplex ladder;
    SpectralData spectral;
    double phi_1 = 0.0;
    double phi_mixed_1 = 0.0;

    explicit SweepEngine(const TwinSlitConfig& cfg)
        : config(cfg), ladder(build_canonical_ladder(cfg.n)) {
        validate_config(cfg);
        const LinkValues links_1 =
            uniform_ladder_links(ladder, cfg.e_temporal, cfg.e_spatial_1);
        const ActionKernel kernel_1 =
            assemble_kernel(ladder.base, links_1, cfg.alpha(), cfg.beta(), cfg.hbar());
        spectral = eigendecompose_symmetric(kernel_1.laplacian);
        phi_1 = phase_numeric(kernel_1, spectral);
        const LadderPhaseDecomposition closed_1 =
            ladder_phase_closed_form(ladder, links_1, cfg.alpha(), cfg.beta(), cfg.hbar());
        phi_mixed_1 = closed_1.phi_mixed;
        require_uniform_mixed_zero(phi_mixed_1, closed_1);
    }

    static void require_uniform_mixed_zero(double phi_mixed,
                                           const LadderPhaseDecomposition& closed) {
        const double scale = std::max(1.0, std::abs(closed.phi_spatial) +
                                               std::abs(closed.phi_temporal));
        if (std::abs(phi_mixed) > 1e-10 * scale)
            throw std::runtime_error(
                "twinslit: mixed phase part is nonzero for uniform links (" +
                std::to_string(phi_mixed) + "); ladder indexing is broken");
    }

    TwinSlitPhases evaluate(double e_x_tilde) const {
        const TwinSlitConfig& cfg = config;
        const LinkValues links_2 =
            uniform_ladder_links(ladder, cfg.temporal_2(), e_x_tilde);
        const ActionKernel kernel_2 =
            assemble_kernel(ladder.base, links_2, cfg.alpha(), cfg.beta(), cfg.hbar());

        TwinSlitPhases out;
        out.phi_1 = phi_1;
        out.phi_mixed_1 = phi_mixed_1;
        out.phi_2 = phase_numeric(kernel_2, spectral);
        const LadderPhaseDecomposition closed_2 =
            ladder_phase_closed_form(ladder, links_2, cfg.alpha(), cfg.beta(), cfg.hbar());
        out.phi_mixed_2 = closed_2.phi_mixed;
        require_uniform_mixed_zero(out.phi_mixed_2, closed_2);

        out.delta_phi_inner = out.phi_2 - out.phi_1;
        if (cfg.coherent()) {
            const double alpha = cfg.alpha();
            const double expected = cfg.n * alpha * alpha *
                                    (cfg.e_spatial_1 * cfg.e_spatial_1 -
                                     e_x_tilde * e_x_tilde) /
                                    (4.0 * cfg.hbar() * cfg.beta());
            if (std::abs(out.delta_phi_inner - expected) >
                1e-10 * std::max(1.0, std::abs(expected)))
                throw std::runtime_error(
                    "twinslit: pipeline phase difference disagrees with its closed form");
        }
        return out;
    }
};

}  // namespace

TwinSlitPhases twin_slit_phase(const TwinSlitConfig& config) {
    validate_config(config);
    return SweepEngine(config).evaluate(config.e_spatial_2);
}

double interference_intensity(double delta_phi) { return 2.0 + 2.0 * std::cos(delta_phi); }

MaximaResult maxima_condition(const TwinSlitConfig& config) {
    validate_config(config);
    MaximaResult r;
    r.n_value = (config.n / 2.0) *
                (config.e_spatial_1 * config.e_spatial_1 -
                 config.e_spatial_2 * config.e_spatial_2) /
                2.0;
    r.is_maximum = std::abs(r.n_value - std::round(r.n_value)) <= 1e-9;
    return r;
}

WaveCount wave_count(const LadderComplex& ladder, double e_x) {
    WaveCount w;
    w.total_waves = ladder.n * e_x * e_x / 4.0;
    w.waves_per_link = e_x * e_x / 2.0;
    return w;
}

double qm_reference_pattern(double v_phi, double t1, double t2, double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("qm_reference_pattern: lambda must be positive");
    return 2.0 + 2.0 * std::cos(2.0 * std::numbers::pi * v_phi * (t1 - t2) / lambda);
}

std::vector<PatternRow> pattern_sweep(const TwinSlitConfig& base,
                                      std::span<const double> e_x_tilde_values) {
    validate_config(base);
    if (e_x_tilde_values.empty())
        throw std::invalid_argument("pattern_sweep: empty sweep list");

    const SweepEngine engine(base);
    std::vector<PatternRow> rows;
    rows.reserve(e_x_tilde_values.size());
    for (double e_x_tilde : e_x_tilde_values) {
        const TwinSlitPhases phases = engine.evaluate(e_x_tilde);
        TwinSlitConfig row_config = base;
        row_config.e_spatial_2 = e_x_tilde;
        const MaximaResult maxima = maxima_condition(row_config);

        PatternRow row;
        row.e_x_tilde = e_x_tilde;
        row.delta_phi = phases.delta_phi_inner;
        row.intensity = interference_intensity(phases.delta_phi_inner);
        row.n_value = maxima.n_value;
        row.is_maximum = maxima.is_maximum;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ladderamp
