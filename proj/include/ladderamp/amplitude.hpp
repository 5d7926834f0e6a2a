#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "ladderamp/action.hpp"
#include "ladderamp/graph.hpp"
#include "ladderamp/spectral.hpp"

namespace ladderamp {

// Total phase of the restricted two-source amplitude: minus the sum of
// squared source projections over twice the nonzero eigenvalues, scaled by
// hbar*beta. The null mode is excluded; a significant null projection of the
// source or a second near-zero eigenvalue (disconnected graph) throws.
double phase_numeric(const ActionKernel& kernel, const SpectralData& spectral);

// Row-space-restricted Gaussian amplitude. Magnitude and phase are reported
// separately and never normalized; the log magnitude stays finite when the
// plain magnitude over/underflows at large vertex counts.
struct SymmetryAmplitude {
    std::complex<double> z;
    double phase_total = 0.0;               // sum of mode_terms
    double prefactor_magnitude = 0.0;       // (2pi)^((N-1)/2) / sqrt(prod beta*a_i)
    double prefactor_log_magnitude = 0.0;
    double prefactor_phase = 0.0;           // (N-1)*pi/4, principal branch
    std::vector<double> mode_terms;         // per nonzero mode, ascending order
};

SymmetryAmplitude symmetry_amplitude(const ActionKernel& kernel, const SpectralData& spectral);

// Closed-form phase split for canonically indexed ladders: a purely spatial
// part, a purely temporal part, and a mixed part. phase() reproduces
// phase_numeric without any eigendecomposition.
struct LadderPhaseDecomposition {
    double phi_spatial = 0.0;
    double phi_temporal = 0.0;
    double phi_mixed = 0.0;
    double phase = 0.0;  // -(phi_spatial + phi_temporal + phi_mixed) / (2*hbar*beta)

    double total_inner() const { return phi_spatial + phi_temporal + phi_mixed; }
};

LadderPhaseDecomposition ladder_phase_closed_form(const LadderComplex& ladder,
                                                  const LinkValues& links, double alpha,
                                                  double beta, double hbar);

// Sum ranges of the closed-form decomposition as actually implemented,
// echoed into verification reports. M = N/2 is the rung count.
struct ResolvedSumLimits {
    std::string spatial_k = "1..N/2";
    std::string temporal_k = "1..N/2-1";
    std::string mode_j = "1..N/2-1";
    std::string mixed_denominator = "1 + 2*sin^2(j*pi/N)";
};

// Extremum of the quadratic mode phase f(Q) = sum(a_i Q_i^2/2 + Jhat_i Q_i):
// Q_i = -Jhat_i/a_i with f there equal to -sum Jhat_i^2/(2 a_i). Only nonzero
// eigenvalues are accepted.
struct StationaryPhase {
    std::vector<double> extremum;
    double value = 0.0;
};

StationaryPhase stationary_phase_extremum(std::span<const double> eigenvalues,
                                          std::span<const double> projections);

// Runs the extremum route on a kernel's nonzero modes, rescales by
// 1/(hbar*beta) and checks it against phase_numeric to 1e-12; a mismatch
// throws.
struct StationaryPhaseCheck {
    StationaryPhase stationary;
    double value_scaled = 0.0;    // stationary.value / (hbar*beta)
    double phase_reference = 0.0; // phase_numeric on the same inputs
    double abs_difference = 0.0;
};

StationaryPhaseCheck stationary_phase_check(const ActionKernel& kernel,
                                            const SpectralData& spectral);

// One-dimensional mode factor of the restricted integral: quadrature of
// exp(i(a q^2/2 + j q) - eps q^2) over a window of width 20/sqrt(eps),
// extrapolated across the eps list to eps -> 0, next to the closed form
// sqrt(2 pi i / a) * exp(-i j^2 / (2a)). a == 0 is the excluded divergent
// direction and throws.
struct FresnelModeResult {
    std::complex<double> estimate;                 // extrapolated quadrature
    std::complex<double> closed_form;
    std::vector<std::complex<double>> regulated;   // one value per epsilon
};

FresnelModeResult fresnel_mode_integral(double a, double j,
                                        std::span<const double> epsilons);

// Geometric epsilon schedule scaled by |a|, small enough for the
// extrapolation error to sit well below 1e-3 for any mode strength.
std::vector<double> fresnel_default_epsilons(double a);

}  // namespace ladderamp
