#include "ladderamp/amplitude.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ladderamp {

namespace {

constexpr double kPi = std::numbers::pi;

// Shared entry guard: dimensions line up, the spectrum has exactly one null
// mode, and the source has no weight along it.
SourceProjection guarded_projection(const ActionKernel& kernel, const SpectralData& spectral) {
    if (spectral.size() != kernel.size())
        throw std::invalid_argument("amplitude: spectral data does not match kernel size");
    if (spectral.null_indices.size() > 1)
        throw std::runtime_error(
            "amplitude: multiple near-zero eigenvalues; the graph is disconnected");
    if (spectral.null_indices.empty())
        throw std::runtime_error("amplitude: no null mode found; expected a graph Laplacian");
    SourceProjection proj = project_source(spectral, kernel.source);
    const double jnorm = norm2(kernel.source);
    if (std::abs(proj.null_component) > 1e-10 * std::max(jnorm, 1e-300) && jnorm > 0.0)
        throw std::invalid_argument(
            "amplitude: source has a significant null-mode projection (" +
            std::to_string(proj.null_component) + "); kernel and spectrum are inconsistent");
    return proj;
}

}  // namespace

double phase_numeric(const ActionKernel& kernel, const SpectralData& spectral) {
    const SourceProjection proj = guarded_projection(kernel, spectral);
    const std::size_t null = *spectral.null_index();
    double phase = 0.0;
    for (std::size_t i = 0; i < spectral.size(); ++i) {
        if (i == null) continue;
        const double c = proj.coefficients[i];
        phase -= c * c / (2.0 * spectral.eigenvalues[i] * kernel.hbar * kernel.beta);
    }
    return phase;
}

SymmetryAmplitude symmetry_amplitude(const ActionKernel& kernel, const SpectralData& spectral) {
    const SourceProjection proj = guarded_projection(kernel, spectral);
    const std::size_t null = *spectral.null_index();
    const std::size_t n = spectral.size();

    SymmetryAmplitude amp;
    amp.mode_terms.reserve(n - 1);
    double log_product = 0.0;
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == null) continue;
        const double a = spectral.eigenvalues[i];
        const double c = proj.coefficients[i];
        amp.mode_terms.push_back(-c * c / (2.0 * a * kernel.hbar * kernel.beta));
        const double scaled = kernel.beta * a;
        log_product += std::log(std::abs(scaled));
        if (scaled < 0.0) sign = -sign;
    }
    for (double t : amp.mode_terms) amp.phase_total += t;

    const auto modes = static_cast<double>(n - 1);
    amp.prefactor_log_magnitude = 0.5 * (modes * std::log(2.0 * kPi) - log_product);
    amp.prefactor_magnitude = std::exp(amp.prefactor_log_magnitude);
    // principal branch: i^((N-1)/2) = exp(i (N-1) pi / 4); a negative
    // eigenvalue product contributes another -pi/2 through its square root
    amp.prefactor_phase = modes * kPi / 4.0 + (sign < 0 ? -kPi / 2.0 : 0.0);

    const double arg = amp.prefactor_phase + amp.phase_total;
    amp.z = {amp.prefactor_magnitude * std::cos(arg), amp.prefactor_magnitude * std::sin(arg)};
    return amp;
}

LadderPhaseDecomposition ladder_phase_closed_form(const LadderComplex& ladder,
                                                  const LinkValues& links, double alpha,
                                                  double beta, double hbar) {
    const int n = ladder.n;
    const int m = n / 2;
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("ladder_phase_closed_form: invalid ladder size");
    if (static_cast<int>(ladder.edge_role.size()) != ladder.edge_count() ||
        static_cast<int>(ladder.base.edges.size()) != ladder.edge_count())
        throw std::invalid_argument("ladder_phase_closed_form: edge bookkeeping mismatch");
    for (int k = 0; k < ladder.temporal_per_rail(); ++k)
        if (ladder.edge_role[ladder.rail1_edge(k)] != EdgeRole::TemporalRail1 ||
            ladder.edge_role[ladder.rail2_edge(k)] != EdgeRole::TemporalRail2)
            throw std::invalid_argument("ladder_phase_closed_form: non-canonical edge indexing");
    for (int k = 0; k < ladder.spatial_count(); ++k)
        if (ladder.edge_role[ladder.spatial_edge(k)] != EdgeRole::Spatial)
            throw std::invalid_argument("ladder_phase_closed_form: non-canonical edge indexing");
    if (links.values.size() != static_cast<std::size_t>(ladder.edge_count()))
        throw std::invalid_argument("ladder_phase_closed_form: link vector length mismatch");
    if (beta == 0.0 || !(hbar > 0.0))
        throw std::invalid_argument("ladder_phase_closed_form: invalid beta or hbar");

    const double* e = links.values.data();
    // rail sums/differences and rung values, reindexed once up front
    std::vector<double> rail_sum(m - 1), rail_diff(m - 1), rung(m);
    for (int k = 0; k < m - 1; ++k) {
        rail_sum[k] = e[ladder.rail1_edge(k)] + e[ladder.rail2_edge(k)];
        rail_diff[k] = e[ladder.rail1_edge(k)] - e[ladder.rail2_edge(k)];
    }
    for (int k = 0; k < m; ++k) rung[k] = e[ladder.spatial_edge(k)];

    // sin(idx * pi / n) for idx in [0, 2n): one period, shared by the sine
    // factors (idx = 2jk mod 2n) and the cosine factors (idx offset by n/2)
    const int period = 2 * n;
    std::vector<double> table(static_cast<std::size_t>(period));
    for (int i = 0; i < period; ++i)
        table[static_cast<std::size_t>(i)] = std::sin(static_cast<double>(i) * kPi / n);

    const double alpha_sq = alpha * alpha;
    LadderPhaseDecomposition out;

    double rung_total = 0.0;
    for (int k = 0; k < m; ++k) rung_total += rung[k];
    out.phi_spatial = (2.0 * alpha_sq / n) * rung_total * rung_total;

    const int half = n / 2;
    for (int j = 1; j < m; ++j) {
        const int step = 2 * j;  // both index chains advance by 2j per k
        int idx_sin = step % period;
        int idx_cos = (half + j) % period;
        double t_sum = 0.0, t_diff = 0.0, s_cos = 0.0;
        for (int k = 1; k < m; ++k) {
            const double sv = table[static_cast<std::size_t>(idx_sin)];
            const double cv = table[static_cast<std::size_t>(idx_cos)];
            t_sum += rail_sum[k - 1] * sv;
            t_diff += rail_diff[k - 1] * sv;
            s_cos += rung[k - 1] * cv;
            idx_sin += step;
            if (idx_sin >= period) idx_sin -= period;
            idx_cos += step;
            if (idx_cos >= period) idx_cos -= period;
        }
        s_cos += rung[m - 1] * table[static_cast<std::size_t>(idx_cos)];

        const double sj = table[static_cast<std::size_t>(j)];  // sin(j pi / n)
        out.phi_temporal += (2.0 * alpha_sq / n) * t_sum * t_sum;
        const double mixed = sj * t_diff + s_cos;
        out.phi_mixed += (4.0 * alpha_sq / n) / (1.0 + 2.0 * sj * sj) * mixed * mixed;
    }

    out.phase = -(out.phi_spatial + out.phi_temporal + out.phi_mixed) / (2.0 * hbar * beta);
    return out;
}

StationaryPhase stationary_phase_extremum(std::span<const double> eigenvalues,
                                          std::span<const double> projections) {
    if (eigenvalues.size() != projections.size())
        throw std::invalid_argument("stationary_phase_extremum: length mismatch");
    double top = 1.0;
    for (double a : eigenvalues) top = std::max(top, std::abs(a));
    StationaryPhase sp;
    sp.extremum.resize(eigenvalues.size());
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        if (std::abs(eigenvalues[i]) <= 1e-14 * top)
            throw std::invalid_argument(
                "stationary_phase_extremum: zero eigenvalue in the supplied set");
        sp.extremum[i] = -projections[i] / eigenvalues[i];
        sp.value -= projections[i] * projections[i] / (2.0 * eigenvalues[i]);
    }
    return sp;
}

StationaryPhaseCheck stationary_phase_check(const ActionKernel& kernel,
                                            const SpectralData& spectral) {
    const SourceProjection proj = guarded_projection(kernel, spectral);
    const std::size_t null = *spectral.null_index();
    std::vector<double> evals, coeffs;
    evals.reserve(spectral.size() - 1);
    coeffs.reserve(spectral.size() - 1);
    for (std::size_t i = 0; i < spectral.size(); ++i) {
        if (i == null) continue;
        evals.push_back(spectral.eigenvalues[i]);
        coeffs.push_back(proj.coefficients[i]);
    }

    StationaryPhaseCheck check;
    check.stationary = stationary_phase_extremum(evals, coeffs);
    check.value_scaled = check.stationary.value / (kernel.hbar * kernel.beta);
    check.phase_reference = phase_numeric(kernel, spectral);
    check.abs_difference = std::abs(check.value_scaled - check.phase_reference);
    if (check.abs_difference > 1e-12 * std::max(1.0, std::abs(check.phase_reference)))
        throw std::runtime_error(
            "stationary_phase_check: extremum route disagrees with the spectral phase");
    return check;
}

namespace {

std::complex<double> regulated_integrand(double a, double j, double eps, double q) {
    return std::polar(std::exp(-eps * q * q), 0.5 * a * q * q + j * q);
}

std::complex<double> simpson(double a, double j, double eps, double lo, double hi, long n) {
    const double h = (hi - lo) / static_cast<double>(n);
    std::complex<double> acc = regulated_integrand(a, j, eps, lo) +
                               regulated_integrand(a, j, eps, hi);
    for (long i = 1; i < n; ++i) {
        const double q = lo + h * static_cast<double>(i);
        acc += regulated_integrand(a, j, eps, q) * ((i % 2 != 0) ? 4.0 : 2.0);
    }
    return acc * (h / 3.0);
}

std::complex<double> regulated_integral(double a, double j, double eps) {
    const double window = 10.0 / std::sqrt(eps);  // total width 20/sqrt(eps)
    const double max_freq = std::abs(a) * window + std::abs(j) + 1.0;
    long n = 512;
    while (static_cast<double>(n) < 2.0 * window * max_freq * 12.0 / (2.0 * kPi)) n *= 2;

    std::complex<double> prev = simpson(a, j, eps, -window, window, n);
    for (int refine = 0; refine < 14; ++refine) {
        n *= 2;
        const std::complex<double> next = simpson(a, j, eps, -window, window, n);
        if (std::abs(next - prev) <= 1e-8 * (std::abs(next) + 1e-30)) return next;
        prev = next;
    }
    return prev;
}

}  // namespace

FresnelModeResult fresnel_mode_integral(double a, double j,
                                        std::span<const double> epsilons) {
    if (a == 0.0)
        throw std::invalid_argument(
            "fresnel_mode_integral: the quadratic coefficient is zero; this is the "
            "divergent direction excluded from the restricted integral");
    if (epsilons.empty())
        throw std::invalid_argument("fresnel_mode_integral: empty epsilon list");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (!(epsilons[i] > 0.0))
            throw std::invalid_argument("fresnel_mode_integral: epsilons must be positive");
        if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
            throw std::invalid_argument("fresnel_mode_integral: epsilons must decrease");
    }

    FresnelModeResult result;
    result.regulated.reserve(epsilons.size());
    for (double eps : epsilons) result.regulated.push_back(regulated_integral(a, j, eps));

    // Lagrange extrapolation of the regulated values to eps = 0
    std::complex<double> extrapolated = 0.0;
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        double weight = 1.0;
        for (std::size_t k = 0; k < epsilons.size(); ++k) {
            if (k == i) continue;
            weight *= epsilons[k] / (epsilons[k] - epsilons[i]);
        }
        extrapolated += result.regulated[i] * weight;
    }
    result.estimate = extrapolated;

    result.closed_form = std::sqrt(std::complex<double>(0.0, 2.0 * kPi / a)) *
                         std::polar(1.0, -j * j / (2.0 * a));
    return result;
}

std::vector<double> fresnel_default_epsilons(double a) {
    const double scale = std::max(std::abs(a), 1e-6);
    return {0.05 * scale, 0.025 * scale, 0.0125 * scale, 0.00625 * scale};
}

}  // namespace ladderamp
