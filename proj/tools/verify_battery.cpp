#include "verify_battery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>

#include "ladderamp/action.hpp"
#include "ladderamp/amplitude.hpp"
#include "ladderamp/graph.hpp"
#include "ladderamp/io.hpp"
#include "ladderamp/spectral.hpp"
#include "ladderamp/twinslit.hpp"

#include "det_rng.hpp"
#include "fixture_reference.hpp"

namespace ladderamp::tools {

namespace {

double rel_diff(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

std::vector<double> random_links(DetRng& rng, std::size_t count) {
    std::vector<double> e(count);
    for (double& v : e) v = rng.uniform(-2.0, 2.0);
    return e;
}

struct Battery {
    int n;
    DetRng rng;
    std::vector<CheckResult> checks;
    LadderComplex ladder;
    OrientedGraph fixture;

    Battery(int n_, std::uint64_t seed)
        : n(n_), rng(seed), ladder(build_canonical_ladder(n_)),
          fixture(build_figure1_fixture()) {}

    void record(const std::string& name, bool pass, double residual) {
        checks.push_back({name, pass, residual});
    }

    void boundary_of_boundary() {
        std::int64_t worst = 0;
        bool pass = true;
        for (const OrientedGraph* g :
             {&fixture, &ladder.base}) {
            const BoundaryProductReport r = verify_boundary_of_boundary(*g);
            worst = std::max(worst, r.max_abs_entry);
            pass = pass && r.is_zero;
        }
        for (int m : {4, 6, 8, 10}) {
            const BoundaryProductReport r =
                verify_boundary_of_boundary(build_canonical_ladder(m).base);
            worst = std::max(worst, r.max_abs_entry);
            pass = pass && r.is_zero;
        }
        record("boundary_of_boundary", pass, static_cast<double>(worst));
    }

    void fixture_regressions() {
        const BoundaryOperator b1 = boundary1(fixture);
        const BoundaryOperator b2 = boundary2(fixture);
        record("fixture_boundary1_regression", b1.entries == reference::fixture_boundary1(),
               0.0);
        record("fixture_boundary2_regression", b2.entries == reference::fixture_boundary2(),
               0.0);
        const IntMatrix lap = b1.entries * b1.entries.transposed();
        record("fixture_laplacian_regression", lap == reference::fixture_laplacian(), 0.0);

        // source pattern: unit link vectors reproduce the boundary columns
        bool pattern_ok = true;
        for (std::size_t j = 0; j < fixture.edges.size(); ++j) {
            LinkValues unit;
            unit.values.assign(fixture.edges.size(), 0.0);
            unit.values[j] = 1.0;
            const ActionKernel k = assemble_kernel(fixture, unit, 1.0, 1.0, 1.0);
            for (std::size_t i = 0; i < 6; ++i)
                pattern_ok = pattern_ok &&
                             k.source[i] == static_cast<double>(b1.entries.at(i, j));
        }
        record("fixture_source_pattern_regression", pattern_ok, 0.0);
    }

    void scc_exact_zero() {
        double worst = 0.0;
        bool pass = true;
        auto run_graph = [&](const OrientedGraph& g, int runs) {
            for (int run = 0; run < runs; ++run) {
                std::vector<double> v(static_cast<std::size_t>(g.vertex_count));
                for (double& x : v) x = static_cast<double>(rng.uniform_int(-9, 9));
                const double alpha = rng.nonzero(-3.0, 3.0);
                const double beta = rng.nonzero(-3.0, 3.0);
                LinkValues links;
                links.values = coboundary_links(g, std::span<const double>(v));
                const ActionKernel kernel = assemble_kernel(g, links, alpha, beta, 1.0);
                const SccReport scc = check_scc(kernel, v);
                worst = std::max(worst, scc.max_abs_residual);
                pass = pass && scc.exact_arithmetic && scc.max_abs_residual == 0.0;
            }
        };
        run_graph(ladder.base, 100);
        run_graph(fixture, 20);
        record("scc_exact_zero", pass, worst);
    }

    void fixture_spectrum(const SpectralData& spectral_fixture) {
        const double expected[6] = {0.0, 1.0, 2.0, 3.0, 3.0, 5.0};
        double worst = 0.0;
        for (int i = 0; i < 6; ++i)
            worst = std::max(worst,
                             std::abs(spectral_fixture.eigenvalues[static_cast<std::size_t>(i)] -
                                      expected[i]));
        const double trace = std::accumulate(spectral_fixture.eigenvalues.begin(),
                                             spectral_fixture.eigenvalues.end(), 0.0);
        worst = std::max(worst, std::abs(trace - 14.0));
        record("fixture_spectrum", worst <= 1e-10, worst);
    }

    void null_mode_alignment(const SpectralData& spectral_fixture,
                             const SpectralData& spectral_ladder) {
        double worst = 0.0;
        bool pass = true;
        for (const SpectralData* s : {&spectral_fixture, &spectral_ladder}) {
            if (!s->null_index()) {
                pass = false;
                continue;
            }
            const std::vector<double> u = s->eigenvectors.column(*s->null_index());
            double total = 0.0;
            for (double x : u) total += x;
            const double cosine =
                std::abs(total) / (std::sqrt(static_cast<double>(u.size())) * norm2(u));
            worst = std::max(worst, 1.0 - cosine);
            pass = pass && (cosine >= 1.0 - 1e-12);
        }
        record("null_mode_alignment", pass, worst);
    }

    void closed_form_vs_spectral_phase(const SpectralData& spectral_ladder) {
        double worst = 0.0;
        for (int run = 0; run < 25; ++run) {
            LinkValues links{random_links(rng, ladder.base.edges.size())};
            const double alpha = rng.nonzero(-2.0, 2.0);
            const double beta = std::abs(rng.nonzero(-2.0, 2.0));
            const double hbar = std::abs(rng.nonzero(-2.0, 2.0));
            const ActionKernel kernel =
                assemble_kernel(ladder.base, links, alpha, beta, hbar);
            const double numeric = phase_numeric(kernel, spectral_ladder);
            const LadderPhaseDecomposition closed =
                ladder_phase_closed_form(ladder, links, alpha, beta, hbar);
            worst = std::max(worst, rel_diff(closed.phase, numeric));
        }
        record("closed_form_vs_spectral_phase", worst <= 1e-9, worst);
    }

    void stationary_phase_identity(const SpectralData& spectral_ladder) {
        double worst = 0.0;
        bool pass = true;
        for (int run = 0; run < 5; ++run) {
            LinkValues links{random_links(rng, ladder.base.edges.size())};
            const ActionKernel kernel = assemble_kernel(ladder.base, links, 1.25, 0.75, 1.5);
            try {
                const StationaryPhaseCheck check =
                    stationary_phase_check(kernel, spectral_ladder);
                worst = std::max(worst, check.abs_difference);
            } catch (const std::exception&) {
                pass = false;
            }
        }
        record("stationary_phase_identity", pass, worst);
    }

    void twin_slit_consistency() {
        TwinSlitConfig cfg;
        cfg.n = n;
        cfg.e_temporal = 0.7;
        cfg.e_spatial_1 = 1.3;
        cfg.e_spatial_2 = 0.9;
        cfg.lambda = 1.0;
        cfg.h = 1.0;
        bool pass = true;
        double worst = 0.0;
        try {
            const TwinSlitPhases phases = twin_slit_phase(cfg);
            worst = std::max(std::abs(phases.phi_mixed_1), std::abs(phases.phi_mixed_2));
            pass = worst <= 1e-12;

            const LadderComplex lad = build_canonical_ladder(n);
            for (double ex : {cfg.e_spatial_1, cfg.e_spatial_2}) {
                const LinkValues links = uniform_ladder_links(lad, cfg.e_temporal, ex);
                const LadderPhaseDecomposition d = ladder_phase_closed_form(
                    lad, links, cfg.alpha(), cfg.beta(), cfg.hbar());
                const double a2 = cfg.alpha() * cfg.alpha();
                const double expected = (n / 2.0) * a2 * ex * ex +
                                        (n - 2.0) * a2 * cfg.e_temporal * cfg.e_temporal;
                const double rd = rel_diff(d.phi_spatial + d.phi_temporal, expected);
                worst = std::max(worst, rd);
                pass = pass && rd <= 1e-12;
            }
        } catch (const std::exception&) {
            pass = false;
        }
        record("twin_slit_consistency", pass, worst);
    }

    void scaling_laws(const SpectralData& spectral_ladder) {
        LinkValues links{random_links(rng, ladder.base.edges.size())};
        const double s = 1.75;
        const ActionKernel base = assemble_kernel(ladder.base, links, 1.1, 0.9, 1.3);
        const ActionKernel alpha_scaled = assemble_kernel(ladder.base, links, 1.1 * s, 0.9, 1.3);
        const ActionKernel beta_scaled = assemble_kernel(ladder.base, links, 1.1, 0.9 * s, 1.3);
        const double phi = phase_numeric(base, spectral_ladder);
        const double phi_alpha = phase_numeric(alpha_scaled, spectral_ladder);
        const double phi_beta = phase_numeric(beta_scaled, spectral_ladder);
        const double worst = std::max(rel_diff(phi_alpha, s * s * phi),
                                      rel_diff(phi_beta, phi / s));
        record("scaling_laws", worst <= 1e-12, worst);
    }

    void gauge_invariance(const SpectralData& spectral_ladder) {
        std::vector<double> v(static_cast<std::size_t>(n));
        for (double& x : v) x = static_cast<double>(rng.uniform_int(-9, 9));
        std::vector<double> shifted = v;
        for (double& x : shifted) x += 5.0;

        auto phase_for = [&](std::span<const double> pot) {
            LinkValues links;
            links.values = coboundary_links(ladder.base, pot);
            const ActionKernel kernel = assemble_kernel(ladder.base, links, 1.0, 1.0, 1.0);
            return phase_numeric(kernel, spectral_ladder);
        };
        const double p0 = phase_for(v);
        const double p1 = phase_for(shifted);
        record("gauge_invariance", p0 == p1, std::abs(p0 - p1));
    }

    void relabeling_invariance(const SpectralData& spectral_ladder) {
        // random vertex permutation, edge order unchanged
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(rng.uniform_int(0, i))]);

        OrientedGraph relabeled = ladder.base;
        for (Edge& e : relabeled.edges) {
            e.tail = perm[static_cast<std::size_t>(e.tail)];
            e.head = perm[static_cast<std::size_t>(e.head)];
        }

        LinkValues links{random_links(rng, ladder.base.edges.size())};
        const ActionKernel k0 = assemble_kernel(ladder.base, links, 1.0, 1.0, 1.0);
        const ActionKernel k1 = assemble_kernel(relabeled, links, 1.0, 1.0, 1.0);
        const double phi0 = phase_numeric(k0, spectral_ladder);
        const double phi1 = phase_numeric(k1, eigendecompose_symmetric(k1.laplacian));
        const double worst = rel_diff(phi1, phi0);
        record("relabeling_invariance", worst <= 1e-10, worst);
    }
};

}  // namespace

VerifyReport run_verify_battery(int n, std::uint64_t seed) {
    Battery battery(n, seed);

    battery.boundary_of_boundary();
    battery.fixture_regressions();
    battery.scc_exact_zero();

    const BoundaryOperator fb1 = boundary1(battery.fixture);
    const Matrix fixture_lap =
        Matrix::from_integers(fb1.entries * fb1.entries.transposed());
    const SpectralData spectral_fixture = eigendecompose_symmetric(fixture_lap);
    const BoundaryOperator lb1 = boundary1(battery.ladder.base);
    const Matrix ladder_lap = Matrix::from_integers(lb1.entries * lb1.entries.transposed());
    const SpectralData spectral_ladder = eigendecompose_symmetric(ladder_lap);

    battery.fixture_spectrum(spectral_fixture);
    battery.null_mode_alignment(spectral_fixture, spectral_ladder);
    battery.closed_form_vs_spectral_phase(spectral_ladder);
    battery.stationary_phase_identity(spectral_ladder);
    battery.twin_slit_consistency();
    battery.scaling_laws(spectral_ladder);
    battery.gauge_invariance(spectral_ladder);
    battery.relabeling_invariance(spectral_ladder);

    VerifyReport report;
    report.n = n;
    report.seed = seed;
    report.checks = std::move(battery.checks);
    report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const CheckResult& c) { return c.pass; });
    return report;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const CheckResult& c : checks)
        checks_json.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
    return {{"command", "verify"},
            {"N", n},
            {"seed", seed},
            {"resolved_sum_limits", resolved_sum_limits_json()},
            {"checks", checks_json},
            {"all_pass", all_pass}};
}

}  // namespace ladderamp::tools
