#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ladderamp/graph.hpp"
#include "ladderamp/spectral.hpp"
#include "ladderamp/twinslit.hpp"

#include "support/oracles.hpp"

using namespace ladderamp;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("uniform link assignment") {
    const LadderComplex six = build_canonical_ladder(6);
    const LinkValues links = uniform_ladder_links(six, 1.0, 2.0);
    CHECK(links.values == std::vector<double>{1, 1, 1, 1, 2, 2, 2});

    const LinkValues zero = uniform_ladder_links(six, 0.0, 0.0);
    for (double v : zero.values) CHECK(v == 0.0);

    const LadderComplex eight = build_canonical_ladder(8);
    const LinkValues mixed = uniform_ladder_links(eight, 0.5, 1.5);
    int temporal = 0, spatial = 0;
    for (double v : mixed.values) {
        if (v == 0.5) ++temporal;
        if (v == 1.5) ++spatial;
    }
    CHECK(temporal == 6);
    CHECK(spatial == 4);
}

TEST_CASE("twin slit phases") {
    SUBCASE("identical slits interfere constructively") {
        TwinSlitConfig cfg;
        cfg.n = 6;
        cfg.e_temporal = 1.0;
        cfg.e_spatial_1 = 1.2;
        cfg.e_spatial_2 = 1.2;
        const TwinSlitPhases phases = twin_slit_phase(cfg);
        CHECK(phases.delta_phi_inner == 0.0);
        CHECK(interference_intensity(phases.delta_phi_inner) == doctest::Approx(4.0));
    }

    SUBCASE("phase difference follows the closed form") {
        TwinSlitConfig cfg;
        cfg.n = 6;
        cfg.e_temporal = 0.9;
        cfg.e_spatial_1 = 1.5;
        cfg.e_spatial_2 = 0.5;
        cfg.lambda = 2.0;
        cfg.h = 3.0;
        const TwinSlitPhases phases = twin_slit_phase(cfg);
        const double alpha = cfg.alpha();
        const double expected = cfg.n * alpha * alpha *
                                (cfg.e_spatial_1 * cfg.e_spatial_1 -
                                 cfg.e_spatial_2 * cfg.e_spatial_2) /
                                (4.0 * cfg.hbar() * cfg.beta());
        CHECK(phases.delta_phi_inner == doctest::Approx(expected).epsilon(1e-10));
        CHECK(std::abs(phases.phi_mixed_1) <= 1e-12);
        CHECK(std::abs(phases.phi_mixed_2) <= 1e-12);
    }

    SUBCASE("swapping the slits negates the difference") {
        TwinSlitConfig cfg;
        cfg.n = 8;
        cfg.e_temporal = 0.7;
        cfg.e_spatial_1 = 1.4;
        cfg.e_spatial_2 = 0.6;
        TwinSlitConfig swapped = cfg;
        std::swap(swapped.e_spatial_1, swapped.e_spatial_2);
        const double d1 = twin_slit_phase(cfg).delta_phi_inner;
        const double d2 = twin_slit_phase(swapped).delta_phi_inner;
        CHECK(d2 == doctest::Approx(-d1).epsilon(1e-12));
        CHECK(interference_intensity(d1) == doctest::Approx(interference_intensity(d2)));
    }

    SUBCASE("scaled by the unit choices in the stated way") {
        // the inner difference is N pi (e1^2 - e2^2) / 2 regardless of lambda
        // and h once alpha, beta, hbar are all derived from them
        for (double lambda : {0.5, 1.0, 3.0})
            for (double h : {1.0, 6.62607015}) {
                TwinSlitConfig cfg;
                cfg.n = 10;
                cfg.e_temporal = 0.3;
                cfg.e_spatial_1 = 1.1;
                cfg.e_spatial_2 = 0.4;
                cfg.lambda = lambda;
                cfg.h = h;
                const double expected = cfg.n * kPi *
                                        (cfg.e_spatial_1 * cfg.e_spatial_1 -
                                         cfg.e_spatial_2 * cfg.e_spatial_2) /
                                        2.0;
                CHECK(twin_slit_phase(cfg).delta_phi_inner ==
                      doctest::Approx(expected).epsilon(1e-10));
            }
    }

    SUBCASE("invalid configurations throw") {
        TwinSlitConfig cfg;
        cfg.n = 7;
        CHECK_THROWS_AS(twin_slit_phase(cfg), std::invalid_argument);
        cfg.n = 8;
        cfg.lambda = 0.0;
        CHECK_THROWS_AS(twin_slit_phase(cfg), std::invalid_argument);
    }
}

TEST_CASE("pipeline phase difference at raw unit scales") {
    // two uniform six-vertex ladders differing only in the rung value, with
    // alpha, beta, hbar all 1 and a squared-rung difference of 2: the
    // difference of the two pipeline phases is N * diff / 4 = 3
    const LadderComplex ladder = build_canonical_ladder(6);
    const SpectralData spectral = eigendecompose_symmetric(
        assemble_kernel(ladder.base, uniform_ladder_links(ladder, 0.0, 0.0), 1, 1, 1)
            .laplacian);
    const double e_t = 0.9;
    const LinkValues slit1 = uniform_ladder_links(ladder, e_t, std::sqrt(3.0));
    const LinkValues slit2 = uniform_ladder_links(ladder, e_t, 1.0);
    const double phi1 =
        phase_numeric(assemble_kernel(ladder.base, slit1, 1, 1, 1), spectral);
    const double phi2 =
        phase_numeric(assemble_kernel(ladder.base, slit2, 1, 1, 1), spectral);
    CHECK(phi2 - phi1 == doctest::Approx(3.0).epsilon(1e-11));
}

TEST_CASE("interference intensity") {
    CHECK(interference_intensity(0.0) == 4.0);
    CHECK(interference_intensity(kPi) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(interference_intensity(kPi / 2.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("maxima quantization") {
    TwinSlitConfig cfg;
    cfg.n = 8;
    cfg.e_spatial_1 = std::sqrt(1.5);
    cfg.e_spatial_2 = 1.0;  // difference of squares: 1/2
    const MaximaResult r = maxima_condition(cfg);
    CHECK(r.n_value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.is_maximum);

    TwinSlitConfig central;
    central.n = 6;
    central.e_spatial_1 = 1.3;
    central.e_spatial_2 = 1.3;
    const MaximaResult c = maxima_condition(central);
    CHECK(c.n_value == 0.0);
    CHECK(c.is_maximum);

    TwinSlitConfig off;
    off.n = 6;
    off.e_spatial_1 = std::sqrt(4.0 / 3.0);
    off.e_spatial_2 = 1.0;  // difference of squares: 1/3 -> n = 1/2
    const MaximaResult o = maxima_condition(off);
    CHECK(o.n_value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(o.is_maximum);
}

TEST_CASE("wave count") {
    const LadderComplex eight = build_canonical_ladder(8);
    const WaveCount w = wave_count(eight, std::sqrt(2.0));
    CHECK(w.total_waves == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(w.waves_per_link == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(wave_count(eight, 0.0).total_waves == 0.0);

    const LadderComplex six = build_canonical_ladder(6);
    const WaveCount w6 = wave_count(six, std::sqrt(4.0 / 3.0));
    CHECK(w6.total_waves == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(w6.waves_per_link == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("reference pattern") {
    CHECK(qm_reference_pattern(1.0, 2.0, 2.0, 1.0) == 4.0);
    CHECK(qm_reference_pattern(1.0, 0.5, 0.0, 1.0) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(qm_reference_pattern(1.0, 3.0, 0.0, 1.0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK_THROWS_AS(qm_reference_pattern(1.0, 1.0, 0.0, 0.0), std::invalid_argument);

    // functional identity with the graph-side pattern: both are 2 + 2 cos
    for (double x : {0.0, 0.3, 2.0, -1.7}) {
        const double t1 = x, t2 = 0.0, v = 1.0, lambda = 2.0 * kPi;
        CHECK(interference_intensity(2.0 * kPi * v * (t1 - t2) / lambda) ==
              qm_reference_pattern(v, t1, t2, lambda));
    }
}

TEST_CASE("pattern sweep") {
    TwinSlitConfig cfg;
    cfg.n = 8;
    cfg.e_temporal = 1.0;
    cfg.e_spatial_1 = 1.5;

    SUBCASE("degenerate sweep is the central maximum") {
        const std::vector<double> single{cfg.e_spatial_1};
        const std::vector<PatternRow> rows = pattern_sweep(cfg, single);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].intensity == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(rows[0].n_value == 0.0);
        CHECK(rows[0].is_maximum);
    }

    SUBCASE("empty sweep throws") {
        CHECK_THROWS_AS(pattern_sweep(cfg, std::vector<double>{}), std::invalid_argument);
    }

    SUBCASE("rows are internally consistent and flag integer counts") {
        std::vector<double> values;
        for (int i = 0; i <= 60; ++i) values.push_back(i * 0.025);
        const std::vector<PatternRow> rows = pattern_sweep(cfg, values);
        REQUIRE(rows.size() == values.size());
        int flagged = 0;
        for (const PatternRow& row : rows) {
            CHECK(row.intensity == doctest::Approx(2.0 + 2.0 * std::cos(row.delta_phi))
                                       .epsilon(1e-12));
            TwinSlitConfig row_cfg = cfg;
            row_cfg.e_spatial_2 = row.e_x_tilde;
            CHECK(row.n_value == maxima_condition(row_cfg).n_value);
            if (row.is_maximum) {
                ++flagged;
                CHECK(std::abs(row.intensity - 4.0) <= 1e-6);
                // grid refinement around the flagged row: intensity is a
                // local maximum of the continuous pattern
                const double h = 1e-4;
                TwinSlitConfig left = cfg, right = cfg;
                left.e_spatial_2 = row.e_x_tilde - h;
                right.e_spatial_2 = row.e_x_tilde + h;
                if (left.e_spatial_2 >= 0.0) {
                    const double il =
                        interference_intensity(twin_slit_phase(left).delta_phi_inner);
                    const double ir =
                        interference_intensity(twin_slit_phase(right).delta_phi_inner);
                    CHECK(row.intensity >= il);
                    CHECK(row.intensity >= ir);
                }
            }
        }
        CHECK(flagged > 0);
    }

    SUBCASE("incoherent configurations skip the closed-form assertion") {
        TwinSlitConfig incoherent = cfg;
        incoherent.e_temporal_2 = 0.5;
        CHECK_FALSE(incoherent.coherent());
        const std::vector<double> single{1.0};
        const std::vector<PatternRow> rows = pattern_sweep(incoherent, single);
        CHECK(rows.size() == 1);
        // unequal temporal links shift the difference away from the
        // coherent closed form
        const double alpha = incoherent.alpha();
        const double coherent_value =
            incoherent.n * alpha * alpha *
            (incoherent.e_spatial_1 * incoherent.e_spatial_1 - 1.0) /
            (4.0 * incoherent.hbar() * incoherent.beta());
        CHECK(rows[0].delta_phi != doctest::Approx(coherent_value).epsilon(1e-6));
    }
}
