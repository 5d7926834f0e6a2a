#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ladderamp/action.hpp"
#include "ladderamp/amplitude.hpp"
#include "ladderamp/graph.hpp"
#include "ladderamp/io.hpp"
#include "ladderamp/spectral.hpp"
#include "ladderamp/twinslit.hpp"

#include "verify_battery.hpp"

namespace {

using namespace ladderamp;

// exit codes: 0 all checks pass, 1 a consistency check failed, 2 usage error
constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& content, const std::string& output_path) {
    if (output_path.empty())
        std::cout << content;
    else
        write_text_file(output_path, content);
}

std::vector<double> parse_value_list(const std::string& text) {
    std::vector<double> values;
    std::string token;
    std::stringstream stream(text);
    while (std::getline(stream, token, ',')) {
        if (token.empty()) continue;
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size())
            throw std::invalid_argument("cannot parse number: '" + token + "'");
        values.push_back(v);
    }
    return values;
}

std::vector<double> read_value_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open links file: " + path);
    std::vector<double> values;
    std::string token;
    while (f >> token) {
        for (double v : parse_value_list(token)) values.push_back(v);
    }
    return values;
}

std::vector<double> parse_sweep_range(const std::string& text) {
    double lo = 0.0, hi = 0.0, step = 0.0;
    char c1 = 0, c2 = 0;
    std::stringstream stream(text);
    if (!(stream >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':')
        throw std::invalid_argument("sweep must be lo:hi:step, got '" + text + "'");
    if (!(step > 0.0)) throw std::invalid_argument("sweep step must be positive");
    if (hi < lo) throw std::invalid_argument("sweep upper bound below lower bound");
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) values.push_back(lo + step * static_cast<double>(i));
    return values;
}

struct LadderOptions {
    int n = 6;
    bool dump_operators = false;
    std::string output;
};

int run_ladder(const LadderOptions& opt) {
    const LadderComplex ladder = build_canonical_ladder(opt.n);
    if (!verify_boundary_of_boundary(ladder.base).is_zero) {
        std::cerr << "ladder: composite boundary map is nonzero\n";
        return kExitCheckFailure;
    }

    nlohmann::json out = {{"command", "ladder"},
                          {"N", opt.n},
                          {"edge_count", ladder.base.edges.size()},
                          {"plaquette_count", ladder.base.plaquettes.size()},
                          {"graph", graph_to_json(ladder.base)}};
    emit(out.dump(2) + "\n", opt.output);

    if (opt.dump_operators) {
        const std::string base = opt.output.empty() ? "ladder" : opt.output;
        write_text_file(base + ".boundary1.csv", to_csv(boundary1(ladder.base).entries));
        write_text_file(base + ".boundary2.csv", to_csv(boundary2(ladder.base).entries));
    }
    std::cerr << "ladder: " << opt.n << " vertices, " << ladder.base.edges.size()
              << " edges, " << ladder.base.plaquettes.size() << " plaquettes\n";
    return kExitPass;
}

struct VerifyOptions {
    int n = 6;
    std::uint64_t seed = 12345;
    std::string output;
};

int run_verify(const VerifyOptions& opt) {
    if (opt.n < 4 || opt.n % 2 != 0)
        throw std::invalid_argument("verify: N must be an even integer >= 4");
    const tools::VerifyReport report = tools::run_verify_battery(opt.n, opt.seed);
    emit(report.to_json().dump(2) + "\n", opt.output);
    std::cerr << "seed " << opt.seed << "\n";
    for (const tools::CheckResult& c : report.checks)
        std::cerr << c.name << ": " << (c.pass ? "pass" : "FAIL")
                  << " (residual " << format_double(c.residual) << ")\n";
    return report.all_pass ? kExitPass : kExitCheckFailure;
}

struct AmplitudeOptions {
    int n = 6;
    std::string links_inline;
    std::string links_file;
    double alpha = 1.0;
    double beta = 1.0;
    double hbar = 1.0;
    std::string output;
    std::string dump_kernel;
    std::string dump_spectrum;
    bool dump_eigenvectors = false;
};

int run_amplitude(const AmplitudeOptions& opt) {
    if (!opt.links_inline.empty() && !opt.links_file.empty())
        throw std::invalid_argument("amplitude: pass either --links or --links-file, not both");
    if (opt.links_inline.empty() && opt.links_file.empty())
        throw std::invalid_argument("amplitude: link values are required");

    const LadderComplex ladder = build_canonical_ladder(opt.n);
    LinkValues links;
    links.values = opt.links_file.empty() ? parse_value_list(opt.links_inline)
                                          : read_value_file(opt.links_file);
    if (links.values.size() != static_cast<std::size_t>(ladder.edge_count()))
        throw std::invalid_argument("amplitude: expected " +
                                    std::to_string(ladder.edge_count()) +
                                    " link values, got " +
                                    std::to_string(links.values.size()));

    const ActionKernel kernel =
        assemble_kernel(ladder.base, links, opt.alpha, opt.beta, opt.hbar);
    const SpectralData spectral = eigendecompose_symmetric(kernel.laplacian);
    const SymmetryAmplitude amplitude = symmetry_amplitude(kernel, spectral);
    const LadderPhaseDecomposition decomposition =
        ladder_phase_closed_form(ladder, links, opt.alpha, opt.beta, opt.hbar);

    // sample re-derivations: the same phase must come out of the plain
    // spectral route and of the stationary-extremum route
    const double phase_again = phase_numeric(kernel, spectral);
    if (phase_again != amplitude.phase_total) {
        std::cerr << "amplitude: phase re-derivation mismatch\n";
        return kExitCheckFailure;
    }
    const StationaryPhaseCheck stationary = stationary_phase_check(kernel, spectral);

    AmplitudeResiduals residuals;
    residuals.closed_vs_numeric_rel =
        std::abs(decomposition.phase - amplitude.phase_total) /
        std::max(1.0, std::abs(amplitude.phase_total));
    const SourceProjection proj = project_source(spectral, kernel.source);
    residuals.null_projection_rel =
        std::abs(proj.null_component) / std::max(norm2(kernel.source), 1e-300);
    if (std::isfinite(amplitude.prefactor_magnitude) && amplitude.prefactor_magnitude > 0.0) {
        const double want = amplitude.prefactor_phase + amplitude.phase_total;
        double diff = std::arg(amplitude.z) - want;
        diff = std::remainder(diff, 2.0 * std::numbers::pi);
        residuals.arg_consistency = std::abs(diff);
    }
    residuals.stationary_phase_abs = stationary.abs_difference;
    if (residuals.closed_vs_numeric_rel > 1e-9) {
        std::cerr << "amplitude: closed form and spectral phase disagree\n";
        return kExitCheckFailure;
    }

    emit(amplitude_report_json(kernel, amplitude, decomposition, residuals).dump(2) + "\n",
         opt.output);

    if (!opt.dump_kernel.empty()) {
        write_text_file(opt.dump_kernel + ".A.csv", to_csv(kernel.a_matrix()));
        write_text_file(opt.dump_kernel + ".J.csv", to_csv_row(kernel.source));
        write_text_file(opt.dump_kernel + ".kernel.json",
                        kernel_sidecar_json(kernel).dump(2) + "\n");
    }
    if (!opt.dump_spectrum.empty()) {
        write_text_file(opt.dump_spectrum + ".eigenvalues.csv",
                        to_csv_row(spectral.eigenvalues));
        if (opt.dump_eigenvectors)
            write_text_file(opt.dump_spectrum + ".eigenvectors.csv",
                            to_csv(spectral.eigenvectors));
    }
    return kExitPass;
}

struct TwinSlitOptions {
    int n = 8;
    double e_temporal = 1.0;
    double e_spatial = 1.0;
    std::optional<double> e_spatial_tilde;
    std::optional<double> e_temporal_tilde;
    std::string sweep;
    double lambda = 1.0;
    double h = 1.0;
    std::string format = "csv";
    std::string output;
};

int run_twinslit(const TwinSlitOptions& opt) {
    TwinSlitConfig config;
    config.n = opt.n;
    config.e_temporal = opt.e_temporal;
    config.e_spatial_1 = opt.e_spatial;
    config.e_spatial_2 = opt.e_spatial_tilde.value_or(opt.e_spatial);
    config.lambda = opt.lambda;
    config.h = opt.h;
    config.e_temporal_2 = opt.e_temporal_tilde;
    validate_config(config);
    if (opt.format != "csv" && opt.format != "json")
        throw std::invalid_argument("twinslit: format must be csv or json");

    std::vector<double> sweep_values;
    if (!opt.sweep.empty())
        sweep_values = parse_sweep_range(opt.sweep);
    else
        sweep_values.push_back(config.e_spatial_2);

    const std::vector<PatternRow> rows = pattern_sweep(config, sweep_values);

    // re-derive one sample row through the single-shot path
    const PatternRow& probe = rows[rows.size() / 2];
    TwinSlitConfig probe_config = config;
    probe_config.e_spatial_2 = probe.e_x_tilde;
    const TwinSlitPhases probe_phases = twin_slit_phase(probe_config);
    if (interference_intensity(probe_phases.delta_phi_inner) != probe.intensity) {
        std::cerr << "twinslit: sample row re-derivation mismatch\n";
        return kExitCheckFailure;
    }

    if (opt.format == "csv")
        emit(pattern_to_csv(rows), opt.output);
    else
        emit(pattern_to_json(config, rows).dump(2) + "\n", opt.output);

    std::size_t maxima = 0;
    std::vector<double> first_n;
    for (const PatternRow& r : rows) {
        if (!r.is_maximum) continue;
        ++maxima;
        if (first_n.size() < 3) first_n.push_back(r.n_value);
    }
    std::cerr << "rows " << rows.size() << ", maxima " << maxima;
    if (!first_n.empty()) {
        std::cerr << ", first n values:";
        for (double v : first_n) std::cerr << ' ' << format_double(v);
    }
    std::cerr << '\n';
    if (!config.coherent())
        std::cerr << "warning: unequal temporal links, outside the coherent-source model\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ladderamp: two-source symmetry amplitudes on ladder-graph chain complexes"};
    app.require_subcommand(1);

    LadderOptions ladder_opt;
    CLI::App* ladder_cmd =
        app.add_subcommand("ladder", "build a canonical ladder and export it");
    ladder_cmd->add_option("--N", ladder_opt.n, "vertex count (even, >= 4)");
    ladder_cmd->add_flag("--dump-operators", ladder_opt.dump_operators,
                         "write both boundary operators as CSV");
    ladder_cmd->add_option("--output", ladder_opt.output, "output path (default stdout)");

    VerifyOptions verify_opt;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the invariant battery and emit a JSON report");
    verify_cmd->add_option("--N", verify_opt.n, "ladder size for the battery");
    verify_cmd->add_option("--seed", verify_opt.seed, "seed for randomized checks");
    verify_cmd->add_option("--output", verify_opt.output, "report path (default stdout)");

    AmplitudeOptions amp_opt;
    CLI::App* amp_cmd =
        app.add_subcommand("amplitude", "amplitude report for user-supplied links");
    amp_cmd->add_option("--N", amp_opt.n, "ladder size");
    amp_cmd->add_option("--links", amp_opt.links_inline, "comma-separated link values");
    amp_cmd->add_option("--links-file", amp_opt.links_file, "file of link values");
    amp_cmd->add_option("--alpha", amp_opt.alpha, "source scale");
    amp_cmd->add_option("--beta", amp_opt.beta, "kernel scale");
    amp_cmd->add_option("--hbar", amp_opt.hbar, "action scale");
    amp_cmd->add_option("--output", amp_opt.output, "report path (default stdout)");
    amp_cmd->add_option("--dump-kernel", amp_opt.dump_kernel, "kernel dump path prefix");
    amp_cmd->add_option("--dump-spectrum", amp_opt.dump_spectrum, "spectrum dump path prefix");
    amp_cmd->add_flag("--dump-eigenvectors", amp_opt.dump_eigenvectors,
                      "also dump the eigenvector matrix");

    auto add_twinslit_options = [](CLI::App* cmd, TwinSlitOptions& opt, bool sweep_required) {
        cmd->set_help_flag("--help", "print help");  // frees -h for the --h option below
        cmd->add_option("--N", opt.n, "vertices per ladder (even, >= 4)");
        cmd->add_option("--e-T", opt.e_temporal, "shared temporal link value");
        cmd->add_option("--e-x", opt.e_spatial, "slit-1 spatial link value");
        cmd->add_option("--e-x-tilde", opt.e_spatial_tilde, "slit-2 spatial link value");
        cmd->add_option("--e-T2", opt.e_temporal_tilde,
                        "slit-2 temporal link value (exploratory, breaks coherence)");
        auto* sweep = cmd->add_option("--sweep", opt.sweep, "slit-2 sweep as lo:hi:step");
        if (sweep_required) sweep->required();
        cmd->add_option("--lambda", opt.lambda, "relational length unit");
        cmd->add_option("--h", opt.h, "action unit");
        cmd->add_option("--format", opt.format, "csv or json");
        cmd->add_option("--output", opt.output, "pattern path (default stdout)");
    };

    TwinSlitOptions twin_opt;
    CLI::App* twin_cmd =
        app.add_subcommand("twinslit", "two-slit phases and interference pattern");
    add_twinslit_options(twin_cmd, twin_opt, false);

    TwinSlitOptions sweep_opt;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "interference pattern over a slit-2 sweep");
    add_twinslit_options(sweep_cmd, sweep_opt, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (ladder_cmd->parsed()) return run_ladder(ladder_opt);
        if (verify_cmd->parsed()) return run_verify(verify_opt);
        if (amp_cmd->parsed()) return run_amplitude(amp_opt);
        if (twin_cmd->parsed()) return run_twinslit(twin_opt);
        if (sweep_cmd->parsed()) return run_twinslit(sweep_opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailure;
    }
    return kExitUsage;
}
