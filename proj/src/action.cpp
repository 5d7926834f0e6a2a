#include "ladderamp/action.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ladderamp {

Matrix ActionKernel::a_matrix() const {
    Matrix a(laplacian.rows(), laplacian.cols());
    for (std::size_t i = 0; i < laplacian.rows(); ++i)
        for (std::size_t j = 0; j < laplacian.cols(); ++j)
            a.at(i, j) = beta * laplacian.at(i, j);
    return a;
}

ActionKernel assemble_kernel(const OrientedGraph& graph, const LinkValues& links,
                             double alpha, double beta, double hbar) {
    validate_graph(graph);
    if (links.values.size() != graph.edges.size())
        throw std::invalid_argument("assemble_kernel: expected " +
                                    std::to_string(graph.edges.size()) +
                                    " link values, got " +
                                    std::to_string(links.values.size()));
    for (double v : links.values)
        if (!std::isfinite(v))
            throw std::invalid_argument("assemble_kernel: non-finite link value");
    if (alpha == 0.0) throw std::invalid_argument("assemble_kernel: alpha must be nonzero");
    if (beta == 0.0) throw std::invalid_argument("assemble_kernel: beta must be nonzero");
    if (!(hbar > 0.0)) throw std::invalid_argument("assemble_kernel: hbar must be positive");

    ActionKernel kernel;
    kernel.graph = graph;
    const BoundaryOperator b1 = boundary1(graph);
    kernel.laplacian_exact = b1.entries * b1.entries.transposed();
    kernel.laplacian = Matrix::from_integers(kernel.laplacian_exact);
    kernel.source = apply_boundary1(graph, std::span<const double>(links.values));
    for (double& s : kernel.source) s *= alpha;
    kernel.alpha = alpha;
    kernel.beta = beta;
    kernel.hbar = hbar;
    return kernel;
}

namespace {

bool integer_valued(std::span<const double> v) {
    constexpr double kLimit = 1099511627776.0;  // 2^40, keeps int64 products safe
    for (double x : v)
        if (!(std::abs(x) <= kLimit) || x != std::nearbyint(x)) return false;
    return true;
}

}  // namespace

SccReport check_scc(const ActionKernel& kernel, std::span<const double> vertex_values) {
    const std::size_t n = kernel.size();
    if (vertex_values.size() != n)
        throw std::invalid_argument("check_scc: vertex vector length mismatch");

    SccReport report;
    report.lhs.resize(n);
    report.rhs.resize(n);

    if (integer_valued(vertex_values)) {
        std::vector<std::int64_t> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = static_cast<std::int64_t>(std::llround(vertex_values[i]));
        // Route 1: the assembled Laplacian acting on v.
        const std::vector<std::int64_t> lv = kernel.laplacian_exact * v;
        // Route 2: nested boundary maps, never forming the product matrix.
        const std::vector<std::int64_t> links =
            coboundary_links(kernel.graph, std::span<const std::int64_t>(v));
        const std::vector<std::int64_t> jv =
            apply_boundary1(kernel.graph, std::span<const std::int64_t>(links));
        std::int64_t max_diff = 0;
        for (std::size_t i = 0; i < n; ++i) {
            max_diff = std::max(max_diff, std::abs(lv[i] - jv[i]));
            report.lhs[i] = kernel.beta * static_cast<double>(lv[i]);
            report.rhs[i] = (kernel.beta / kernel.alpha) *
                            (kernel.alpha * static_cast<double>(jv[i]));
        }
        report.max_abs_residual = std::abs(kernel.beta) * static_cast<double>(max_diff);
        report.exact_arithmetic = true;
        return report;
    }

    const std::vector<double> lv = kernel.laplacian * vertex_values;
    const std::vector<double> links = coboundary_links(kernel.graph, vertex_values);
    std::vector<double> jv = apply_boundary1(kernel.graph, std::span<const double>(links));
    double max_resid = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        report.lhs[i] = kernel.beta * lv[i];
        report.rhs[i] = (kernel.beta / kernel.alpha) * (kernel.alpha * jv[i]);
        max_resid = std::max(max_resid, std::abs(report.lhs[i] - report.rhs[i]));
    }
    report.max_abs_residual = max_resid;
    report.exact_arithmetic = false;
    return report;
}

Matrix harmonic_kernel(int n, double m, double dt, double k, double k12) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("harmonic_kernel: n must be an even integer >= 4");
    if (!(m > 0.0) || !(dt > 0.0) || !(k > 0.0))
        throw std::invalid_argument("harmonic_kernel: m, dt and k must be positive");

    const int half = n / 2;
    Matrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    const double hop = -m / dt;
    const double inner = 2.0 * m / dt + k * dt;
    const double end = m / dt + k * dt;
    for (int block = 0; block < 2; ++block) {
        const int off = block * half;
        for (int i = 0; i < half; ++i) {
            const bool boundary = (i == 0 || i == half - 1);
            a.at(off + i, off + i) = boundary ? end : inner;
            if (i + 1 < half) {
                a.at(off + i, off + i + 1) = hop;
                a.at(off + i + 1, off + i) = hop;
            }
        }
    }
    for (int i = 0; i < half; ++i) {
        a.at(i, half + i) = k12 * dt;
        a.at(half + i, i) = k12 * dt;
    }
    return a;
}

}  // namespace ladderamp
