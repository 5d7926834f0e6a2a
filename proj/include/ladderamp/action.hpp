#pragma once

#include <span>
#include <vector>

#include "ladderamp/graph.hpp"
#include "ladderamp/intmat.hpp"
#include "ladderamp/matrix.hpp"

namespace ladderamp {

// Dimensionless link magnitudes, one per edge in graph order.
struct LinkValues {
    std::vector<double> values;
};

// Kernel of the discrete action: the graph Laplacian scaled by beta together
// with the relationally defined source vector. The Laplacian is kept both
// exactly (integers) and as reals; beta is stored separately so phase
// formulas can divide by the unscaled eigenvalues.
struct ActionKernel {
    OrientedGraph graph;
    IntMatrix laplacian_exact;     // boundary1 * boundary1^T
    Matrix laplacian;              // same entries, promoted to reals
    std::vector<double> source;    // alpha * boundary1 * links
    double alpha = 1.0;            // momentum scale
    double beta = 1.0;             // momentum/length scale
    double hbar = 1.0;             // action scale

    std::size_t size() const { return laplacian.rows(); }
    Matrix a_matrix() const;       // beta * laplacian
};

// Builds the kernel for a graph and link assignment. Throws on dimension
// mismatch, alpha == 0, beta == 0, or hbar <= 0.
ActionKernel assemble_kernel(const OrientedGraph& graph, const LinkValues& links,
                             double alpha, double beta, double hbar);

// Self-consistency check: with links recomputed as the coboundary of the
// supplied vertex values, A*v and (beta/alpha)*J describe the same vector.
// For integer-valued v both routes are evaluated in exact integer arithmetic
// (the Laplacian product on one side, nested boundary maps on the other), so
// the reported residual is exactly zero whenever the identity holds,
// independent of alpha and beta. lhs/rhs are rounded to doubles for audit.
struct SccReport {
    double max_abs_residual = 0.0;
    bool exact_arithmetic = false;     // integer route taken
    std::vector<double> lhs;           // A * v
    std::vector<double> rhs;           // (beta/alpha) * J, J = alpha * d1(d1^T v)
};

SccReport check_scc(const ActionKernel& kernel, std::span<const double> vertex_values);

// Discrete-action matrix for two coupled oscillators sampled on n/2 time
// steps each: tridiagonal blocks with m/dt + k*dt at the ends and
// 2m/dt + k*dt inside, off-diagonal -m/dt, and cross-block diagonal k12*dt.
Matrix harmonic_kernel(int n, double m, double dt, double k, double k12);

}  // namespace ladderamp
