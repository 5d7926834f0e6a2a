#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ladderamp/matrix.hpp"

namespace ladderamp {

enum class SolverMethod {
    Auto,         // Jacobi up to a size threshold, then the tridiagonal backend
    Jacobi,       // cyclic Jacobi rotations, the reference implementation
    Tridiagonal,  // dense tridiagonalization + implicit QL (library backend)
};

// Full symmetric eigendecomposition, eigenvalues ascending, eigenvector i in
// column i. null_indices lists eigenvalues below zero_tolerance in magnitude;
// connected-graph Laplacians have exactly one.
struct SpectralData {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
    double zero_tolerance = 0.0;
    std::vector<std::size_t> null_indices;

    std::size_t size() const { return eigenvalues.size(); }

    std::optional<std::size_t> null_index() const {
        if (null_indices.size() == 1) return null_indices.front();
        return std::nullopt;
    }
};

// Decomposes a symmetric matrix. zero_tolerance <= 0 selects the default of
// 1e-9 relative to the largest eigenvalue magnitude, applied after solving.
// Throws std::invalid_argument for non-symmetric input and std::runtime_error
// if the iteration fails to converge within its sweep cap.
SpectralData eigendecompose_symmetric(const Matrix& matrix, double zero_tolerance = 0.0,
                                      SolverMethod method = SolverMethod::Auto);

// Coefficients of a vector in the eigenbasis; the null-mode component is
// surfaced separately because downstream phase formulas must exclude it.
struct SourceProjection {
    std::vector<double> coefficients;          // one per eigenvector, same order
    std::optional<std::size_t> null_index;
    double null_component = 0.0;               // 0 when there is no null mode
};

SourceProjection project_source(const SpectralData& spectral, std::span<const double> source);

}  // namespace ladderamp
