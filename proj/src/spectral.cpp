#include "ladderamp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#ifdef LADDERAMP_HAVE_EIGEN
#include <Eigen/Dense>
#endif

namespace ladderamp {

namespace {

// Above this size the cyclic Jacobi sweeps get slow enough (cubic work per
// sweep, strided column traffic) that Auto switches to the tridiagonal
// backend when one is compiled in.
constexpr std::size_t kJacobiAutoLimit = 256;
constexpr int kMaxSweeps = 64;

struct EigenSystem {
    std::vector<double> values;
    Matrix vectors;
};

double off_diagonal_frobenius(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * a.at(i, j) * a.at(i, j);
    return std::sqrt(s);
}

double frobenius(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += a.at(i, j) * a.at(i, j);
    return std::sqrt(s);
}

// Cyclic Jacobi: rotate every off-diagonal pair per sweep until the
// off-diagonal Frobenius norm drops below 1e-14 of the input norm.
EigenSystem jacobi_solve(Matrix a) {
    const std::size_t n = a.rows();
    Matrix v = Matrix::identity(n);
    const double norm = frobenius(a);
    const double target = 1e-14 * norm;

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_frobenius(a) <= target) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v.at(k, p), vkq = v.at(k, q);
                    v.at(k, p) = c * vkp - s * vkq;
                    v.at(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep == kMaxSweeps && off_diagonal_frobenius(a) > target)
        throw std::runtime_error("eigendecompose_symmetric: Jacobi iteration did not "
                                 "converge within the sweep cap");

    EigenSystem sys;
    sys.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) sys.values[i] = a.at(i, i);
    sys.vectors = std::move(v);
    return sys;
}

#ifdef LADDERAMP_HAVE_EIGEN
EigenSystem tridiagonal_solve(const Matrix& a) {
    const auto n = static_cast<Eigen::Index>(a.rows());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecompose_symmetric: tridiagonal solver failed");

    EigenSystem sys;
    sys.values.resize(a.rows());
    sys.vectors = Matrix(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < n; ++i) {
        sys.values[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        for (Eigen::Index r = 0; r < n; ++r)
            sys.vectors.at(static_cast<std::size_t>(r), static_cast<std::size_t>(i)) =
                solver.eigenvectors()(r, i);
    }
    return sys;
}
#endif

void sort_ascending(EigenSystem& sys) {
    const std::size_t n = sys.values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sys.values[a] < sys.values[b]; });

    std::vector<double> values(n);
    Matrix vectors(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = sys.values[order[i]];
        for (std::size_t r = 0; r < n; ++r) vectors.at(r, i) = sys.vectors.at(r, order[i]);
    }
    sys.values = std::move(values);
    sys.vectors = std::move(vectors);
}

}  // namespace

SpectralData eigendecompose_symmetric(const Matrix& matrix, double zero_tolerance,
                                      SolverMethod method) {
    if (matrix.rows() != matrix.cols())
        throw std::invalid_argument("eigendecompose_symmetric: matrix is not square");
    if (matrix.rows() == 0)
        throw std::invalid_argument("eigendecompose_symmetric: matrix is empty");
    const double scale = std::max(1.0, matrix.max_abs());
    if (matrix.max_symmetry_defect() > 1e-12 * scale)
        throw std::invalid_argument("eigendecompose_symmetric: matrix is not symmetric");

    SolverMethod chosen = method;
    if (chosen == SolverMethod::Auto) {
#ifdef LADDERAMP_HAVE_EIGEN
        chosen = matrix.rows() <= kJacobiAutoLimit ? SolverMethod::Jacobi
                                                   : SolverMethod::Tridiagonal;
#else
        chosen = SolverMethod::Jacobi;
#endif
    }

    EigenSystem sys;
    if (chosen == SolverMethod::Jacobi) {
        sys = jacobi_solve(matrix);
    } else {
#ifdef LADDERAMP_HAVE_EIGEN
        sys = tridiagonal_solve(matrix);
#else
        throw std::runtime_error("eigendecompose_symmetric: tridiagonal backend not built");
#endif
    }
    sort_ascending(sys);

    SpectralData data;
    data.eigenvalues = std::move(sys.values);
    data.eigenvectors = std::move(sys.vectors);
    double top = 0.0;
    for (double v : data.eigenvalues) top = std::max(top, std::abs(v));
    data.zero_tolerance = zero_tolerance > 0.0 ? zero_tolerance
                                               : 1e-9 * std::max(top, 1e-300);
    for (std::size_t i = 0; i < data.eigenvalues.size(); ++i)
        if (std::abs(data.eigenvalues[i]) < data.zero_tolerance) data.null_indices.push_back(i);
    return data;
}

SourceProjection project_source(const SpectralData& spectral, std::span<const double> source) {
    const std::size_t n = spectral.size();
    if (source.size() != n)
        throw std::invalid_argument("project_source: vector length mismatch");

    SourceProjection proj;
    proj.coefficients.assign(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        const double jr = source[r];
        if (jr == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            proj.coefficients[i] += spectral.eigenvectors.at(r, i) * jr;
    }
    proj.null_index = spectral.null_index();
    proj.null_component = proj.null_index ? proj.coefficients[*proj.null_index] : 0.0;
    return proj;
}

}  // namespace ladderamp
