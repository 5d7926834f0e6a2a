#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <queue>
#include <random>
#include <stdexcept>
#include <vector>

#include "ladderamp/graph.hpp"
#include "ladderamp/intmat.hpp"

// Test-only oracles, all independent of the library's computation paths.
namespace oracles {

// Exact characteristic polynomial coefficients [1, c1, ..., cn] of an integer
// matrix, via the trace recursion M_k = A (M_{k-1} + c_{k-1} I),
// c_k = -tr(M_k)/k. Every division is exact; a remainder means a bug.
inline std::vector<std::int64_t> characteristic_polynomial(const ladderamp::IntMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("characteristic_polynomial: not square");
    std::vector<std::int64_t> coeffs{1};
    ladderamp::IntMatrix m = a;
    std::int64_t c = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            ladderamp::IntMatrix shifted = m;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c;
            m = a * shifted;
        }
        std::int64_t trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += m.at(i, i);
        if (trace % static_cast<std::int64_t>(k) != 0)
            throw std::logic_error("characteristic_polynomial: inexact division");
        c = -trace / static_cast<std::int64_t>(k);
        coeffs.push_back(c);
    }
    return coeffs;
}

// Coefficients of prod (lambda - r) for integer roots r, highest power first.
inline std::vector<std::int64_t> polynomial_from_roots(const std::vector<std::int64_t>& roots) {
    std::vector<std::int64_t> coeffs{1};
    for (std::int64_t r : roots) {
        std::vector<std::int64_t> next(coeffs.size() + 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i] += coeffs[i];
            next[i + 1] -= r * coeffs[i];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

// Exact rank by fraction-free (Bareiss) elimination over the integers.
inline std::size_t integer_rank(ladderamp::IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t row = 0;
    std::int64_t prev = 1;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(row, j), m.at(pivot, j));
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                const std::int64_t num = m.at(row, col) * m.at(i, j) -
                                         m.at(i, col) * m.at(row, j);
                if (num % prev != 0) throw std::logic_error("integer_rank: inexact division");
                m.at(i, j) = num / prev;
            }
            m.at(i, col) = 0;
        }
        prev = m.at(row, col);
        ++row;
    }
    return row;
}

inline int connected_components(const ladderamp::OrientedGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count));
    for (const ladderamp::Edge& e : g.edges) {
        adj[static_cast<std::size_t>(e.tail)].push_back(e.head);
        adj[static_cast<std::size_t>(e.head)].push_back(e.tail);
    }
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count), false);
    int components = 0;
    for (int start = 0; start < g.vertex_count; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++components;
        std::queue<int> queue;
        queue.push(start);
        seen[static_cast<std::size_t>(start)] = true;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            for (int w : adj[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    queue.push(w);
                }
        }
    }
    return components;
}

// Ladder Laplacian spectrum from the product structure of a path with a
// single edge: {4 sin^2(j pi / n)} and {4 sin^2(j pi / n) + 2}, j = 0..n/2-1.
inline std::vector<double> ladder_spectrum(int n) {
    std::vector<double> values;
    for (int j = 0; j < n / 2; ++j) {
        const double s = std::sin(j * std::numbers::pi / n);
        values.push_back(4.0 * s * s);
        values.push_back(4.0 * s * s + 2.0);
    }
    std::sort(values.begin(), values.end());
    return values;
}

// Seeded generator with hand-rolled draws, deterministic across library
// versions.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    double nonzero(double lo, double hi) {
        for (;;) {
            const double v = uniform(lo, hi);
            if (v > 0.05 || v < -0.05) return v;
        }
    }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(engine_() %
                                              static_cast<std::uint64_t>(hi - lo + 1));
    }

    std::vector<double> links(std::size_t count, double lo = -2.0, double hi = 2.0) {
        std::vector<double> v(count);
        for (double& x : v) x = uniform(lo, hi);
        return v;
    }

    std::vector<int> permutation(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(p[static_cast<std::size_t>(i)],
                      p[static_cast<std::size_t>(uniform_int(0, i))]);
        return p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace oracles
