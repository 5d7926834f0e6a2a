#pragma once

#include <array>

#include "ladderamp/intmat.hpp"

// Frozen reference matrices for the six-vertex fixture, written out digit by
// digit as regression targets; nothing here is computed.
namespace fixture {

inline ladderamp::IntMatrix boundary1_expected() {
    constexpr std::array<std::array<int, 7>, 6> rows = {{
        {-1, 0, 0, -1, 0, 0, 0},
        {1, -1, -1, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, -1},
        {0, 0, 0, 1, -1, 0, 0},
        {0, 1, 0, 0, 1, -1, 0},
        {0, 0, 0, 0, 0, 1, 1},
    }};
    ladderamp::IntMatrix m(6, 7);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 7; ++j) m.at(i, j) = rows[i][j];
    return m;
}

inline ladderamp::IntMatrix boundary2_expected() {
    constexpr std::array<std::array<int, 2>, 7> rows = {{
        {-1, 0},
        {-1, 1},
        {0, -1},
        {1, 0},
        {1, 0},
        {0, 1},
        {0, -1},
    }};
    ladderamp::IntMatrix m(7, 2);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = rows[i][j];
    return m;
}

inline ladderamp::IntMatrix laplacian_expected() {
    constexpr std::array<std::array<int, 6>, 6> rows = {{
        {2, -1, 0, -1, 0, 0},
        {-1, 3, -1, 0, -1, 0},
        {0, -1, 2, 0, 0, -1},
        {-1, 0, 0, 2, -1, 0},
        {0, -1, 0, -1, 3, -1},
        {0, 0, -1, 0, -1, 2},
    }};
    ladderamp::IntMatrix m(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Signed edge incidences behind each source component, vertex by vertex:
// J1 = -e1 - e4, J2 = e1 - e2 - e3, J3 = e3 - e7, J4 = e4 - e5,
// J5 = e2 + e5 - e6, J6 = e6 + e7 (edges 0-based here).
inline std::array<std::array<int, 7>, 6> source_pattern_expected() {
    return {{
        {-1, 0, 0, -1, 0, 0, 0},
        {1, -1, -1, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, -1},
        {0, 0, 0, 1, -1, 0, 0},
        {0, 1, 0, 0, 1, -1, 0},
        {0, 0, 0, 0, 0, 1, 1},
    }};
}

}  // namespace fixture
