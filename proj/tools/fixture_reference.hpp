#pragma once

#include <array>
#include <cstdint>

#include "ladderamp/intmat.hpp"

// Frozen regression targets for the six-vertex reference fixture: its two
// boundary operators, the induced Laplacian, and the signed source pattern.
namespace ladderamp::reference {

inline IntMatrix fixture_boundary1() {
    constexpr std::array<std::array<int, 7>, 6> rows = {{
        {-1, 0, 0, -1, 0, 0, 0},
        {1, -1, -1, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, -1},
        {0, 0, 0, 1, -1, 0, 0},
        {0, 1, 0, 0, 1, -1, 0},
        {0, 0, 0, 0, 0, 1, 1},
    }};
    IntMatrix m(6, 7);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 7; ++j) m.at(i, j) = rows[i][j];
    return m;
}

inline IntMatrix fixture_boundary2() {
    constexpr std::array<std::array<int, 2>, 7> rows = {{
        {-1, 0},
        {-1, 1},
        {0, -1},
        {1, 0},
        {1, 0},
        {0, 1},
        {0, -1},
    }};
    IntMatrix m(7, 2);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = rows[i][j];
    return m;
}

inline IntMatrix fixture_laplacian() {
    constexpr std::array<std::array<int, 6>, 6> rows = {{
        {2, -1, 0, -1, 0, 0},
        {-1, 3, -1, 0, -1, 0},
        {0, -1, 2, 0, 0, -1},
        {-1, 0, 0, 2, -1, 0},
        {0, -1, 0, -1, 3, -1},
        {0, 0, -1, 0, -1, 2},
    }};
    IntMatrix m(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace ladderamp::reference
