#pragma once

#include <cstdint>
#include <random>

namespace ladderamp::tools {

// Seeded generator with hand-rolled distributions so reports are
// byte-identical across runs and standard-library versions.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    // away from zero so it can scale kernels
    double nonzero(double lo, double hi) {
        for (;;) {
            const double v = uniform(lo, hi);
            if (v > 0.05 || v < -0.05) return v;
        }
    }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {  // inclusive
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace ladderamp::tools
