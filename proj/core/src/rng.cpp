#include "grover/rng.hpp"

#include <cmath>
#include <numbers>

namespace grover {

namespace {
constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;
}

double DeterministicRng::uniform01() {
    return static_cast<double>(engine_() >> 11) * kTwoPow53Inv;
}

double DeterministicRng::symmetric() {
    return 2.0 * uniform01() - 1.0;
}

double DeterministicRng::normal() {
    // u1 in (0, 1] keeps the log finite.
    const double u1 = static_cast<double>((engine_() >> 11) + 1) * kTwoPow53Inv;
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace grover
