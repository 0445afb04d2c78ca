#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace grover {

/// Name and version of the generator behind every seeded ensemble. Bump the
/// version whenever the stream of values for a given seed changes.
inline constexpr std::string_view kRngName = "mt19937_64";
inline constexpr int kRngVersion = 1;

/// Seeded stream of doubles with a fully specified output sequence.
///
/// The engine is std::mt19937_64, whose sequence the standard fixes. The
/// standard distributions are implementation-defined, so the conversions to
/// doubles are done here by hand.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    /// [0, 1) with 53 random bits.
    double uniform01();
    /// [-1, 1)
    double symmetric();
    /// Standard normal via Box-Muller; consumes two draws.
    double normal();

private:
    std::mt19937_64 engine_;
};

} // namespace grover
