#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "grover/search_config.hpp"
#include "grover/state.hpp"

namespace grover {

enum class DistributionKind { uniform, delta, random_real, random_complex, gaussian_real };

[[nodiscard]] std::string_view to_string(DistributionKind kind) noexcept;
/// Accepts the names printed by to_string ("random-real", ...). Throws ValidationError.
[[nodiscard]] DistributionKind parse_distribution_kind(std::string_view name);

/// Recipe for an initial state.
///
/// random-real draws each amplitude uniformly from [-1, 1); random-complex
/// draws real and imaginary parts independently from [-1, 1); gaussian-real
/// draws mean + spread * N(0, 1). All are normalized once afterwards.
struct DistributionSpec {
    DistributionKind kind = DistributionKind::uniform;
    SearchConfig config;
    std::uint64_t seed = 0;
    std::uint64_t delta_target = 0;
    double gaussian_mean = 0.0;
    double gaussian_spread = 1.0;
};

/// Normalized state at step 0. Identical specs give bit-identical amplitudes.
/// A sampled zero vector is redrawn with seed + 1, up to three times.
[[nodiscard]] AmplitudeState generate(const DistributionSpec& spec);

/// Tolerance on sum |a_i|^2 = 1 for ingested states.
inline constexpr double kIngestNormTolerance = 1e-8;

struct IngestOptions {
    /// Scale to unit norm instead of rejecting a norm violation.
    bool renormalize = false;
    bool allow_large_r = false;
};

/// Reads a state JSON document. Throws ParseError for malformed input,
/// ValidationError for out-of-range indices and NormViolation when the norm
/// is off by more than kIngestNormTolerance and renormalize is not set.
[[nodiscard]] AmplitudeState ingest(std::istream& in, const IngestOptions& options = {});
[[nodiscard]] AmplitudeState ingest(const std::filesystem::path& path, const IngestOptions& options = {});

} // namespace grover
