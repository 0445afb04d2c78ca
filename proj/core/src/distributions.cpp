#include "grover/distributions.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "grover/errors.hpp"
#include "grover/io.hpp"
#include "grover/rng.hpp"

namespace grover {

namespace {

constexpr int kZeroVectorRetries = 3;

std::vector<amplitude> sample(const DistributionSpec& spec, std::uint64_t seed) {
    const auto n = spec.config.n_states();
    std::vector<amplitude> amps(n);
    DeterministicRng rng(seed);
    switch (spec.kind) {
    case DistributionKind::uniform:
        std::fill(amps.begin(), amps.end(), amplitude{1.0 / std::sqrt(static_cast<double>(n))});
        break;
    case DistributionKind::delta:
        amps[spec.delta_target] = 1.0;
        break;
    case DistributionKind::random_real:
        for (auto& a : amps) {
            a = rng.symmetric();
        }
        break;
    case DistributionKind::random_complex:
        for (auto& a : amps) {
            const double re = rng.symmetric();
            const double im = rng.symmetric();
            a = {re, im};
        }
        break;
    case DistributionKind::gaussian_real:
        for (auto& a : amps) {
            a = spec.gaussian_mean + spec.gaussian_spread * rng.normal();
        }
        break;
    }
    return amps;
}

} // namespace

std::string_view to_string(DistributionKind kind) noexcept {
    switch (kind) {
    case DistributionKind::uniform:
        return "uniform";
    case DistributionKind::delta:
        return "delta";
    case DistributionKind::random_real:
        return "random-real";
    case DistributionKind::random_complex:
        return "random-complex";
    case DistributionKind::gaussian_real:
        return "gaussian-real";
    }
    return "unknown";
}

DistributionKind parse_distribution_kind(std::string_view name) {
    for (auto kind : {DistributionKind::uniform, DistributionKind::delta, DistributionKind::random_real,
                      DistributionKind::random_complex, DistributionKind::gaussian_real}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw ValidationError("unknown distribution '" + std::string(name) +
                          "' (expected uniform, delta, random-real, random-complex or gaussian-real)");
}

AmplitudeState generate(const DistributionSpec& spec) {
    if (spec.kind == DistributionKind::delta && spec.delta_target >= spec.config.n_states()) {
        throw ValidationError("delta target " + std::to_string(spec.delta_target) + " out of range");
    }
    if (spec.kind == DistributionKind::gaussian_real &&
        !(spec.gaussian_spread > 0.0 && std::isfinite(spec.gaussian_spread) && std::isfinite(spec.gaussian_mean))) {
        throw ValidationError("gaussian spread must be positive and finite");
    }

    for (int attempt = 0; attempt <= kZeroVectorRetries; ++attempt) {
        auto amps = sample(spec, spec.seed + static_cast<std::uint64_t>(attempt));
        double total = 0.0;
        for (const auto& a : amps) {
            total += std::norm(a);
        }
        if (total > 0.0 && std::isfinite(total)) {
            const double scale = 1.0 / std::sqrt(total);
            for (auto& a : amps) {
                a *= scale;
            }
            return AmplitudeState(spec.config, std::move(amps), 0);
        }
    }
    throw InvariantViolation("sampled a zero vector " + std::to_string(kZeroVectorRetries + 1) + " times");
}

AmplitudeState ingest(std::istream& in, const IngestOptions& options) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed state JSON: ") + e.what());
    }
    return state_from_json(doc, options);
}

AmplitudeState ingest(const std::filesystem::path& path, const IngestOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open state file " + path.string());
    }
    return ingest(in, options);
}

} // namespace grover
