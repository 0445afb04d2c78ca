#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grover/analytic.hpp"
#include "grover/distributions.hpp"
#include "grover/state.hpp"

namespace grover::app {

struct SeriesPoint {
    std::uint64_t t = 0;
    amplitude k_bar;
    amplitude l_bar;
    double probability = 0.0;
    double norm = 0.0;
};

/// Largest deviations between the iterative engine and the closed form.
struct Agreement {
    double max_amplitude_deviation = 0.0;
    double max_probability_deviation = 0.0;
};

struct SampleOutcome {
    std::uint64_t index = 0;
    bool marked = false;
};

struct RunRecord {
    std::vector<SeriesPoint> series;  ///< steps + 1 entries, t = 0 first
    ClosedFormSolution solution;
    MeasurementPlan plan;
    Agreement agreement;
    std::optional<SampleOutcome> sample;
};

/// Allowed |norm(t) - norm(0)| before a run is declared broken.
inline constexpr double kNormDriftTolerance = 1e-10;

/// Iterates `steps` Grover steps from `initial`, recording the series and
/// comparing every step against the reconstructed closed-form state. With a
/// sample seed, also draws one measurement outcome from the final state.
/// Throws InvariantViolation when the norm drifts by more than kNormDriftTolerance.
[[nodiscard]] RunRecord simulate(const AmplitudeState& initial, std::uint64_t steps,
                                 std::optional<std::uint64_t> sample_seed = std::nullopt);

/// Draws a basis index from |a_i|^2 of `state` with a seeded generator.
[[nodiscard]] SampleOutcome sample_outcome(const AmplitudeState& state, std::uint64_t seed);

struct SweepCell {
    std::uint64_t n = 0;
    std::uint64_t r = 1;
    DistributionKind dist = DistributionKind::uniform;
    std::uint64_t seed = 0;
};

struct SweepRow {
    SweepCell cell;
    bool ok = false;
    std::string error;
    std::optional<double> t_exact;   ///< closed-form T at j = 0 (real ratio only)
    std::optional<double> t_approx;  ///< three-term expansion (real ratio, l_bar0 != 0)
    std::uint64_t t_scan = 0;        ///< numeric-scan optimum
    double p_scan = 0.0;             ///< analytic P at t_scan
    double p_achieved = 0.0;         ///< iterative-engine P at t_scan
    double p_max = 0.0;
    PlanMethod method = PlanMethod::numeric_scan;
};

struct SweepOptions {
    bool allow_large_r = false;
    unsigned threads = 1;
};

/// Never throws; failures are recorded in the row.
[[nodiscard]] SweepRow run_sweep_cell(const SweepCell& cell, const SweepOptions& options);

/// Rows in the order of `cells`. Cells run on `options.threads` workers.
[[nodiscard]] std::vector<SweepRow> run_sweep(const std::vector<SweepCell>& cells, const SweepOptions& options);

/// Log-log least-squares slope of mean t_scan against N, per (r, dist) group.
struct ScalingFit {
    std::uint64_t r = 0;
    DistributionKind dist = DistributionKind::uniform;
    double slope = 0.0;
    std::size_t points = 0;
};

[[nodiscard]] std::vector<ScalingFit> fit_scaling(const std::vector<SweepRow>& rows);

} // namespace grover::app
