#include "experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <thread>

#include "grover/errors.hpp"
#include "grover/rng.hpp"

namespace grover::app {

namespace {

// Keeps the measurement draw independent of the stream that built the state.
constexpr std::uint64_t kSampleStreamOffset = 0x9e3779b97f4a7c15ULL;

SeriesPoint observe(const AmplitudeState& state, std::uint64_t t) {
    const auto s = stats(state);
    return {t, s.k_bar, s.l_bar, success_probability(state), state.norm()};
}

double max_elementwise_deviation(const AmplitudeState& a, const AmplitudeState& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

} // namespace

RunRecord simulate(const AmplitudeState& initial, std::uint64_t steps, std::optional<std::uint64_t> sample_seed) {
    auto sol = solve(initial);
    const auto plan = best_plan(sol);

    std::vector<SeriesPoint> series;
    series.reserve(steps + 1);
    Agreement agreement;

    AmplitudeState state = initial;
    const double norm0 = initial.norm();
    for (std::uint64_t t = 0;; ++t) {
        auto point = observe(state, t);
        if (std::abs(point.norm - norm0) > kNormDriftTolerance) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "norm drifted by %.3e after %llu steps", point.norm - norm0,
                          static_cast<unsigned long long>(t));
            throw InvariantViolation(buf);
        }
        const auto predicted = reconstruct(sol, t);
        agreement.max_amplitude_deviation =
            std::max(agreement.max_amplitude_deviation, max_elementwise_deviation(state, predicted));
        agreement.max_probability_deviation = std::max(
            agreement.max_probability_deviation, std::abs(point.probability - success_probability_analytic(sol, t)));
        series.push_back(point);
        if (t == steps) {
            break;
        }
        state = grover_step(std::move(state));
    }
    std::optional<SampleOutcome> sample;
    if (sample_seed) {
        sample = sample_outcome(state, *sample_seed);
    }
    return RunRecord{std::move(series), std::move(sol), plan, agreement, sample};
}

SampleOutcome sample_outcome(const AmplitudeState& state, std::uint64_t seed) {
    DeterministicRng rng(seed + kSampleStreamOffset);
    const double target = rng.uniform01() * state.norm();
    double cumulative = 0.0;
    std::uint64_t index = state.size() - 1;
    for (std::size_t i = 0; i < state.size(); ++i) {
        cumulative += std::norm(state[i]);
        if (target < cumulative) {
            index = i;
            break;
        }
    }
    return {index, state.config().is_marked(index)};
}

SweepRow run_sweep_cell(const SweepCell& cell, const SweepOptions& options) {
    SweepRow row;
    row.cell = cell;
    try {
        DistributionSpec spec{
            .kind = cell.dist,
            .config = SearchConfig::first_marked(cell.n, cell.r, options.allow_large_r),
            .seed = cell.seed,
        };
        const auto initial = generate(spec);
        const auto sol = solve(initial);
        row.p_max = sol.p_max();
        if (sol.real_ratio()) {
            row.method = PlanMethod::closed_form;
            row.t_exact = optimal_time(sol, 0).t_real;
            if (std::abs(sol.l_bar0()) > 0.0) {
                row.t_approx = optimal_time_approx(sol);
            }
        }
        const auto scan = optimal_time_numeric(sol);
        row.t_scan = scan.t_step;
        row.p_scan = scan.predicted_success;
        row.p_achieved = success_probability(run(initial, scan.t_step));
        row.ok = true;
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
    }
    return row;
}

std::vector<SweepRow> run_sweep(const std::vector<SweepCell>& cells, const SweepOptions& options) {
    std::vector<SweepRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            rows[i] = run_sweep_cell(cells[i], options);
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(cells.size())));
    if (threads == 1) {
        worker();
        return rows;
    }
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    return rows;
}

std::vector<ScalingFit> fit_scaling(const std::vector<SweepRow>& rows) {
    // (r, dist) -> N -> (sum t_scan, count)
    std::map<std::pair<std::uint64_t, DistributionKind>, std::map<std::uint64_t, std::pair<double, std::size_t>>>
        groups;
    for (const auto& row : rows) {
        if (!row.ok) {
            continue;
        }
        auto& acc = groups[{row.cell.r, row.cell.dist}][row.cell.n];
        acc.first += static_cast<double>(row.t_scan);
        acc.second += 1;
    }

    std::vector<ScalingFit> fits;
    for (const auto& [key, by_n] : groups) {
        std::vector<std::pair<double, double>> points;
        for (const auto& [n, acc] : by_n) {
            const double mean = acc.first / static_cast<double>(acc.second);
            if (mean > 0.0) {
                points.emplace_back(std::log(static_cast<double>(n)), std::log(mean));
            }
        }
        if (points.size() < 2) {
            continue;
        }
        double mx = 0.0;
        double my = 0.0;
        for (const auto& [x, y] : points) {
            mx += x;
            my += y;
        }
        mx /= static_cast<double>(points.size());
        my /= static_cast<double>(points.size());
        double sxy = 0.0;
        double sxx = 0.0;
        for (const auto& [x, y] : points) {
            sxy += (x - mx) * (y - my);
            sxx += (x - mx) * (x - mx);
        }
        if (sxx == 0.0) {
            continue;
        }
        fits.push_back({key.first, key.second, sxy / sxx, points.size()});
    }
    return fits;
}

} // namespace grover::app
