#include "grover/state.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "grover/errors.hpp"

namespace grover {

namespace {

std::string describe_norm(double norm) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", norm);
    return buf;
}

} // namespace

AmplitudeState::AmplitudeState(SearchConfig config, std::vector<amplitude> amplitudes, std::uint64_t step,
                               double norm_tolerance)
    : config_(std::move(config)), amplitudes_(std::move(amplitudes)), step_(step) {
    if (amplitudes_.size() != config_.n_states()) {
        throw ValidationError("expected " + std::to_string(config_.n_states()) + " amplitudes, got " +
                              std::to_string(amplitudes_.size()));
    }
    for (const auto& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ValidationError("amplitudes must be finite");
        }
    }
    const double total = norm();
    if (!(std::abs(total - 1.0) <= norm_tolerance)) {
        throw NormViolation("sum of |amplitude|^2 is " + describe_norm(total) + ", expected 1 within " +
                            describe_norm(norm_tolerance));
    }
}

AmplitudeState::AmplitudeState(unchecked_t, SearchConfig config, std::vector<amplitude> amplitudes,
                               std::uint64_t step)
    : config_(std::move(config)), amplitudes_(std::move(amplitudes)), step_(step) {}

double AmplitudeState::norm() const noexcept {
    double total = 0.0;
    for (const auto& a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void AmplitudeState::flip_marked_in_place() noexcept {
    for (const auto i : config_.marked()) {
        amplitudes_[i] = -amplitudes_[i];
    }
}

void AmplitudeState::invert_about_mean_in_place() noexcept {
    const amplitude sum = std::accumulate(amplitudes_.begin(), amplitudes_.end(), amplitude{});
    const amplitude twice_mean = 2.0 * sum / static_cast<double>(amplitudes_.size());
    for (auto& a : amplitudes_) {
        a = twice_mean - a;
    }
}

SummaryStats stats(const AmplitudeState& state) {
    const auto& config = state.config();
    const auto amps = state.amplitudes();

    amplitude marked_sum{};
    amplitude unmarked_sum{};
    for_each_partition(
        config, [&](std::uint64_t i) { marked_sum += amps[i]; }, [&](std::uint64_t i) { unmarked_sum += amps[i]; });

    SummaryStats out;
    out.k_bar = marked_sum / static_cast<double>(config.r());
    out.l_bar = unmarked_sum / static_cast<double>(config.n_unmarked());

    double marked_dev = 0.0;
    double unmarked_dev = 0.0;
    for_each_partition(
        config, [&](std::uint64_t i) { marked_dev += std::norm(amps[i] - out.k_bar); },
        [&](std::uint64_t i) { unmarked_dev += std::norm(amps[i] - out.l_bar); });
    out.sigma_k_sq = marked_dev / static_cast<double>(config.r());
    out.sigma_l_sq = unmarked_dev / static_cast<double>(config.n_unmarked());
    return out;
}

amplitude weighted_average_c(const AmplitudeState& state) {
    const auto s = stats(state);
    const auto n = static_cast<double>(state.config().n_states());
    const auto r = static_cast<double>(state.config().r());
    return (2.0 / n) * ((n - r) * s.l_bar - r * s.k_bar);
}

AmplitudeState phase_flip_marked(AmplitudeState state) {
    state.flip_marked_in_place();
    return state;
}

AmplitudeState inversion_about_average(AmplitudeState state) {
    state.invert_about_mean_in_place();
    return state;
}

AmplitudeState grover_step(AmplitudeState state) {
    state.flip_marked_in_place();
    state.invert_about_mean_in_place();
    ++state.step_;
    return state;
}

AmplitudeState run(AmplitudeState state, std::uint64_t steps) {
    for (std::uint64_t s = 0; s < steps; ++s) {
        state.flip_marked_in_place();
        state.invert_about_mean_in_place();
    }
    state.step_ += steps;
    return state;
}

double success_probability(const AmplitudeState& state) {
    double p = 0.0;
    for (const auto i : state.config().marked()) {
        p += std::norm(state[i]);
    }
    return p;
}

} // namespace grover
