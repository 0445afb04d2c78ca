#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "grover/search_config.hpp"

namespace grover {

using amplitude = std::complex<double>;

/// Tolerance on sum |a_i|^2 = 1 for a freshly constructed state.
inline constexpr double kNormTolerance = 1e-10;

/// Explicit statevector at step t. Real inputs are embedded with zero imaginary part.
///
/// The norm is validated once, on construction. Engine operations never
/// renormalize, so drift over long runs stays observable.
class AmplitudeState {
public:
    AmplitudeState(SearchConfig config, std::vector<amplitude> amplitudes, std::uint64_t step = 0,
                   double norm_tolerance = kNormTolerance);

    [[nodiscard]] const SearchConfig& config() const noexcept { return config_; }
    [[nodiscard]] std::span<const amplitude> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] const amplitude& operator[](std::size_t i) const noexcept { return amplitudes_[i]; }
    [[nodiscard]] std::uint64_t step() const noexcept { return step_; }
    [[nodiscard]] std::size_t size() const noexcept { return amplitudes_.size(); }

    /// sum_i |a_i|^2
    [[nodiscard]] double norm() const noexcept;

    friend AmplitudeState phase_flip_marked(AmplitudeState state);
    friend AmplitudeState inversion_about_average(AmplitudeState state);
    friend AmplitudeState grover_step(AmplitudeState state);
    friend AmplitudeState run(AmplitudeState state, std::uint64_t steps);
    friend class StateBuilder;

private:
    struct unchecked_t {};
    AmplitudeState(unchecked_t, SearchConfig config, std::vector<amplitude> amplitudes, std::uint64_t step);

    void flip_marked_in_place() noexcept;
    void invert_about_mean_in_place() noexcept;

    SearchConfig config_;
    std::vector<amplitude> amplitudes_;
    std::uint64_t step_;
};

/// Builds states from amplitudes that are known to be normalized up to
/// rounding (analytic reconstruction). Not part of the public API surface.
class StateBuilder {
public:
    static AmplitudeState unchecked(SearchConfig config, std::vector<amplitude> amplitudes, std::uint64_t step) {
        return {AmplitudeState::unchecked_t{}, std::move(config), std::move(amplitudes), step};
    }
};

/// Marked and unmarked averages and variances. Variances use |x - mean|^2,
/// so they are real and non-negative for complex amplitudes.
struct SummaryStats {
    amplitude k_bar;
    amplitude l_bar;
    double sigma_k_sq = 0.0;
    double sigma_l_sq = 0.0;
};

[[nodiscard]] SummaryStats stats(const AmplitudeState& state);

/// C(t) = (2/N) [(N-r) l_bar - r k_bar]. Twice the total average after the
/// marked phase flip.
[[nodiscard]] amplitude weighted_average_c(const AmplitudeState& state);

/// Oracle step: negate every marked amplitude. The step counter is unchanged.
[[nodiscard]] AmplitudeState phase_flip_marked(AmplitudeState state);

/// Diffusion step: a_i -> 2 m - a_i with m the mean of all N amplitudes.
/// O(N); equivalent to multiplying by D with D_ij = 2/N - delta_ij.
[[nodiscard]] AmplitudeState inversion_about_average(AmplitudeState state);

/// inversion_about_average(phase_flip_marked(state)), with step + 1.
[[nodiscard]] AmplitudeState grover_step(AmplitudeState state);

/// `steps` applications of grover_step.
[[nodiscard]] AmplitudeState run(AmplitudeState state, std::uint64_t steps);

/// P(t) = sum over marked i of |k_i(t)|^2.
[[nodiscard]] double success_probability(const AmplitudeState& state);

} // namespace grover
