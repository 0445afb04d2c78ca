#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grover/search_config.hpp"
#include "grover/state.hpp"

namespace grover {

/// Relative tolerance on Im(k_bar0 * conj(l_bar0)) / |k_bar0 l_bar0| below
/// which the ratio k_bar(0)/l_bar(0) is treated as real.
inline constexpr double kRealRatioTolerance = 1e-9;

/// Exact solution of the generalized Grover dynamics.
///
/// All dynamics follow from the initial marked/unmarked averages:
///
///   k_bar(t) = k_bar0 cos(wt) + l_bar0 sqrt((N-r)/r) sin(wt)
///   l_bar(t) = l_bar0 cos(wt) - k_bar0 sqrt(r/(N-r)) sin(wt)
///
/// with cos w = 1 - 2r/N. Individual amplitudes are the averages plus
/// per-state deviations that are constants of motion (the unmarked ones
/// alternate sign every step).
///
/// Time t counts steps since the state the solution was built from.
/// Built from summary statistics alone the solution is "scalar-only":
/// every planning quantity is available but per-state reconstruction is not.
/// Immutable once built.
class ClosedFormSolution {
public:
    [[nodiscard]] std::uint64_t n_states() const noexcept { return n_states_; }
    [[nodiscard]] std::uint64_t r() const noexcept { return r_; }
    [[nodiscard]] std::uint64_t initial_step() const noexcept { return initial_step_; }
    [[nodiscard]] double omega() const noexcept { return omega_; }
    [[nodiscard]] amplitude k_bar0() const noexcept { return k_bar0_; }
    [[nodiscard]] amplitude l_bar0() const noexcept { return l_bar0_; }
    [[nodiscard]] double sigma_k_sq0() const noexcept { return sigma_k_sq0_; }
    [[nodiscard]] double sigma_l_sq0() const noexcept { return sigma_l_sq0_; }

    /// Whether k_bar0/l_bar0 is real, so the phase form and the closed-form
    /// optimal time apply.
    [[nodiscard]] bool real_ratio() const noexcept { return real_ratio_; }

    /// Phase-form parameters k_bar(t) = alpha sin(wt + phi), l_bar(t) = beta cos(wt + phi).
    /// alpha and beta share the global phase of the initial averages; phi lies
    /// in [-pi/2, pi/2]. Meaningful only when real_ratio().
    [[nodiscard]] amplitude alpha() const noexcept { return alpha_; }
    [[nodiscard]] amplitude beta() const noexcept { return beta_; }
    [[nodiscard]] double phi() const noexcept { return phi_; }

    /// 1 - (N-r) sigma_l^2(0); upper bound on P(t), time independent.
    [[nodiscard]] double p_max() const noexcept { return p_max_; }

    [[nodiscard]] bool scalar_only() const noexcept { return !config_.has_value(); }
    /// Marked index set of the source state; empty when scalar-only.
    [[nodiscard]] const std::optional<SearchConfig>& config() const noexcept { return config_; }
    /// k_i(0) - k_bar(0) for the marked states, in index order. Empty when scalar-only.
    [[nodiscard]] std::span<const amplitude> deviations_marked() const noexcept { return deviations_marked_; }
    /// l_i(0) - l_bar(0) for the unmarked states, in index order. Empty when scalar-only.
    [[nodiscard]] std::span<const amplitude> deviations_unmarked() const noexcept { return deviations_unmarked_; }

    friend ClosedFormSolution solve(const AmplitudeState& initial);
    friend ClosedFormSolution solve(const SummaryStats& initial, const SearchConfig& config);

private:
    ClosedFormSolution() = default;
    void init_scalars(std::uint64_t n, std::uint64_t r, const SummaryStats& s);

    std::uint64_t n_states_ = 0;
    std::uint64_t r_ = 0;
    std::uint64_t initial_step_ = 0;
    double omega_ = 0.0;
    amplitude k_bar0_;
    amplitude l_bar0_;
    double sigma_k_sq0_ = 0.0;
    double sigma_l_sq0_ = 0.0;
    bool real_ratio_ = false;
    amplitude alpha_;
    amplitude beta_;
    double phi_ = 0.0;
    double p_max_ = 0.0;
    std::optional<SearchConfig> config_;
    std::vector<amplitude> deviations_marked_;
    std::vector<amplitude> deviations_unmarked_;
};

/// Full solution including per-state deviations.
[[nodiscard]] ClosedFormSolution solve(const AmplitudeState& initial);

/// Scalar-only solution from summary statistics; never touches a statevector,
/// so N may go up to 2^53.
[[nodiscard]] ClosedFormSolution solve(const SummaryStats& initial, const SearchConfig& config);

struct AveragePair {
    amplitude k_bar;
    amplitude l_bar;
};

/// (k_bar(t), l_bar(t)). Valid for complex initial averages.
[[nodiscard]] AveragePair average_amplitudes(const ClosedFormSolution& sol, std::uint64_t t);
/// Same, for real-valued t.
[[nodiscard]] AveragePair average_amplitudes_at(const ClosedFormSolution& sol, double t);

/// (alpha sin(wt + phi), beta cos(wt + phi)).
/// Throws NotApplicable unless sol.real_ratio().
[[nodiscard]] AveragePair phase_form(const ClosedFormSolution& sol, std::uint64_t t);
[[nodiscard]] AveragePair phase_form_at(const ClosedFormSolution& sol, double t);

/// Statevector after t steps: k_i(t) = k_bar(t) + dk_i, l_i(t) = l_bar(t) + (-1)^t dl_i.
/// Throws UnsupportedOperation for scalar-only solutions.
[[nodiscard]] AmplitudeState reconstruct(const ClosedFormSolution& sol, std::uint64_t t);

/// P(t) = P_max - (N-r) |l_bar(t)|^2. Throws InvariantViolation if the value
/// leaves [-1e-10, 1 + 1e-10]; the result is never clamped.
[[nodiscard]] double success_probability_analytic(const ClosedFormSolution& sol, std::uint64_t t);
[[nodiscard]] double success_probability_at(const ClosedFormSolution& sol, double t);

enum class PlanMethod { closed_form, numeric_scan };

[[nodiscard]] std::string_view to_string(PlanMethod method) noexcept;

struct MeasurementPlan {
    double t_real = 0.0;          ///< optimal real-valued time
    std::uint64_t t_step = 0;     ///< chosen integer step count
    std::uint64_t j = 0;          ///< branch index of the closed form
    double predicted_success = 0.0;
    PlanMethod method = PlanMethod::closed_form;
};

/// T_j = ((j + 1/2) pi - phi) / w, the j-th zero of l_bar(t) at or after t = 0.
/// The integer step is whichever of floor(T_j), ceil(T_j) has the larger
/// analytic success probability; ties go to the smaller step.
/// Throws FallbackRequired when k_bar0/l_bar0 is complex.
[[nodiscard]] MeasurementPlan optimal_time(const ClosedFormSolution& sol, std::uint64_t j = 0);

/// Integer argmax of the analytic success probability over one period of P(t),
/// t in [0, ceil(pi/w)]. Ties go to the earliest step. Works for complex ratios.
[[nodiscard]] MeasurementPlan optimal_time_numeric(const ClosedFormSolution& sol);

/// Last index examined by optimal_time_numeric.
[[nodiscard]] std::uint64_t numeric_scan_limit(const ClosedFormSolution& sol);

/// T ~ -(1/2) k_bar0/l_bar0 + (pi/4) sqrt(N/r) - (pi/24) sqrt(r/N); accurate
/// to O(r/N). Throws NotApplicable for a complex ratio or l_bar0 = 0.
[[nodiscard]] double optimal_time_approx(const ClosedFormSolution& sol);

/// Closed-form plan when the ratio is real, numeric scan otherwise.
[[nodiscard]] MeasurementPlan best_plan(const ClosedFormSolution& sol, std::uint64_t j = 0);

/// Numerical verification of the 2x2 diagonalization behind the closed form.
struct DiagonalizationReport {
    double a = 0.0;   ///< (N - 2r)/N
    double b = 0.0;   ///< 2(N - r)/N
    double c = 0.0;   ///< 2r/N
    std::complex<double> lambda_minus;
    std::complex<double> lambda_plus;
    double gamma = 0.0;            ///< |lambda|, should be 1
    double omega_eigen = 0.0;      ///< arg(lambda_plus)
    double omega_closed = 0.0;     ///< 2 asin(sqrt(r/N))
    double cos_omega_error = 0.0;  ///< |cos(omega_closed) - (1 - 2r/N)|
    double basis_error = 0.0;      ///< max |S^-1 A S - diag(lambda-, lambda+)| and |S S^-1 - I|
    double max_power_deviation = 0.0;  ///< max over t of |A^t v(0) - v_closed(t)|
    std::uint64_t power_steps = 0;
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

/// Checks: gamma = 1 and cos w = 1 - 2r/N within 1e-12, the eigenvector basis
/// S diagonalizes A, and powering A up to `power_steps` times matches the
/// closed-form averages within 1e-10. Uses a uniform initial pair unless one
/// is given.
[[nodiscard]] DiagonalizationReport verify_diagonalization(const SearchConfig& config,
                                                           std::uint64_t power_steps = 100);
[[nodiscard]] DiagonalizationReport verify_diagonalization(const SearchConfig& config, AveragePair initial,
                                                           std::uint64_t power_steps = 100);

} // namespace grover
