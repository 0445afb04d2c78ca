#include "grover/analytic.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "grover/errors.hpp"

namespace grover {

namespace {

constexpr double kProbabilitySlack = 1e-10;

bool ratio_is_real(amplitude k, amplitude l) {
    const double scale = std::abs(k) * std::abs(l);
    if (scale == 0.0) {
        return true;
    }
    return std::abs((k * std::conj(l)).imag()) / scale <= kRealRatioTolerance;
}

// sqrt(r/(N-r)); N and r are exact in double up to 2^53.
double marked_ratio_sqrt(std::uint64_t n, std::uint64_t r) {
    return std::sqrt(static_cast<double>(r)) / std::sqrt(static_cast<double>(n - r));
}

} // namespace

std::string_view to_string(PlanMethod method) noexcept {
    switch (method) {
    case PlanMethod::closed_form:
        return "closed-form";
    case PlanMethod::numeric_scan:
        return "numeric-scan";
    }
    return "unknown";
}

void ClosedFormSolution::init_scalars(std::uint64_t n, std::uint64_t r, const SummaryStats& s) {
    if (r == 0 || r >= n) {
        throw ValidationError("closed form needs 0 < r < N");
    }
    n_states_ = n;
    r_ = r;
    // Same angle as acos(1 - 2r/N), without the cancellation for r << N.
    omega_ = 2.0 * std::asin(std::sqrt(static_cast<double>(r) / static_cast<double>(n)));
    k_bar0_ = s.k_bar;
    l_bar0_ = s.l_bar;
    sigma_k_sq0_ = s.sigma_k_sq;
    sigma_l_sq0_ = s.sigma_l_sq;
    p_max_ = 1.0 - static_cast<double>(n - r) * s.sigma_l_sq;

    real_ratio_ = ratio_is_real(k_bar0_, l_bar0_);
    if (!real_ratio_) {
        alpha_ = beta_ = amplitude{std::nan(""), std::nan("")};
        phi_ = std::nan("");
        return;
    }

    // Factor out the common phase so that l_bar0 becomes a non-negative real
    // (or k_bar0 a positive real when l_bar0 = 0). phi then lands in
    // [-pi/2, pi/2] and agrees with the principal arctan of the ratio.
    double theta = 0.0;
    if (std::abs(l_bar0_) > 0.0) {
        theta = std::arg(l_bar0_);
    } else if (std::abs(k_bar0_) > 0.0) {
        theta = std::arg(k_bar0_);
    }
    const amplitude unphase = std::polar(1.0, -theta);
    const double kappa = (k_bar0_ * unphase).real();
    const double lambda = (l_bar0_ * unphase).real();

    const double sq = marked_ratio_sqrt(n, r);
    const double rho = std::hypot(kappa * sq, lambda);
    phi_ = std::atan2(kappa * sq, lambda);
    beta_ = std::polar(rho, theta);
    alpha_ = std::polar(rho / sq, theta);
}

ClosedFormSolution solve(const AmplitudeState& initial) {
    ClosedFormSolution sol;
    const auto& config = initial.config();
    const auto s = stats(initial);
    sol.init_scalars(config.n_states(), config.r(), s);
    sol.initial_step_ = initial.step();
    sol.config_ = config;

    const auto amps = initial.amplitudes();
    sol.deviations_marked_.reserve(config.r());
    sol.deviations_unmarked_.reserve(config.n_unmarked());
    for_each_partition(
        config, [&](std::uint64_t i) { sol.deviations_marked_.push_back(amps[i] - s.k_bar); },
        [&](std::uint64_t i) { sol.deviations_unmarked_.push_back(amps[i] - s.l_bar); });
    return sol;
}

ClosedFormSolution solve(const SummaryStats& initial, const SearchConfig& config) {
    if (!(initial.sigma_k_sq >= 0.0) || !(initial.sigma_l_sq >= 0.0)) {
        throw ValidationError("variances must be non-negative");
    }
    ClosedFormSolution sol;
    sol.init_scalars(config.n_states(), config.r(), initial);
    return sol;
}

AveragePair average_amplitudes_at(const ClosedFormSolution& sol, double t) {
    const double sq = marked_ratio_sqrt(sol.n_states(), sol.r());
    const double c = std::cos(sol.omega() * t);
    const double s = std::sin(sol.omega() * t);
    return {sol.k_bar0() * c + sol.l_bar0() * (s / sq), sol.l_bar0() * c - sol.k_bar0() * (s * sq)};
}

AveragePair average_amplitudes(const ClosedFormSolution& sol, std::uint64_t t) {
    return average_amplitudes_at(sol, static_cast<double>(t));
}

AveragePair phase_form_at(const ClosedFormSolution& sol, double t) {
    if (!sol.real_ratio()) {
        throw NotApplicable("phase form requires a real ratio k_bar(0)/l_bar(0)");
    }
    const double x = sol.omega() * t + sol.phi();
    return {sol.alpha() * std::sin(x), sol.beta() * std::cos(x)};
}

AveragePair phase_form(const ClosedFormSolution& sol, std::uint64_t t) {
    return phase_form_at(sol, static_cast<double>(t));
}

AmplitudeState reconstruct(const ClosedFormSolution& sol, std::uint64_t t) {
    if (sol.scalar_only()) {
        throw UnsupportedOperation("reconstruct needs per-state deviations; solution was built from summary statistics");
    }
    const auto& config = *sol.config();
    const auto avg = average_amplitudes(sol, t);
    const double parity = (t % 2 == 0) ? 1.0 : -1.0;

    std::vector<amplitude> amps(config.n_states());
    auto dk = sol.deviations_marked().begin();
    auto dl = sol.deviations_unmarked().begin();
    for_each_partition(
        config, [&](std::uint64_t i) { amps[i] = avg.k_bar + *dk++; },
        [&](std::uint64_t i) { amps[i] = avg.l_bar + parity * *dl++; });
    return StateBuilder::unchecked(config, std::move(amps), sol.initial_step() + t);
}

double success_probability_at(const ClosedFormSolution& sol, double t) {
    const auto avg = average_amplitudes_at(sol, t);
    const double p = sol.p_max() - static_cast<double>(sol.n_states() - sol.r()) * std::norm(avg.l_bar);
    if (!(p >= -kProbabilitySlack && p <= 1.0 + kProbabilitySlack)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "analytic success probability %.17g outside [0, 1] at t = %.17g", p, t);
        throw InvariantViolation(buf);
    }
    return p;
}

double success_probability_analytic(const ClosedFormSolution& sol, std::uint64_t t) {
    return success_probability_at(sol, static_cast<double>(t));
}

MeasurementPlan optimal_time(const ClosedFormSolution& sol, std::uint64_t j) {
    if (!sol.real_ratio()) {
        throw FallbackRequired("k_bar(0)/l_bar(0) is complex; l_bar(t) need not vanish, use the numeric scan");
    }
    MeasurementPlan plan;
    plan.j = j;
    plan.method = PlanMethod::closed_form;
    plan.t_real = std::max(0.0, ((static_cast<double>(j) + 0.5) * std::numbers::pi - sol.phi()) / sol.omega());

    const auto lo = static_cast<std::uint64_t>(std::floor(plan.t_real));
    const auto hi = static_cast<std::uint64_t>(std::ceil(plan.t_real));
    const double p_lo = success_probability_analytic(sol, lo);
    const double p_hi = (hi == lo) ? p_lo : success_probability_analytic(sol, hi);
    if (p_hi > p_lo) {
        plan.t_step = hi;
        plan.predicted_success = p_hi;
    } else {
        plan.t_step = lo;
        plan.predicted_success = p_lo;
    }
    return plan;
}

std::uint64_t numeric_scan_limit(const ClosedFormSolution& sol) {
    // |l_bar(t)|^2 has period pi/w because l_bar(t + pi/w) = -l_bar(t).
    return static_cast<std::uint64_t>(std::ceil(std::numbers::pi / sol.omega()));
}

MeasurementPlan optimal_time_numeric(const ClosedFormSolution& sol) {
    MeasurementPlan plan;
    plan.method = PlanMethod::numeric_scan;
    plan.predicted_success = success_probability_analytic(sol, 0);
    const auto limit = numeric_scan_limit(sol);
    for (std::uint64_t t = 1; t <= limit; ++t) {
        const double p = success_probability_analytic(sol, t);
        if (p > plan.predicted_success) {
            plan.predicted_success = p;
            plan.t_step = t;
        }
    }
    plan.t_real = static_cast<double>(plan.t_step);
    return plan;
}

double optimal_time_approx(const ClosedFormSolution& sol) {
    if (!sol.real_ratio()) {
        throw NotApplicable("expansion requires a real ratio k_bar(0)/l_bar(0)");
    }
    if (std::abs(sol.l_bar0()) == 0.0) {
        throw NotApplicable("expansion is undefined for l_bar(0) = 0");
    }
    const double ratio = (sol.k_bar0() / sol.l_bar0()).real();
    const double n_over_r = static_cast<double>(sol.n_states()) / static_cast<double>(sol.r());
    return -0.5 * ratio + std::numbers::pi / 4.0 * std::sqrt(n_over_r) -
           std::numbers::pi / 24.0 / std::sqrt(n_over_r);
}

MeasurementPlan best_plan(const ClosedFormSolution& sol, std::uint64_t j) {
    return sol.real_ratio() ? optimal_time(sol, j) : optimal_time_numeric(sol);
}

} // namespace grover
