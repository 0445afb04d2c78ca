#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "grover/analytic.hpp"
#include "grover/errors.hpp"
#include "oracles.hpp"

using namespace grover;
using grover::oracle::cvec;
using std::numbers::pi;

namespace {

AmplitudeState uniform(std::uint64_t n, std::uint64_t r) {
    return {SearchConfig::first_marked(n, r), cvec(n, 1.0 / std::sqrt(static_cast<double>(n)))};
}

ClosedFormSolution scalar_solution(std::uint64_t n, std::uint64_t r, amplitude k, amplitude l, double sigma_l_sq = 0.0) {
    return solve(SummaryStats{k, l, 0.0, sigma_l_sq}, SearchConfig::first_marked(n, r));
}

// Marked amplitude 0.6 i, unmarked amplitudes all real and equal: the ratio
// k_bar0/l_bar0 is purely imaginary, so l_bar(t) never vanishes.
AmplitudeState imaginary_ratio_state() {
    const double b = std::sqrt(0.64 / 7.0);
    cvec amps(8, b);
    amps[0] = {0.0, 0.6};
    return {SearchConfig::first_marked(8, 1), amps};
}

} // namespace

TEST(Solve, UniformFourStates) {
    const auto sol = solve(uniform(4, 1));
    EXPECT_NEAR(sol.omega(), pi / 3.0, 1e-15);
    EXPECT_NEAR(std::cos(sol.omega()), 1.0 - 2.0 / 4.0, 1e-12);
    EXPECT_TRUE(sol.real_ratio());
    EXPECT_NEAR(sol.phi(), pi / 6.0, 1e-15);
    EXPECT_NEAR(std::abs(sol.alpha() - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(sol.beta() - 1.0 / std::sqrt(3.0)), 0.0, 1e-15);
    EXPECT_NEAR(sol.p_max(), 1.0, 1e-15);
    EXPECT_FALSE(sol.scalar_only());
}

TEST(Solve, DeltaOnUnmarkedState) {
    const auto sol = solve(AmplitudeState(SearchConfig::first_marked(4, 1), cvec{0.0, 1.0, 0.0, 0.0}));
    EXPECT_EQ(sol.k_bar0(), amplitude(0.0));
    EXPECT_NEAR(std::abs(sol.l_bar0() - 1.0 / 3.0), 0.0, 1e-15);
    EXPECT_NEAR(sol.phi(), 0.0, 1e-15);
    EXPECT_NEAR(sol.p_max(), 1.0 / 3.0, 1e-15);
}

TEST(Solve, UniformHasUnitPmaxForManyGeometries) {
    for (std::uint64_t n : {2u, 3u, 10u, 64u, 1000u}) {
        for (std::uint64_t r = 1; r <= n / 2; r += std::max<std::uint64_t>(1, n / 7)) {
            const auto sol = solve(uniform(n, r));
            EXPECT_NEAR(sol.sigma_l_sq0(), 0.0, 1e-30);
            EXPECT_NEAR(sol.p_max(), 1.0, 1e-12);
        }
    }
}

TEST(Solve, DeviationsHaveZeroMeanAndPmaxMatchesVariance) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SearchConfig config(97, {1, 5, 40, 96});
        const auto state = oracle::random_state(config, seed, true);
        const auto sol = solve(state);
        amplitude dk{};
        for (auto d : sol.deviations_marked()) {
            dk += d;
        }
        amplitude dl{};
        for (auto d : sol.deviations_unmarked()) {
            dl += d;
        }
        EXPECT_LT(std::abs(dk) / 4.0, 1e-12);
        EXPECT_LT(std::abs(dl) / 93.0, 1e-12);
        EXPECT_NEAR(sol.p_max(), 1.0 - 93.0 * stats(state).sigma_l_sq, 1e-12);
    }
}

TEST(Solve, RejectsDegenerateGeometryAndNegativeVariance) {
    EXPECT_THROW(SearchConfig::first_marked(4, 0), ValidationError);
    EXPECT_THROW(SearchConfig::first_marked(4, 4, true), ValidationError);
    EXPECT_THROW(scalar_solution(8, 1, 0.1, 0.1, -1.0), ValidationError);
}

TEST(AverageAmplitudes, Examples) {
    const auto sol = solve(uniform(4, 1));
    const auto t0 = average_amplitudes(sol, 0);
    EXPECT_EQ(t0.k_bar, sol.k_bar0());
    EXPECT_EQ(t0.l_bar, sol.l_bar0());

    const auto t1 = average_amplitudes(sol, 1);
    EXPECT_NEAR(std::abs(t1.k_bar - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(t1.l_bar), 0.0, 1e-15);
    const auto iter = stats(run(uniform(4, 1), 1));
    EXPECT_NEAR(std::abs(t1.k_bar - iter.k_bar), 0.0, 1e-15);
}

TEST(AverageAmplitudes, UniformStartMatchesKnownFormula) {
    for (auto [n, r] : {std::pair<std::uint64_t, std::uint64_t>{4, 1}, {64, 3}, {1000, 7}, {4096, 1}, {4096, 2048}}) {
        const auto sol = solve(uniform(n, r));
        for (std::uint64_t t = 0; t <= 1000; t += 7) {
            const auto avg = average_amplitudes(sol, t);
            const auto ref = oracle::uniform_start_amplitudes(n, r, t);
            ASSERT_NEAR(std::abs(avg.k_bar - ref.marked), 0.0, 1e-12) << n << "," << r << "," << t;
            ASSERT_NEAR(std::abs(avg.l_bar - ref.unmarked), 0.0, 1e-12) << n << "," << r << "," << t;
        }
    }
}

TEST(AverageAmplitudes, SatisfyAverageRecurrence) {
    std::mt19937_64 gen(2024);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint64_t n = 2 + gen() % 100000;
        const std::uint64_t r = 1 + gen() % (n / 2);
        const std::uint64_t t = gen() % 2000;
        const amplitude k{normal(gen), normal(gen)};
        const amplitude l{normal(gen), normal(gen)};
        const double scale = std::sqrt(static_cast<double>(r) * std::norm(k) + static_cast<double>(n - r) * std::norm(l));
        const auto sol = scalar_solution(n, r, k / scale, l / scale);
        const auto now = average_amplitudes(sol, t);
        const auto next = average_amplitudes(sol, t + 1);
        const double nd = static_cast<double>(n);
        const double rd = static_cast<double>(r);
        const amplitude c = (2.0 / nd) * ((nd - rd) * now.l_bar - rd * now.k_bar);
        ASSERT_LT(std::abs(next.k_bar - (c + now.k_bar)), 1e-12);
        ASSERT_LT(std::abs(next.l_bar - (c - now.l_bar)), 1e-12);
    }
}

TEST(PhaseForm, Examples) {
    const auto sol = solve(uniform(4, 1));
    EXPECT_NEAR(std::abs(phase_form(sol, 0).k_bar - 0.5), 0.0, 1e-15);

    // l_bar(0) = 0: phi = pi/2 and k_bar(t) = k_bar(0) cos(wt).
    const double a = std::sqrt(0.32);
    const auto zero_l = solve(AmplitudeState(SearchConfig::first_marked(4, 1), cvec{0.6, a, -a, 0.0}));
    EXPECT_NEAR(zero_l.phi(), pi / 2.0, 1e-15);
    for (std::uint64_t t = 0; t < 12; ++t) {
        EXPECT_NEAR(std::abs(phase_form(zero_l, t).k_bar - 0.6 * std::cos(zero_l.omega() * t)), 0.0, 1e-12);
    }
}

TEST(PhaseForm, AgreesWithAveragesAndHasQuarterPeriodOffset) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto config = SearchConfig::first_marked(50 + seed * 13, 1 + seed % 5);
        const auto sol = solve(oracle::random_real_ratio_state(config, seed));
        ASSERT_TRUE(sol.real_ratio());
        for (std::uint64_t t = 0; t < 300; t += 11) {
            const auto a = average_amplitudes(sol, t);
            const auto p = phase_form(sol, t);
            ASSERT_LT(std::abs(a.k_bar - p.k_bar), 1e-12);
            ASSERT_LT(std::abs(a.l_bar - p.l_bar), 1e-12);
        }
        for (std::uint64_t j = 0; j < 3; ++j) {
            const double t_opt = optimal_time(sol, j).t_real;
            const auto at = average_amplitudes_at(sol, t_opt);
            EXPECT_LT(std::abs(at.l_bar), 1e-12);
            EXPECT_NEAR(std::abs(at.k_bar), std::abs(sol.alpha()), 1e-12);
        }
    }
}

TEST(PhaseForm, ComplexRatioIsNotApplicable) {
    const auto sol = solve(imaginary_ratio_state());
    EXPECT_FALSE(sol.real_ratio());
    EXPECT_THROW((void)phase_form(sol, 3), NotApplicable);
}

TEST(Reconstruct, Examples) {
    const auto state = oracle::random_state(SearchConfig(20, {2, 11}), 5, true);
    const auto sol = solve(state);
    const auto t0 = reconstruct(sol, 0);
    EXPECT_LT(oracle::max_abs_diff(oracle::to_vector(t0), oracle::to_vector(state)), 1e-15);

    const auto usol = solve(uniform(64, 4));
    for (auto d : usol.deviations_marked()) {
        EXPECT_EQ(d, amplitude(0.0));
    }
    const auto u7 = reconstruct(usol, 7);
    const auto avg = average_amplitudes(usol, 7);
    for (auto i : u7.config().marked()) {
        EXPECT_EQ(u7[i], avg.k_bar);
    }
}

TEST(Reconstruct, MatchesIterativeEngine) {
    const SearchConfig config(256, {0, 17, 100, 200, 255});
    const auto state = oracle::random_state(config, 11, true);
    const auto predicted = reconstruct(solve(state), 137);
    const auto iterated = run(state, 137);
    EXPECT_EQ(predicted.step(), iterated.step());
    EXPECT_LT(oracle::max_abs_diff(oracle::to_vector(predicted), oracle::to_vector(iterated)), 1e-10);
}

TEST(Reconstruct, TimeCountsFromInitialStep) {
    const SearchConfig config = SearchConfig::first_marked(32, 3);
    const auto base = oracle::random_state(config, 8, true);
    const AmplitudeState later(config, oracle::to_vector(base), 41);
    const auto predicted = reconstruct(solve(later), 5);
    EXPECT_EQ(predicted.step(), 46u);
    EXPECT_LT(oracle::max_abs_diff(oracle::to_vector(predicted), oracle::to_vector(run(later, 5))), 1e-12);
}

TEST(Reconstruct, ScalarOnlyIsUnsupported) {
    const auto sol = scalar_solution(1 << 20, 1, 1.0 / 1024.0, 1.0 / 1024.0);
    EXPECT_TRUE(sol.scalar_only());
    EXPECT_THROW((void)reconstruct(sol, 1), UnsupportedOperation);
}

TEST(SuccessProbabilityAnalytic, Examples) {
    EXPECT_NEAR(success_probability_analytic(solve(uniform(4, 1)), 1), 1.0, 1e-15);

    // Delta on an unmarked state: P reaches P_max = 1/3 only at the real time T = 1.5.
    const auto delta = solve(AmplitudeState(SearchConfig::first_marked(4, 1), cvec{0.0, 1.0, 0.0, 0.0}));
    const auto plan = optimal_time(delta, 0);
    EXPECT_NEAR(plan.t_real, 1.5, 1e-15);
    EXPECT_NEAR(success_probability_at(delta, plan.t_real), 1.0 / 3.0, 1e-15);
    // Integer neighbours tie at 1/4; the smaller step wins.
    EXPECT_EQ(plan.t_step, 1u);
    EXPECT_NEAR(plan.predicted_success, 0.25, 1e-15);
}

TEST(SuccessProbabilityAnalytic, BoundedByPmaxIncludingComplexRatios) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto config = SearchConfig::first_marked(30 + seed, 1 + seed % 4);
        const auto sol = solve(oracle::random_state(config, seed, seed % 2 == 1));
        for (std::uint64_t t = 0; t < 200; ++t) {
            ASSERT_LE(success_probability_analytic(sol, t), sol.p_max() + 1e-12);
        }
    }
    const auto sol = solve(imaginary_ratio_state());
    for (std::uint64_t t = 0; t < 50; ++t) {
        ASSERT_LE(success_probability_analytic(sol, t), sol.p_max() + 1e-12);
    }
}

TEST(SuccessProbabilityAnalytic, OutOfRangeIsAnInvariantViolation) {
    // Inconsistent statistics (sigma_l^2 too large for a normalized state).
    const auto sol = scalar_solution(16, 1, 0.0, 0.0, 0.5);
    EXPECT_THROW((void)success_probability_analytic(sol, 0), InvariantViolation);
}

TEST(OptimalTime, UniformFourStates) {
    const auto plan = optimal_time(solve(uniform(4, 1)), 0);
    EXPECT_NEAR(plan.t_real, 1.0, 1e-12);
    EXPECT_EQ(plan.t_step, 1u);
    EXPECT_NEAR(plan.predicted_success, 1.0, 1e-12);
    EXPECT_EQ(plan.method, PlanMethod::closed_form);
}

TEST(OptimalTime, Uniform1024MatchesBruteForceScan) {
    const auto initial = uniform(1024, 1);
    const auto sol = solve(initial);
    const auto plan = optimal_time(sol, 0);
    // Independent evaluation: (pi/2 - atan(1/sqrt(1023))) / (2 asin(1/32)).
    EXPECT_NEAR(plan.t_real, 24.62864948087203, 1e-10);
    EXPECT_EQ(plan.t_step, 25u);

    const auto scan = oracle::brute_force_scan(initial, numeric_scan_limit(sol));
    EXPECT_EQ(scan.t, plan.t_step);
    EXPECT_NEAR(scan.probability, plan.predicted_success, 1e-12);
    EXPECT_GE(scan.probability, 0.999);
}

TEST(OptimalTime, BranchesArePiOverOmegaApart) {
    const auto sol = solve(oracle::random_real_ratio_state(SearchConfig::first_marked(300, 2), 4));
    for (std::uint64_t j = 0; j < 5; ++j) {
        EXPECT_NEAR(optimal_time(sol, j + 1).t_real - optimal_time(sol, j).t_real, pi / sol.omega(), 1e-9);
    }
}

TEST(OptimalTime, ZeroUnmarkedAverageStartsAtOptimum) {
    const double a = std::sqrt(0.32);
    const auto sol = solve(AmplitudeState(SearchConfig::first_marked(4, 1), cvec{0.6, a, -a, 0.0}));
    const auto plan = optimal_time(sol, 0);
    EXPECT_NEAR(plan.t_real, 0.0, 1e-15);
    EXPECT_EQ(plan.t_step, 0u);
    EXPECT_NEAR(optimal_time(sol, 2).t_real, 2.0 * pi / sol.omega(), 1e-12);
    EXPECT_THROW((void)optimal_time_approx(sol), NotApplicable);
}

TEST(OptimalTime, TightnessAtRealAndIntegerTimes) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto config = SearchConfig::first_marked(16 + 37 * seed, 1 + seed % 3);
        const auto sol = solve(oracle::random_real_ratio_state(config, 100 + seed));
        const auto plan = optimal_time(sol, 0);
        EXPECT_NEAR(success_probability_at(sol, plan.t_real), sol.p_max(), 1e-12);
        const double slack = static_cast<double>(sol.n_states() - sol.r()) * std::norm(sol.beta()) * sol.omega() *
                             sol.omega();
        EXPECT_LE(plan.predicted_success, sol.p_max() + 1e-12);
        EXPECT_GE(plan.predicted_success, sol.p_max() - slack);
        EXPECT_TRUE(plan.t_step == static_cast<std::uint64_t>(std::floor(plan.t_real)) ||
                    plan.t_step == static_cast<std::uint64_t>(std::ceil(plan.t_real)));
    }
}

TEST(OptimalTime, ComplexRatioRequiresFallback) {
    EXPECT_THROW((void)optimal_time(solve(imaginary_ratio_state()), 0), FallbackRequired);
    EXPECT_EQ(best_plan(solve(imaginary_ratio_state())).method, PlanMethod::numeric_scan);
}

TEST(OptimalTimeNumeric, UniformFourStates) {
    const auto plan = optimal_time_numeric(solve(uniform(4, 1)));
    EXPECT_EQ(plan.t_step, 1u);
    EXPECT_NEAR(plan.predicted_success, 1.0, 1e-12);
    EXPECT_EQ(plan.method, PlanMethod::numeric_scan);
}

TEST(OptimalTimeNumeric, NeverWorseThanClosedFormForRealRatios) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto config = SearchConfig::first_marked(64 + 29 * seed, 1 + seed % 3);
        const auto sol = solve(oracle::random_real_ratio_state(config, 500 + seed));
        const auto scan = optimal_time_numeric(sol);
        const auto closed = optimal_time(sol, 0);
        // The scan covers the whole period, so it can only do better than the
        // j=0 rounding (it may land next to T_1 when T_0 sits just past zero).
        EXPECT_GE(scan.predicted_success, closed.predicted_success - 1e-12) << "seed " << seed;
        if (closed.t_real >= 1.0 && std::floor(optimal_time(sol, 1).t_real) > numeric_scan_limit(sol)) {
            EXPECT_NEAR(scan.predicted_success, closed.predicted_success, 1e-12) << "seed " << seed;
        }
    }
}

TEST(OptimalTimeNumeric, ImaginaryRatioStaysStrictlyBelowPmax) {
    const auto state = imaginary_ratio_state();
    const auto sol = solve(state);
    EXPECT_NEAR(sol.p_max(), 1.0, 1e-12);
    const auto plan = optimal_time_numeric(sol);
    const auto scan = oracle::brute_force_scan(state, numeric_scan_limit(sol));
    EXPECT_EQ(plan.t_step, scan.t);
    EXPECT_NEAR(plan.predicted_success, scan.probability, 1e-12);
    EXPECT_LT(plan.predicted_success, sol.p_max() - 1e-3);
    // The real-time optimum does not reach the bound either.
    double best = 0.0;
    for (double t = 0.0; t < pi / sol.omega(); t += 1e-3) {
        best = std::max(best, success_probability_at(sol, t));
    }
    EXPECT_LT(best, sol.p_max() - 1e-3);
}

TEST(OptimalTimeApprox, MillionStates) {
    const double u = 1e-3;
    const auto sol = scalar_solution(1000000, 1, u, u);
    // pi/4 * 1000 - 1/2 - pi/24 * 0.001
    EXPECT_NEAR(optimal_time_approx(sol), 784.8980324977543, 1e-9);
    EXPECT_NEAR(optimal_time(sol, 0).t_real - optimal_time_approx(sol), 0.0, 1e-5);
}

TEST(OptimalTimeApprox, ErrorShrinksAtLeastLinearlyInRoverN) {
    double previous = 0.0;
    for (int e : {10, 14, 18}) {
        const std::uint64_t n = 1ULL << e;
        const double u = 1.0 / std::sqrt(static_cast<double>(n));
        const auto sol = scalar_solution(n, 1, u, u);
        const double err = std::abs(optimal_time(sol, 0).t_real - optimal_time_approx(sol));
        if (previous > 0.0) {
            EXPECT_LE(err, previous / 16.0) << "N=2^" << e;
        }
        previous = err;
    }
}

TEST(OptimalTimeApprox, MarkedHeadStartShortensTheSearch) {
    const std::uint64_t n = 1 << 16;
    const double l = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
    const auto low = scalar_solution(n, 1, 1.0 * l, l);
    const auto high = scalar_solution(n, 1, 9.0 * l, l);
    EXPECT_NEAR(optimal_time_approx(low) - optimal_time_approx(high), 4.0, 1e-12);
    EXPECT_LT(optimal_time(high, 0).t_real, optimal_time(low, 0).t_real);
    EXPECT_NEAR(optimal_time(low, 0).t_real - optimal_time(high, 0).t_real, 4.0, 1e-2);
}

TEST(OptimalTimeApprox, ComplexRatioIsNotApplicable) {
    EXPECT_THROW((void)optimal_time_approx(solve(imaginary_ratio_state())), NotApplicable);
}

TEST(ScalarOnly, PlansHugeDatabasesWithoutStatevector) {
    const std::uint64_t n = 1ULL << 40;
    const double u = std::ldexp(1.0, -20);
    const auto sol = scalar_solution(n, 1, u, u);
    const auto plan = optimal_time(sol, 0);
    EXPECT_TRUE(std::isfinite(plan.t_real));
    EXPECT_NEAR(plan.t_real / std::sqrt(static_cast<double>(n)), pi / 4.0, 1e-5);
    EXPECT_GT(plan.predicted_success, 1.0 - 1e-9);
}
