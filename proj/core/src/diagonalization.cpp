#include <Eigen/Dense>

#include <cmath>
#include <cstdio>

#include "grover/analytic.hpp"

namespace grover {

namespace {

constexpr double kSpectralTolerance = 1e-12;
constexpr double kPowerTolerance = 1e-10;

std::string describe(const char* what, double value, double tol) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s = %.3e exceeds %.0e", what, value, tol);
    return buf;
}

} // namespace

DiagonalizationReport verify_diagonalization(const SearchConfig& config, std::uint64_t power_steps) {
    const double uniform = 1.0 / std::sqrt(static_cast<double>(config.n_states()));
    return verify_diagonalization(config, AveragePair{uniform, uniform}, power_steps);
}

DiagonalizationReport verify_diagonalization(const SearchConfig& config, AveragePair initial,
                                             std::uint64_t power_steps) {
    using Eigen::Matrix2cd;
    using Eigen::Matrix2d;
    using Eigen::Vector2cd;
    using cd = std::complex<double>;

    const auto n = static_cast<double>(config.n_states());
    const auto r = static_cast<double>(config.r());

    DiagonalizationReport report;
    report.a = (n - 2.0 * r) / n;
    report.b = 2.0 * (n - r) / n;
    report.c = 2.0 * r / n;
    report.power_steps = power_steps;

    Matrix2d transfer;
    transfer << report.a, report.b, -report.c, report.a;

    // Eigenvalues from a general-purpose solver, not from the closed form.
    const Eigen::EigenSolver<Matrix2d> eig(transfer, /*computeEigenvectors=*/false);
    cd l0 = eig.eigenvalues()(0);
    cd l1 = eig.eigenvalues()(1);
    if (l0.imag() > l1.imag()) {
        std::swap(l0, l1);
    }
    report.lambda_minus = l0;
    report.lambda_plus = l1;
    report.gamma = std::abs(l1);
    report.omega_eigen = std::arg(l1);

    // omega as used by the solver.
    report.omega_closed = 2.0 * std::asin(std::sqrt(r / n));
    report.cos_omega_error = std::abs(std::cos(report.omega_closed) - (1.0 - 2.0 * r / n));

    const double gamma_error = std::max(std::abs(std::abs(l0) - 1.0), std::abs(std::abs(l1) - 1.0));
    if (gamma_error > kSpectralTolerance) {
        report.violations.push_back(describe("|gamma - 1|", gamma_error, kSpectralTolerance));
    }
    if (report.cos_omega_error > kSpectralTolerance) {
        report.violations.push_back(describe("|cos(omega) - (1 - 2r/N)|", report.cos_omega_error, kSpectralTolerance));
    }
    const double phase_error = std::abs(report.omega_eigen - report.omega_closed);
    if (phase_error > kSpectralTolerance) {
        report.violations.push_back(describe("|arg(lambda+) - omega|", phase_error, kSpectralTolerance));
    }

    // Eigenvector basis S (columns for lambda-, lambda+) and its explicit inverse.
    const cd i_unit{0.0, 1.0};
    const double s = std::sqrt(n / r - 1.0);
    const double s_inv = std::sqrt(r / (n - r));
    Matrix2cd basis;
    basis << i_unit * s, -i_unit * s, 1.0, 1.0;
    Matrix2cd basis_inv;
    basis_inv << -0.5 * i_unit * s_inv, 0.5, 0.5 * i_unit * s_inv, 0.5;

    Matrix2cd expected_diag = Matrix2cd::Zero();
    expected_diag(0, 0) = std::polar(1.0, -report.omega_closed);
    expected_diag(1, 1) = std::polar(1.0, report.omega_closed);
    const Matrix2cd diag = basis_inv * transfer.cast<cd>() * basis;
    const Matrix2cd identity = basis * basis_inv;
    report.basis_error = std::max((diag - expected_diag).cwiseAbs().maxCoeff(),
                                  (identity - Matrix2cd::Identity()).cwiseAbs().maxCoeff());
    // S has entries of size sqrt(N/r); the error budget scales with it.
    const double basis_tol = kSpectralTolerance * std::max(1.0, s);
    if (report.basis_error > basis_tol) {
        report.violations.push_back(describe("diagonalization residual", report.basis_error, basis_tol));
    }

    // v(t+1) = A v(t) against the closed-form averages.
    const SummaryStats start{initial.k_bar, initial.l_bar, 0.0, 0.0};
    const auto sol = solve(start, config);
    Vector2cd v(initial.k_bar, initial.l_bar);
    const Matrix2cd step = transfer.cast<cd>();
    for (std::uint64_t t = 1; t <= power_steps; ++t) {
        v = step * v;
        const auto closed = average_amplitudes(sol, t);
        report.max_power_deviation =
            std::max({report.max_power_deviation, std::abs(v(0) - closed.k_bar), std::abs(v(1) - closed.l_bar)});
    }
    if (report.max_power_deviation > kPowerTolerance) {
        report.violations.push_back(describe("matrix-power deviation", report.max_power_deviation, kPowerTolerance));
    }
    return report;
}

} // namespace grover
