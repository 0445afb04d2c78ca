#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "grover/analytic.hpp"
#include "grover/distributions.hpp"
#include "grover/state.hpp"

namespace grover {

/// Locale-independent scientific notation with 17 significant digits, e.g.
/// "5.0000000000000000e-01". Round-trips every finite double exactly.
/// Non-finite values become "nan", "inf" or "-inf".
[[nodiscard]] std::string format_double(double value);

/// Serializes like nlohmann::json::dump, except that floating-point numbers
/// use format_double (non-finite ones become null). Object keys keep
/// nlohmann's sorted order, so output is byte-stable.
[[nodiscard]] std::string dump_json(const nlohmann::json& value, int indent = -1);

/// {"n": int, "marked": [int...], "amplitudes": [[re, im]...], "step": int}
[[nodiscard]] nlohmann::json state_to_json(const AmplitudeState& state);

/// Parses the state document. Amplitudes may also be bare real numbers.
/// Unknown keys are ignored.
[[nodiscard]] AmplitudeState state_from_json(const nlohmann::json& doc, const IngestOptions& options = {});

void write_state(std::ostream& out, const AmplitudeState& state);

[[nodiscard]] nlohmann::json complex_to_json(amplitude value);

/// Solution scalars: n, r, omega, phi, alpha, beta, p_max, initial averages.
[[nodiscard]] nlohmann::json solution_to_json(const ClosedFormSolution& sol);

/// Plan fields: t_real, t_step, j, predicted_success, method.
[[nodiscard]] nlohmann::json plan_to_json(const MeasurementPlan& plan);

} // namespace grover
