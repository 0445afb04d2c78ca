#include "grover/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "grover/errors.hpp"

namespace grover {

namespace {

void write_indent(std::string& out, int indent, int depth) {
    if (indent >= 0) {
        out += '\n';
        out.append(static_cast<std::size_t>(indent * depth), ' ');
    }
}

void dump_into(std::string& out, const nlohmann::json& value, int indent, int depth) {
    using value_t = nlohmann::json::value_t;
    switch (value.type()) {
    case value_t::object: {
        if (value.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (const auto& [key, item] : value.items()) {
            if (!first) {
                out += ',';
            }
            first = false;
            write_indent(out, indent, depth + 1);
            out += nlohmann::json(key).dump();
            out += indent >= 0 ? ": " : ":";
            dump_into(out, item, indent, depth + 1);
        }
        write_indent(out, indent, depth);
        out += '}';
        return;
    }
    case value_t::array: {
        if (value.empty()) {
            out += "[]";
            return;
        }
        // Short numeric pairs (complex amplitudes) stay on one line.
        const bool inline_pair = value.size() == 2 && value[0].is_number() && value[1].is_number();
        out += '[';
        bool first = true;
        for (const auto& item : value) {
            if (!first) {
                out += inline_pair && indent >= 0 ? ", " : ",";
            }
            first = false;
            if (!inline_pair) {
                write_indent(out, indent, depth + 1);
            }
            dump_into(out, item, indent, depth + 1);
        }
        if (!inline_pair) {
            write_indent(out, indent, depth);
        }
        out += ']';
        return;
    }
    case value_t::number_float: {
        const double v = value.get<double>();
        out += std::isfinite(v) ? format_double(v) : "null";
        return;
    }
    default:
        out += value.dump();
        return;
    }
}

std::uint64_t require_index(const nlohmann::json& value, const char* what) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        throw ParseError(std::string(what) + " must be a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

double require_number(const nlohmann::json& value) {
    if (!value.is_number()) {
        throw ParseError("amplitude components must be numbers");
    }
    return value.get<double>();
}

} // namespace

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific, 16);
    return {buf, res.ptr};
}

std::string dump_json(const nlohmann::json& value, int indent) {
    std::string out;
    dump_into(out, value, indent, 0);
    return out;
}

nlohmann::json complex_to_json(amplitude value) {
    return nlohmann::json::array({value.real(), value.imag()});
}

nlohmann::json state_to_json(const AmplitudeState& state) {
    nlohmann::json amps = nlohmann::json::array();
    for (const auto& a : state.amplitudes()) {
        amps.push_back(complex_to_json(a));
    }
    nlohmann::json marked = nlohmann::json::array();
    for (const auto i : state.config().marked()) {
        marked.push_back(i);
    }
    return {{"n", state.config().n_states()}, {"marked", std::move(marked)}, {"amplitudes", std::move(amps)},
            {"step", state.step()}};
}

AmplitudeState state_from_json(const nlohmann::json& doc, const IngestOptions& options) {
    if (!doc.is_object()) {
        throw ParseError("state document must be a JSON object");
    }
    for (const char* key : {"n", "marked", "amplitudes"}) {
        if (!doc.contains(key)) {
            throw ParseError(std::string("state document is missing \"") + key + "\"");
        }
    }
    const auto n = require_index(doc["n"], "n");
    const auto& marked_doc = doc["marked"];
    const auto& amps_doc = doc["amplitudes"];
    if (!marked_doc.is_array() || !amps_doc.is_array()) {
        throw ParseError("\"marked\" and \"amplitudes\" must be arrays");
    }
    std::vector<std::uint64_t> marked;
    marked.reserve(marked_doc.size());
    for (const auto& m : marked_doc) {
        marked.push_back(require_index(m, "marked index"));
    }
    const std::uint64_t step = doc.contains("step") ? require_index(doc["step"], "step") : 0;

    if (amps_doc.size() != n) {
        throw ValidationError("\"amplitudes\" has " + std::to_string(amps_doc.size()) + " entries, expected n = " +
                              std::to_string(n));
    }
    std::vector<amplitude> amps;
    amps.reserve(amps_doc.size());
    for (const auto& a : amps_doc) {
        if (a.is_array()) {
            if (a.size() != 2) {
                throw ParseError("complex amplitudes are written as [re, im]");
            }
            amps.emplace_back(require_number(a[0]), require_number(a[1]));
        } else {
            amps.emplace_back(require_number(a), 0.0);
        }
    }

    SearchConfig config(n, std::move(marked), options.allow_large_r);
    if (options.renormalize) {
        double total = 0.0;
        for (const auto& a : amps) {
            total += std::norm(a);
        }
        if (!(total > 0.0) || !std::isfinite(total)) {
            throw NormViolation("cannot renormalize a zero or non-finite state");
        }
        const double scale = 1.0 / std::sqrt(total);
        for (auto& a : amps) {
            a *= scale;
        }
        return {std::move(config), std::move(amps), step};
    }
    return {std::move(config), std::move(amps), step, kIngestNormTolerance};
}

void write_state(std::ostream& out, const AmplitudeState& state) {
    out << dump_json(state_to_json(state), 1) << '\n';
}

nlohmann::json solution_to_json(const ClosedFormSolution& sol) {
    nlohmann::json j{
        {"n", sol.n_states()},
        {"r", sol.r()},
        {"omega", sol.omega()},
        {"k_bar0", complex_to_json(sol.k_bar0())},
        {"l_bar0", complex_to_json(sol.l_bar0())},
        {"sigma_k_sq0", sol.sigma_k_sq0()},
        {"sigma_l_sq0", sol.sigma_l_sq0()},
        {"p_max", sol.p_max()},
        {"real_ratio", sol.real_ratio()},
    };
    if (sol.real_ratio()) {
        j["phi"] = sol.phi();
        j["alpha"] = complex_to_json(sol.alpha());
        j["beta"] = complex_to_json(sol.beta());
    } else {
        j["phi"] = nullptr;
        j["alpha"] = nullptr;
        j["beta"] = nullptr;
    }
    return j;
}

nlohmann::json plan_to_json(const MeasurementPlan& plan) {
    return {{"t_real", plan.t_real},
            {"t_step", plan.t_step},
            {"j", plan.j},
            {"predicted_success", plan.predicted_success},
            {"method", std::string(to_string(plan.method))}};
}

} // namespace grover
