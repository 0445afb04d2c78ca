#include "app.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "experiments.hpp"
#include "grover/analytic.hpp"
#include "grover/distributions.hpp"
#include "grover/errors.hpp"
#include "grover/io.hpp"
#include "grover/rng.hpp"

namespace grover::app {

namespace {

using nlohmann::json;

const std::vector<std::string> kDistNames{"uniform", "delta", "random-real", "random-complex", "gaussian-real"};

struct StateOptions {
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> r;
    std::vector<std::uint64_t> marked;
    std::string dist = "uniform";
    std::uint64_t seed = 0;
    std::string state_path;
    bool renormalize = false;
    bool allow_large_r = false;
    std::uint64_t delta_target = 0;
    double gaussian_mean = 0.0;
    double gaussian_spread = 1.0;
};

struct OutputOptions {
    std::string out;
    std::string format;
};

void add_state_options(CLI::App* sub, StateOptions& o) {
    sub->add_option("--n", o.n, "Database size N");
    sub->add_option("--r", o.r, "Number of marked states (indices 0..r-1 unless --marked is given)");
    sub->add_option("--marked", o.marked, "Comma-separated marked indices")->delimiter(',');
    sub->add_option("--dist", o.dist, "Initial distribution")->check(CLI::IsMember(kDistNames));
    sub->add_option("--seed", o.seed, "Seed for random distributions and --sample");
    sub->add_option("--state", o.state_path, "Read the initial state from a JSON file");
    sub->add_flag("--renormalize", o.renormalize, "Scale an ingested state to unit norm instead of rejecting it");
    sub->add_flag("--allow-large-r", o.allow_large_r, "Permit N/2 < r < N");
    sub->add_option("--delta-target", o.delta_target, "Index carrying all amplitude for --dist delta");
    sub->add_option("--gaussian-mean", o.gaussian_mean, "Mean before normalization for --dist gaussian-real");
    sub->add_option("--gaussian-spread", o.gaussian_spread, "Spread before normalization for --dist gaussian-real");
}

void add_output_options(CLI::App* sub, OutputOptions& o, std::string default_format) {
    o.format = std::move(default_format);
    sub->add_option("--out", o.out, "Write results to this file instead of stdout");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

SearchConfig resolve_config(const StateOptions& o) {
    if (!o.n) {
        throw ValidationError("--n is required unless --state is given");
    }
    if (!o.marked.empty()) {
        if (o.r && *o.r != o.marked.size()) {
            throw ValidationError("--r disagrees with the number of --marked indices");
        }
        return {*o.n, o.marked, o.allow_large_r};
    }
    return SearchConfig::first_marked(*o.n, o.r.value_or(1), o.allow_large_r);
}

AmplitudeState build_initial_state(const StateOptions& o) {
    if (!o.state_path.empty()) {
        if (o.n || o.r || !o.marked.empty()) {
            throw ValidationError("--state cannot be combined with --n, --r or --marked");
        }
        return ingest(std::filesystem::path(o.state_path), {o.renormalize, o.allow_large_r});
    }
    DistributionSpec spec{
        .kind = parse_distribution_kind(o.dist),
        .config = resolve_config(o),
        .seed = o.seed,
        .delta_target = o.delta_target,
        .gaussian_mean = o.gaussian_mean,
        .gaussian_spread = o.gaussian_spread,
    };
    return generate(spec);
}

json echo_state_options(const StateOptions& o, const AmplitudeState* state) {
    json j;
    if (!o.state_path.empty()) {
        j["state"] = o.state_path;
        j["renormalize"] = o.renormalize;
    } else {
        j["dist"] = o.dist;
        j["seed"] = o.seed;
        if (o.dist == "delta") {
            j["delta_target"] = o.delta_target;
        }
        if (o.dist == "gaussian-real") {
            j["gaussian_mean"] = o.gaussian_mean;
            j["gaussian_spread"] = o.gaussian_spread;
        }
    }
    if (state != nullptr) {
        j["n"] = state->config().n_states();
        j["r"] = state->config().r();
        j["marked"] = std::vector<std::uint64_t>(state->config().marked().begin(), state->config().marked().end());
    }
    j["allow_large_r"] = o.allow_large_r;
    return j;
}

// "# prefix.key=value" lines for CSV headers.
std::string csv_comments(const std::string& prefix, const json& object) {
    std::string out;
    for (const auto& [key, value] : object.items()) {
        out += "# " + prefix + "." + key + "=" + dump_json(value) + "\n";
    }
    return out;
}

std::string csv_number(double v) {
    return format_double(v);
}

std::string csv_optional(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string{};
}

void emit(const OutputOptions& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
        throw ValidationError("cannot open output file " + o.out);
    }
    file << text;
}

json rng_json() {
    return {{"name", std::string(kRngName)}, {"version", kRngVersion}};
}

json agreement_json(const Agreement& a) {
    return {{"max_amplitude_deviation", a.max_amplitude_deviation},
            {"max_probability_deviation", a.max_probability_deviation}};
}

// --- simulate ---------------------------------------------------------------

struct SimulateArgs {
    StateOptions state;
    OutputOptions output;
    std::uint64_t steps = 0;
    bool sample = false;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
    const auto initial = build_initial_state(a.state);
    const auto record =
        simulate(initial, a.steps, a.sample ? std::optional<std::uint64_t>(a.state.seed) : std::nullopt);

    json config = echo_state_options(a.state, &initial);
    config["command"] = "simulate";
    config["steps"] = a.steps;
    config["sample"] = a.sample;

    json sample;
    if (record.sample) {
        sample = {{"index", record.sample->index}, {"marked", record.sample->marked}};
    }

    std::string text;
    if (a.output.format == "json") {
        json series = json::array();
        for (const auto& p : record.series) {
            series.push_back({{"t", p.t},
                              {"k_bar", complex_to_json(p.k_bar)},
                              {"l_bar", complex_to_json(p.l_bar)},
                              {"p", p.probability},
                              {"norm", p.norm}});
        }
        json doc{{"schema", "grover-sim.simulate/1"},
                 {"config", config},
                 {"rng", rng_json()},
                 {"solution", solution_to_json(record.solution)},
                 {"plan", plan_to_json(record.plan)},
                 {"agreement", agreement_json(record.agreement)},
                 {"series", std::move(series)}};
        if (record.sample) {
            doc["sample"] = sample;
        }
        text = dump_json(doc, 2) + "\n";
    } else {
        text = "# schema=grover-sim.simulate/1\n";
        text += csv_comments("config", config);
        text += csv_comments("rng", rng_json());
        text += csv_comments("plan", plan_to_json(record.plan));
        text += csv_comments("agreement", agreement_json(record.agreement));
        if (record.sample) {
            text += csv_comments("sample", sample);
        }
        text += "t,k_bar_re,k_bar_im,l_bar_re,l_bar_im,p,norm\n";
        for (const auto& p : record.series) {
            text += std::to_string(p.t) + "," + csv_number(p.k_bar.real()) + "," + csv_number(p.k_bar.imag()) + "," +
                    csv_number(p.l_bar.real()) + "," + csv_number(p.l_bar.imag()) + "," + csv_number(p.probability) +
                    "," + csv_number(p.norm) + "\n";
        }
    }
    emit(a.output, text, out);
    return kExitOk;
}

// --- predict ----------------------------------------------------------------

struct PredictArgs {
    StateOptions state;
    OutputOptions output;
    std::vector<std::uint64_t> j{0};
    std::string kbar0;
    std::string lbar0;
    std::optional<double> sigma_l_sq;
};

amplitude parse_complex(const std::string& text, const char* flag) {
    std::istringstream in(text);
    in.imbue(std::locale::classic());
    double re = 0.0;
    double im = 0.0;
    char sep = 0;
    if (!(in >> re)) {
        throw ValidationError(std::string(flag) + " expects 're' or 're,im', got '" + text + "'");
    }
    if (in >> sep) {
        if (sep != ',' || !(in >> im) || (in >> std::ws, !in.eof())) {
            throw ValidationError(std::string(flag) + " expects 're' or 're,im', got '" + text + "'");
        }
    }
    return {re, im};
}

struct PredictInput {
    ClosedFormSolution solution;
    json config;
};

PredictInput predict_input(const PredictArgs& a) {
    const auto& o = a.state;
    const bool scalar_flags = !a.kbar0.empty() || !a.lbar0.empty() || a.sigma_l_sq.has_value();
    if (scalar_flags) {
        if (a.kbar0.empty() || a.lbar0.empty()) {
            throw ValidationError("scalar mode needs both --kbar0 and --lbar0");
        }
        if (!o.state_path.empty()) {
            throw ValidationError("--state cannot be combined with scalar inputs");
        }
        if (!o.n) {
            throw ValidationError("scalar mode needs --n");
        }
        const std::uint64_t n = *o.n;
        const std::uint64_t r = o.r.value_or(1);
        if (r == 0 || r >= n) {
            throw ValidationError("need 0 < r < N");
        }
        if (!o.allow_large_r && r > n / 2) {
            throw ValidationError("r exceeds N/2 (pass --allow-large-r to permit it)");
        }
        SummaryStats s;
        s.k_bar = parse_complex(a.kbar0, "--kbar0");
        s.l_bar = parse_complex(a.lbar0, "--lbar0");
        s.sigma_l_sq = a.sigma_l_sq.value_or(0.0);
        const auto nd = static_cast<double>(n);
        const auto rd = static_cast<double>(r);
        // Normalization fixes the marked variance.
        const double unmarked_mass = (nd - rd) * (s.sigma_l_sq + std::norm(s.l_bar));
        const double sigma_k_sq = (1.0 - unmarked_mass) / rd - std::norm(s.k_bar);
        if (!(s.sigma_l_sq >= 0.0) || !(sigma_k_sq >= -kNormTolerance)) {
            throw NormViolation("summary statistics are not consistent with a normalized state");
        }
        s.sigma_k_sq = std::max(0.0, sigma_k_sq);
        // Only the geometry is needed: one marked index stands in for r of them.
        const SearchConfig geometry = SearchConfig::first_marked(n, r, o.allow_large_r);
        json config{{"mode", "scalar"}, {"n", n}, {"r", r}, {"kbar0", complex_to_json(s.k_bar)},
                    {"lbar0", complex_to_json(s.l_bar)}, {"sigma_l_sq", s.sigma_l_sq},
                    {"allow_large_r", o.allow_large_r}};
        return {solve(s, geometry), std::move(config)};
    }

    if (o.state_path.empty() && o.dist == "uniform" && o.marked.empty()) {
        // Uniform statistics are known in closed form; no statevector needed.
        if (!o.n) {
            throw ValidationError("--n is required unless --state is given");
        }
        const std::uint64_t n = *o.n;
        const std::uint64_t r = o.r.value_or(1);
        if (r == 0 || r >= n || (!o.allow_large_r && r > n / 2)) {
            throw ValidationError("need 0 < r <= N/2 (or r < N with --allow-large-r)");
        }
        const double u = 1.0 / std::sqrt(static_cast<double>(n));
        const SummaryStats s{u, u, 0.0, 0.0};
        json config{{"mode", "scalar"}, {"dist", "uniform"}, {"n", n}, {"r", r}, {"allow_large_r", o.allow_large_r}};
        return {solve(s, SearchConfig::first_marked(n, r, o.allow_large_r)), std::move(config)};
    }

    const auto initial = build_initial_state(o);
    json config = echo_state_options(o, &initial);
    config["mode"] = "state";
    return {solve(initial), std::move(config)};
}

int cmd_predict(const PredictArgs& a, std::ostream& out) {
    auto [sol, config] = predict_input(a);
    config["command"] = "predict";
    config["j"] = a.j;

    std::vector<MeasurementPlan> closed;
    if (sol.real_ratio()) {
        for (const auto j : a.j) {
            closed.push_back(optimal_time(sol, j));
        }
    }
    const auto numeric = optimal_time_numeric(sol);
    const MeasurementPlan chosen = closed.empty() ? numeric : closed.front();

    std::optional<double> t_approx;
    if (sol.real_ratio() && std::abs(sol.l_bar0()) > 0.0) {
        t_approx = optimal_time_approx(sol);
    }

    std::string text;
    if (a.output.format == "json") {
        json plans = json::array();
        for (const auto& p : closed) {
            plans.push_back(plan_to_json(p));
        }
        json doc{{"schema", "grover-sim.predict/1"},
                 {"config", config},
                 {"solution", solution_to_json(sol)},
                 {"method", std::string(to_string(chosen.method))},
                 {"plan", plan_to_json(chosen)},
                 {"closed_form_plans", std::move(plans)},
                 {"numeric_plan", plan_to_json(numeric)},
                 {"t_approx", t_approx ? json(*t_approx) : json(nullptr)}};
        text = dump_json(doc, 2) + "\n";
    } else {
        text = "# schema=grover-sim.predict/1\n";
        text += csv_comments("config", config);
        text += csv_comments("solution", solution_to_json(sol));
        text += "# method=" + std::string(to_string(chosen.method)) + "\n";
        text += "# t_approx=" + (t_approx ? format_double(*t_approx) : std::string("null")) + "\n";
        text += "j,t_real,t_step,predicted_success,method\n";
        for (const auto& p : closed) {
            text += std::to_string(p.j) + "," + csv_number(p.t_real) + "," + std::to_string(p.t_step) + "," +
                    csv_number(p.predicted_success) + "," + std::string(to_string(p.method)) + "\n";
        }
        text += "," + csv_number(numeric.t_real) + "," + std::to_string(numeric.t_step) + "," +
                csv_number(numeric.predicted_success) + "," + std::string(to_string(numeric.method)) + "\n";
    }
    emit(a.output, text, out);
    return kExitOk;
}

// --- compare ----------------------------------------------------------------

struct CompareArgs {
    StateOptions state;
    OutputOptions output;
    std::uint64_t steps = 0;
    double tol = 1e-10;
};

int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
    const auto initial = build_initial_state(a.state);
    const auto record = simulate(initial, a.steps);
    const bool pass = record.agreement.max_amplitude_deviation <= a.tol &&
                      record.agreement.max_probability_deviation <= a.tol;

    json config = echo_state_options(a.state, &initial);
    config["command"] = "compare";
    config["steps"] = a.steps;
    config["tol"] = a.tol;

    std::string text;
    if (a.output.format == "json") {
        json doc{{"schema", "grover-sim.compare/1"},
                 {"config", config},
                 {"steps", a.steps},
                 {"tol", a.tol},
                 {"max_amplitude_deviation", record.agreement.max_amplitude_deviation},
                 {"max_probability_deviation", record.agreement.max_probability_deviation},
                 {"pass", pass}};
        text = dump_json(doc, 2) + "\n";
    } else {
        text = "# schema=grover-sim.compare/1\n";
        text += csv_comments("config", config);
        text += "steps,max_amplitude_deviation,max_probability_deviation,tol,pass\n";
        text += std::to_string(a.steps) + "," + csv_number(record.agreement.max_amplitude_deviation) + "," +
                csv_number(record.agreement.max_probability_deviation) + "," + csv_number(a.tol) + "," +
                (pass ? "true" : "false") + "\n";
    }
    emit(a.output, text, out);
    if (!pass) {
        err << "engines disagree beyond tol " << format_double(a.tol) << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

// --- sweep ------------------------------------------------------------------

struct SweepArgs {
    OutputOptions output;
    std::vector<std::uint64_t> n;
    std::vector<std::uint64_t> r{1};
    std::vector<std::string> dist{"uniform"};
    std::vector<std::uint64_t> seed{0};
    std::uint64_t seeds = 1;
    unsigned threads = 1;
    bool allow_large_r = false;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n.empty()) {
        throw ValidationError("sweep needs at least one --n");
    }
    if (a.seeds == 0) {
        throw ValidationError("--seeds must be positive");
    }
    std::vector<SweepCell> cells;
    for (const auto n : a.n) {
        for (const auto r : a.r) {
            for (const auto& d : a.dist) {
                const auto kind = parse_distribution_kind(d);
                for (const auto base : a.seed) {
                    for (std::uint64_t k = 0; k < a.seeds; ++k) {
                        cells.push_back({n, r, kind, base + k});
                    }
                }
            }
        }
    }
    const auto rows = run_sweep(cells, {a.allow_large_r, a.threads});
    const auto fits = fit_scaling(rows);

    json config{{"command", "sweep"}, {"n", a.n},         {"r", a.r},
                {"dist", a.dist},     {"seed", a.seed},   {"seeds", a.seeds},
                {"allow_large_r", a.allow_large_r}};
    json fits_json = json::array();
    for (const auto& f : fits) {
        fits_json.push_back(
            {{"r", f.r}, {"dist", std::string(to_string(f.dist))}, {"slope", f.slope}, {"points", f.points}});
    }

    bool failed = false;
    std::string text;
    if (a.output.format == "json") {
        json rows_json = json::array();
        for (const auto& row : rows) {
            failed |= !row.ok;
            auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
            rows_json.push_back({{"n", row.cell.n},
                                 {"r", row.cell.r},
                                 {"dist", std::string(to_string(row.cell.dist))},
                                 {"seed", row.cell.seed},
                                 {"status", row.ok ? "ok" : "error"},
                                 {"error", row.error},
                                 {"method", std::string(to_string(row.method))},
                                 {"t_exact", opt(row.t_exact)},
                                 {"t_approx", opt(row.t_approx)},
                                 {"t_scan", row.t_scan},
                                 {"p_scan", row.p_scan},
                                 {"p_achieved", row.p_achieved},
                                 {"p_max", row.p_max}});
        }
        json doc{{"schema", "grover-sim.sweep/1"},
                 {"config", config},
                 {"rng", rng_json()},
                 {"rows", std::move(rows_json)},
                 {"fits", std::move(fits_json)}};
        text = dump_json(doc, 2) + "\n";
    } else {
        text = "# schema=grover-sim.sweep/1\n";
        text += csv_comments("config", config);
        text += csv_comments("rng", rng_json());
        text += "n,r,dist,seed,status,method,t_exact,t_approx,t_scan,p_scan,p_achieved,p_max,error\n";
        for (const auto& row : rows) {
            failed |= !row.ok;
            std::string error = row.error;
            std::replace(error.begin(), error.end(), ',', ';');
            text += std::to_string(row.cell.n) + "," + std::to_string(row.cell.r) + "," +
                    std::string(to_string(row.cell.dist)) + "," + std::to_string(row.cell.seed) + "," +
                    (row.ok ? "ok" : "error") + "," + std::string(to_string(row.method)) + "," +
                    csv_optional(row.t_exact) + "," + csv_optional(row.t_approx) + "," + std::to_string(row.t_scan) +
                    "," + csv_number(row.p_scan) + "," + csv_number(row.p_achieved) + "," + csv_number(row.p_max) +
                    "," + error + "\n";
        }
        for (const auto& f : fits_json) {
            text += "# fit=" + dump_json(f) + "\n";
        }
    }
    emit(a.output, text, out);
    if (failed) {
        err << "one or more sweep rows failed\n";
        return kExitFailure;
    }
    return kExitOk;
}

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
    StateOptions state;
    OutputOptions output;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
    const auto initial = build_initial_state(a.state);
    json doc = state_to_json(initial);
    json generator = echo_state_options(a.state, nullptr);
    generator["rng"] = rng_json();
    doc["generator"] = std::move(generator);
    emit(a.output, dump_json(doc, 1) + "\n", out);
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Grover search simulator: iterative and closed-form engines"};
    app.name("grover-sim");
    app.set_config("--config", "", "TOML/INI file with option defaults; command-line flags take precedence");
    app.require_subcommand(1);

    SimulateArgs simulate_args;
    auto* simulate_cmd = app.add_subcommand("simulate", "Iterate the Grover step and record the amplitude series");
    add_state_options(simulate_cmd, simulate_args.state);
    add_output_options(simulate_cmd, simulate_args.output, "csv");
    simulate_cmd->add_option("--steps", simulate_args.steps, "Number of Grover steps");
    simulate_cmd->add_flag("--sample", simulate_args.sample, "Draw one measurement outcome from the final state");

    PredictArgs predict_args;
    auto* predict_cmd = app.add_subcommand("predict", "Closed-form solution and optimal measurement time");
    add_state_options(predict_cmd, predict_args.state);
    add_output_options(predict_cmd, predict_args.output, "json");
    predict_cmd->add_option("--j", predict_args.j, "Branch indices of the optimal time (comma list)")->delimiter(',');
    predict_cmd->add_option("--kbar0", predict_args.kbar0, "Initial marked average, 're' or 're,im'");
    predict_cmd->add_option("--lbar0", predict_args.lbar0, "Initial unmarked average, 're' or 're,im'");
    predict_cmd->add_option("--sigma-l-sq", predict_args.sigma_l_sq, "Initial unmarked variance");

    CompareArgs compare_args;
    auto* compare_cmd = app.add_subcommand("compare", "Cross-check the iterative and closed-form engines");
    add_state_options(compare_cmd, compare_args.state);
    add_output_options(compare_cmd, compare_args.output, "json");
    compare_cmd->add_option("--steps", compare_args.steps, "Number of Grover steps");
    compare_cmd->add_option("--tol", compare_args.tol, "Maximum allowed deviation");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Optimal times over a grid of N, r, distributions and seeds");
    add_output_options(sweep_cmd, sweep_args.output, "csv");
    sweep_cmd->add_option("--n", sweep_args.n, "Database sizes (comma list)")->delimiter(',')->required();
    sweep_cmd->add_option("--r", sweep_args.r, "Marked counts (comma list)")->delimiter(',');
    sweep_cmd->add_option("--dist", sweep_args.dist, "Distributions (comma list)")
        ->delimiter(',')
        ->check(CLI::IsMember(kDistNames));
    sweep_cmd->add_option("--seed", sweep_args.seed, "Base seeds (comma list)")->delimiter(',');
    sweep_cmd->add_option("--seeds", sweep_args.seeds, "Consecutive seeds per base seed");
    sweep_cmd->add_option("--threads", sweep_args.threads, "Worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--allow-large-r", sweep_args.allow_large_r, "Permit N/2 < r < N");

    GenerateArgs generate_args;
    auto* generate_cmd = app.add_subcommand("generate", "Write an initial state as JSON");
    add_state_options(generate_cmd, generate_args.state);
    add_output_options(generate_cmd, generate_args.output, "json");

    std::vector<std::string> argv_storage{"grover-sim"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const auto& s : argv_storage) {
        argv.push_back(s.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*simulate_cmd) {
            return cmd_simulate(simulate_args, out);
        }
        if (*predict_cmd) {
            return cmd_predict(predict_args, out);
        }
        if (*compare_cmd) {
            return cmd_compare(compare_args, out, err);
        }
        if (*sweep_cmd) {
            return cmd_sweep(sweep_args, out, err);
        }
        if (*generate_cmd) {
            return cmd_generate(generate_args, out);
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotApplicable& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace grover::app
