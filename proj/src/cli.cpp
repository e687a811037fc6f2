#include "dunkl/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "dunkl/matrix_oracle.hpp"
#include "dunkl/spectrum.hpp"

namespace dunkl::cli
{

namespace
{

std::string shortest(double x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string_view format_name(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

OutputFormat parse_format(std::string_view s)
{
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw InvalidParameter("unknown output format: " + std::string(s));
}

double parse_number(std::string_view s)
{
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end) throw InvalidParameter("not a number: '" + std::string(s) + "'");
    return v;
}

std::string render_series(const ExperimentConfig& config, const TimeSeries& series)
{
    std::ostringstream os;
    if (config.format == OutputFormat::csv)
        write_series_csv(series, os);
    else
        write_series_json(config, series, os);
    return os.str();
}

TimeSeries run_series(const ExperimentConfig& config)
{
    const auto state = build_state(config.params, config.policy);
    return evaluate_series(state, config.grid, config.channels);
}

}  // namespace

void ExperimentConfig::validate() const
{
    params.validate();
    grid.validate();
    policy.validate();
    if (channels.empty()) throw InvalidParameter("channels must be non-empty");
}

std::vector<Observable> parse_channels(std::string_view list)
{
    std::vector<Observable> out;
    while (!list.empty())
    {
        const auto comma = list.find(',');
        const auto name = list.substr(0, comma);
        const auto o = parse_observable(name);
        if (!o) throw InvalidParameter("unknown channel: '" + std::string(name) + "'");
        out.push_back(*o);
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
    }
    return out;
}

std::string format_double(double x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

nlohmann::json config_to_json(const ExperimentConfig& c)
{
    nlohmann::json channels = nlohmann::json::array();
    for (auto o : c.channels) channels.push_back(std::string(to_string(o)));
    return {
        {"params", {{"mu", c.params.mu}, {"omega", c.params.omega}, {"lambda", c.params.lambda}, {"alpha", c.params.alpha}}},
        {"grid", {{"t_start", c.grid.t_start}, {"t_end", c.grid.t_end}, {"n_samples", c.grid.n_samples}}},
        {"policy", {{"tail_tol", c.policy.tail_tol}, {"n_max_hard", c.policy.n_max_hard}}},
        {"channels", channels},
        {"format", std::string(format_name(c.format))},
    };
}

ExperimentConfig config_from_json(const nlohmann::json& j)
{
    ExperimentConfig c;
    const auto& p = j.at("params");
    c.params = {p.at("mu").get<double>(), p.at("omega").get<double>(), p.at("lambda").get<double>(),
                p.at("alpha").get<double>()};
    const auto& g = j.at("grid");
    c.grid = {g.at("t_start").get<double>(), g.at("t_end").get<double>(), g.at("n_samples").get<std::size_t>()};
    const auto& pol = j.at("policy");
    c.policy.tail_tol = pol.at("tail_tol").get<double>();
    c.policy.n_max_hard = pol.at("n_max_hard").get<std::size_t>();
    c.channels.clear();
    for (const auto& name : j.at("channels"))
    {
        const auto o = parse_observable(name.get<std::string>());
        if (!o) throw InvalidParameter("unknown channel in config: " + name.get<std::string>());
        c.channels.push_back(*o);
    }
    c.format = parse_format(j.value("format", std::string("json")));
    return c;
}

nlohmann::json series_to_json(const TimeSeries& s)
{
    nlohmann::json j = nlohmann::json::object();
    j["t"] = s.times;
    nlohmann::json order = nlohmann::json::array();
    for (const auto& ch : s.channels)
    {
        j[ch.name] = ch.values;
        order.push_back(ch.name);
    }
    j["channels"] = order;
    return j;
}

TimeSeries series_from_json(const nlohmann::json& j)
{
    TimeSeries s;
    s.times = j.at("t").get<std::vector<double>>();
    for (const auto& name : j.at("channels"))
    {
        const auto key = name.get<std::string>();
        s.channels.push_back({key, j.at(key).get<std::vector<double>>()});
    }
    return s;
}

void write_series_csv(const TimeSeries& series, std::ostream& out)
{
    out << 't';
    for (const auto& ch : series.channels) out << ',' << ch.name;
    out << '\n';
    for (std::size_t i = 0; i < series.times.size(); ++i)
    {
        out << format_double(series.times[i]);
        for (const auto& ch : series.channels) out << ',' << format_double(ch.values[i]);
        out << '\n';
    }
}

void write_series_json(const ExperimentConfig& config, const TimeSeries& series, std::ostream& out)
{
    const nlohmann::json doc = {{"meta", config_to_json(config)}, {"data", series_to_json(series)}};
    out << doc.dump(2) << '\n';
}

int cmd_spectrum(const ExperimentConfig& config, std::ostream& out, std::ostream& err)
{
    try
    {
        config.params.validate();
    }
    catch (const InvalidParameter& e)
    {
        err << "invalid parameters: " << e.what() << '\n';
        return 2;
    }

    if (config.format == OutputFormat::json)
    {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t n = 0; n <= config.n_max; ++n)
        {
            nlohmann::json row = {{"n", n}, {"parity", sign(parity_of(n))}, {"energy", energy(n, config.params)}};
            row["gap"] = n == 0 ? nlohmann::json(nullptr) : nlohmann::json(neighbor_gap(n - 1, config.params));
            rows.push_back(row);
        }
        out << nlohmann::json{{"params", config_to_json(config).at("params")}, {"levels", rows}}.dump(2) << '\n';
        return 0;
    }

    out << "n,parity,energy,gap\n";
    for (std::size_t n = 0; n <= config.n_max; ++n)
    {
        out << n << ',' << sign(parity_of(n)) << ',' << format_double(energy(n, config.params)) << ',';
        if (n > 0) out << format_double(neighbor_gap(n - 1, config.params));
        out << '\n';
    }
    return 0;
}

int cmd_evolve(const ExperimentConfig& config, std::ostream& out, std::ostream& err)
{
    std::string text;
    try
    {
        config.validate();
        text = render_series(config, run_series(config));
    }
    catch (const InvalidParameter& e)
    {
        err << "invalid configuration: " << e.what() << '\n';
        return 2;
    }
    catch (const TruncationError& e)
    {
        err << "truncation failure: " << e.what() << '\n';
        return 3;
    }

    if (config.output_path == "-")
    {
        out << text;
        return 0;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file)
    {
        err << "cannot open " << config.output_path << " for writing\n";
        return 4;
    }
    file << text;
    return 0;
}

std::vector<CheckResult> run_verification(const ExperimentConfig& config, const VerifyOptions& options)
{
    config.validate();
    std::vector<CheckResult> checks;

    const auto algebra = oracle::check_algebra(config.dim, config.params);
    for (const auto& rel : algebra.relations) checks.push_back({"algebra " + rel.name, rel.max_abs, 1e-12});

    {
        constexpr std::size_t n_levels = 60;
        const auto h = oracle::build_hamiltonian(n_levels + 5, config.params);
        double worst = 0.0;
        for (std::size_t n = 0; n <= n_levels; ++n)
        {
            double e = energy(n, config.params);
            if (options.corrupt_energy) e = e * (1.0 + 1e-6) + 1e-6;
            const double ref = h(n, n).real();
            worst = std::max(worst, std::abs(e - ref) / std::max(1.0, std::abs(ref)));
        }
        checks.push_back({"spectral match", worst, 1e-10});
    }

    {
        const auto state = build_state(config.params, config.policy);
        const oracle::MatrixOracle oracle(state);
        const TimeGrid grid{0.0, 2.0 * std::numbers::pi, 64};
        double dq = 0.0, df = 0.0, dv = 0.0;
        for (double t : grid.times())
        {
            const auto o = oracle.observe(t);
            dq = std::max(dq, std::abs(quadrature_expectation(state, t) - o.quadrature));
            df = std::max(df, std::abs(survival_probability(state, t) - o.fidelity));
            dv = std::max(dv, std::abs(quadrature_variance(state, t) - o.variance));
        }
        checks.push_back({"oracle quadrature", dq, 1e-8});
        checks.push_back({"oracle fidelity", df, 1e-8});
        checks.push_back({"oracle variance", dv, 1e-8});
    }
    return checks;
}

int cmd_verify(const ExperimentConfig& config, const VerifyOptions& options, std::ostream& out, std::ostream& err)
{
    std::vector<CheckResult> checks;
    try
    {
        checks = run_verification(config, options);
    }
    catch (const std::exception& e)
    {
        err << "verification aborted: " << e.what() << '\n';
        return 2;
    }

    bool all_passed = true;
    nlohmann::json report = nlohmann::json::array();
    for (const auto& c : checks)
    {
        report.push_back({{"check", c.name}, {"max_deviation", c.max_deviation}, {"tolerance", c.tolerance},
                          {"passed", c.passed()}});
        if (!c.passed())
        {
            all_passed = false;
            err << "FAILED: " << c.name << " deviation " << format_double(c.max_deviation) << " > "
                << format_double(c.tolerance) << '\n';
        }
    }
    out << nlohmann::json{{"params", config_to_json(config).at("params")}, {"dim", config.dim}, {"checks", report},
                          {"passed", all_passed}}
               .dump(2)
        << '\n';
    return all_passed ? 0 : 1;
}

SweepSpec parse_sweep(std::string_view text)
{
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0) throw InvalidParameter("sweep must look like key=v1,v2,...");
    SweepSpec spec{std::string(text.substr(0, eq)), {}};
    if (spec.key != "mu" && spec.key != "alpha" && spec.key != "omega" && spec.key != "lambda")
        throw InvalidParameter("sweep key must be one of mu, alpha, omega, lambda (got '" + spec.key + "')");

    auto rest = text.substr(eq + 1);
    if (rest.find('=') != std::string_view::npos || rest.find(';') != std::string_view::npos)
        throw InvalidParameter("only one parameter may be swept at a time");
    while (true)
    {
        const auto comma = rest.find(',');
        spec.values.push_back(parse_number(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return spec;
}

ExperimentConfig with_sweep_value(ExperimentConfig config, std::string_view key, double value)
{
    if (key == "mu")
        config.params.mu = value;
    else if (key == "alpha")
        config.params.alpha = value;
    else if (key == "omega")
        config.params.omega = value;
    else if (key == "lambda")
        config.params.lambda = value;
    else
        throw InvalidParameter("unknown sweep key: " + std::string(key));
    return config;
}

std::string sweep_file_name(std::string_view key, double value, OutputFormat format)
{
    return std::string(key) + "=" + shortest(value) + "." + std::string(format_name(format));
}

int cmd_sweep(const ExperimentConfig& config, const SweepSpec& sweep, std::ostream& out, std::ostream& err)
{
    namespace fs = std::filesystem;
    if (config.output_path == "-")
    {
        err << "sweep requires --out <directory>\n";
        return 2;
    }
    const fs::path dir(config.output_path);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
    {
        err << "cannot create " << dir << ": " << ec.message() << '\n';
        return 4;
    }

    struct Outcome
    {
        int code;
        std::string message;
    };
    std::vector<std::future<Outcome>> jobs;
    for (double v : sweep.values)
    {
        jobs.push_back(std::async(std::launch::async, [&, v]() -> Outcome {
            auto entry = with_sweep_value(config, sweep.key, v);
            entry.output_path = (dir / sweep_file_name(sweep.key, v, config.format)).string();
            std::ostringstream sink, diag;
            const int code = cmd_evolve(entry, sink, diag);
            return {code, diag.str()};
        }));
    }

    int status = 0;
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < jobs.size(); ++i)
    {
        const auto result = jobs[i].get();
        const auto name = sweep_file_name(sweep.key, sweep.values[i], config.format);
        if (result.code != 0)
        {
            err << name << ": " << result.message;
            status = status == 0 ? result.code : status;
        }
        entries.push_back({{"value", sweep.values[i]}, {"file", name}, {"status", result.code}});
    }

    // index last, after every series file is on disk
    std::ofstream index(dir / "index.json", std::ios::binary);
    index << nlohmann::json{{"parameter", sweep.key}, {"base", config_to_json(config)}, {"entries", entries}}.dump(2)
          << '\n';
    out << "wrote " << jobs.size() << " series to " << dir.string() << '\n';
    return status;
}

}  // namespace dunkl::cli
