#ifndef DUNKL_CLI_HPP
#define DUNKL_CLI_HPP

// Command layer behind the dunkl_kerr executable. Every command writes to caller-supplied
// streams and returns a process exit code so it can be driven from tests.

#include <iosfwd>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dunkl/coherent_state.hpp"
#include "dunkl/dynamics.hpp"

namespace dunkl::cli
{

enum class OutputFormat
{
    csv,
    json
};

struct ExperimentConfig
{
    ModelParams params{};
    TimeGrid grid{0.0, 2.0 * std::numbers::pi, 2048};
    TruncationPolicy policy{};
    std::vector<Observable> channels{Observable::quadrature, Observable::fidelity, Observable::variance};
    OutputFormat format = OutputFormat::csv;
    std::string output_path = "-";  // "-" is standard output
    std::size_t n_max = 10;         // spectrum rows
    std::size_t dim = 32;           // algebra-check dimension

    void validate() const;
    bool operator==(const ExperimentConfig&) const = default;
};

/// Comma-separated observable names; throws InvalidParameter on an unknown name.
std::vector<Observable> parse_channels(std::string_view list);

/// 17 significant digits, locale independent.
std::string format_double(double x);

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json series_to_json(const TimeSeries& series);
TimeSeries series_from_json(const nlohmann::json& j);

void write_series_csv(const TimeSeries& series, std::ostream& out);
/// {"meta": config, "data": series}
void write_series_json(const ExperimentConfig& config, const TimeSeries& series, std::ostream& out);

int cmd_spectrum(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_evolve(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

struct VerifyOptions
{
    bool corrupt_energy = false;  // fault injection for tests
};

struct CheckResult
{
    std::string name;
    double max_deviation;
    double tolerance;
    bool passed() const noexcept { return max_deviation <= tolerance; }
};

std::vector<CheckResult> run_verification(const ExperimentConfig& config, const VerifyOptions& options = {});
int cmd_verify(const ExperimentConfig& config, const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct SweepSpec
{
    std::string key;  // mu, alpha, omega or lambda
    std::vector<double> values;
};

/// Parses "key=v1,v2,...". Throws InvalidParameter on multi-parameter or malformed specs.
SweepSpec parse_sweep(std::string_view text);
ExperimentConfig with_sweep_value(ExperimentConfig config, std::string_view key, double value);
std::string sweep_file_name(std::string_view key, double value, OutputFormat format);

/// Writes one series file per value into config.output_path (a directory), then index.json.
int cmd_sweep(const ExperimentConfig& config, const SweepSpec& sweep, std::ostream& out, std::ostream& err);

}  // namespace dunkl::cli

#endif
