#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dunkl/cli.hpp"

using namespace dunkl;

namespace
{

struct RawOptions
{
    std::string channels = "quadrature,fidelity,variance";
    std::string format = "csv";
};

void add_common(CLI::App* cmd, cli::ExperimentConfig& cfg, RawOptions& raw)
{
    cmd->add_option("--mu", cfg.params.mu, "Dunkl deformation parameter (>= 0)")->capture_default_str();
    cmd->add_option("--omega", cfg.params.omega, "field frequency (> 0)")->capture_default_str();
    cmd->add_option("--lambda", cfg.params.lambda, "Kerr constant (>= 0)")->capture_default_str();
    cmd->add_option("--alpha", cfg.params.alpha, "real coherent amplitude (>= 0)")->capture_default_str();
    cmd->add_option("--t-start", cfg.grid.t_start, "first sample time")->capture_default_str();
    cmd->add_option("--t-end", cfg.grid.t_end, "last sample time")->capture_default_str();
    cmd->add_option("--samples", cfg.grid.n_samples, "number of grid samples")->capture_default_str();
    cmd->add_option("--channels", raw.channels, "comma list of quadrature,fidelity,variance,k0_const")
        ->capture_default_str();
    cmd->add_option("--n-max", cfg.n_max, "highest level for spectrum")->capture_default_str();
    cmd->add_option("--dim", cfg.dim, "truncation dimension for the algebra check")->capture_default_str();
    cmd->add_option("--tail-tol", cfg.policy.tail_tol, "coherent-state tail tolerance")->capture_default_str();
    cmd->add_option("--n-max-hard", cfg.policy.n_max_hard, "hard cap on the coherent-state truncation")
        ->capture_default_str();
    cmd->add_option("--format", raw.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    cmd->add_option("--out", cfg.output_path, "output file, directory for sweep, '-' for stdout")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dunkl-deformed Kerr oscillator: spectrum, dynamics and verification"};
    app.require_subcommand(1);

    cli::ExperimentConfig cfg;
    RawOptions raw;
    bool corrupt_energy = false;
    std::string sweep_text;

    auto* spectrum = app.add_subcommand("spectrum", "energy levels E_n for n = 0..n-max");
    auto* evolve = app.add_subcommand("evolve", "time series of the requested observables");
    auto* verify = app.add_subcommand("verify", "algebra, spectrum and series-vs-matrix checks");
    auto* sweep = app.add_subcommand("sweep", "evolve over a list of values of one parameter");
    for (auto* cmd : {spectrum, evolve, verify, sweep}) add_common(cmd, cfg, raw);
    verify->add_flag("--debug-corrupt-energy", corrupt_energy)->group("");  // test-only fault injection
    sweep->add_option("--sweep", sweep_text, "key=v1,v2,... with key in mu,alpha,omega,lambda")->required();

    CLI11_PARSE(app, argc, argv);

    try
    {
        cfg.channels = cli::parse_channels(raw.channels);
        cfg.format = raw.format == "json" ? cli::OutputFormat::json : cli::OutputFormat::csv;
        if (spectrum->parsed()) return cli::cmd_spectrum(cfg, std::cout, std::cerr);
        if (evolve->parsed()) return cli::cmd_evolve(cfg, std::cout, std::cerr);
        if (verify->parsed()) return cli::cmd_verify(cfg, {corrupt_energy}, std::cout, std::cerr);
        if (sweep->parsed()) return cli::cmd_sweep(cfg, cli::parse_sweep(sweep_text), std::cout, std::cerr);
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
