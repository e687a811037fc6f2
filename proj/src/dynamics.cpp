#include "dunkl/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dunkl/compensated_sum.hpp"
#include "dunkl/spectrum.hpp"

namespace dunkl
{

void TimeGrid::validate() const
{
    if (!std::isfinite(t_start) || !std::isfinite(t_end)) throw InvalidParameter("time grid bounds must be finite");
    if (!(t_end > t_start)) throw InvalidParameter("time grid requires t_end > t_start");
    if (n_samples < 2) throw InvalidParameter("time grid requires at least 2 samples");
}

double TimeGrid::at(std::size_t i) const noexcept
{
    if (i + 1 == n_samples) return t_end;
    const double step = (t_end - t_start) / static_cast<double>(n_samples - 1);
    return t_start + step * static_cast<double>(i);
}

std::vector<double> TimeGrid::times() const
{
    std::vector<double> ts(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) ts[i] = at(i);
    return ts;
}

std::string_view to_string(Observable o) noexcept
{
    switch (o)
    {
    case Observable::quadrature: return "quadrature";
    case Observable::fidelity: return "fidelity";
    case Observable::variance: return "variance";
    case Observable::k0_const: return "k0_const";
    }
    return "unknown";
}

std::optional<Observable> parse_observable(std::string_view name) noexcept
{
    for (auto o : {Observable::quadrature, Observable::fidelity, Observable::variance, Observable::k0_const})
        if (name == to_string(o)) return o;
    return std::nullopt;
}

const std::vector<double>& TimeSeries::channel(std::string_view name) const
{
    for (const auto& c : channels)
        if (c.name == name) return c.values;
    throw std::out_of_range("no channel named " + std::string(name));
}

double quadrature_expectation(const CoherentState& state, double t)
{
    // <a(t)> = sum_n A_n A_{n+1} sqrt([n+1]) exp(-i (E_{n+1} - E_n) t), real alpha
    const auto amp = state.amplitudes();
    const auto& p = state.params();
    CompensatedSum re;
    for (std::size_t n = 0; n + 1 < amp.size(); ++n)
    {
        const double w = amp[n] * amp[n + 1] * ladder_down_amp(n + 1, p.mu);
        if (w == 0.0) continue;
        re.add(w * std::cos(neighbor_gap(n, p) * t));
    }
    return std::numbers::sqrt2 * re.value();
}

double survival_probability(const CoherentState& state, double t)
{
    const auto amp = state.amplitudes();
    const auto& p = state.params();
    CompensatedComplexSum overlap;
    for (std::size_t n = 0; n < amp.size(); ++n)
    {
        const double w = amp[n] * amp[n];
        if (w == 0.0) continue;
        overlap.add(w * std::polar(1.0, -energy(n, p) * t));
    }
    return std::norm(overlap.value());
}

std::complex<double> kminus_expectation(const CoherentState& state, double t)
{
    const auto amp = state.amplitudes();
    const auto& p = state.params();
    CompensatedComplexSum acc;
    for (std::size_t n = 0; n + 2 < amp.size(); ++n)
    {
        // <n| K- |n+2> = (1/2) sqrt([n+2][n+1])
        const double w = amp[n] * amp[n + 2] * kminus_amp(n + 2, p.mu);
        if (w == 0.0) continue;
        const double gap = (n % 2 == 0) ? gap_even(n / 2, p) : gap_odd(n / 2, p);
        acc.add(w * std::polar(1.0, -gap * t));
    }
    return acc.value();
}

double k0_expectation(const CoherentState& state)
{
    const auto amp = state.amplitudes();
    const double mu = state.params().mu;
    CompensatedSum acc;
    for (std::size_t n = 0; n < amp.size(); ++n) acc.add(amp[n] * amp[n] * k0_eigenvalue(n, mu));
    return acc.value();
}

double quadrature_variance(const CoherentState& state, double t)
{
    const double x = quadrature_expectation(state, t);
    return 2.0 * kminus_expectation(state, t).real() + 2.0 * k0_expectation(state) - x * x;
}

double evaluate(Observable o, const CoherentState& state, double t)
{
    switch (o)
    {
    case Observable::quadrature: return quadrature_expectation(state, t);
    case Observable::fidelity: return survival_probability(state, t);
    case Observable::variance: return quadrature_variance(state, t);
    case Observable::k0_const: return 2.0 * k0_expectation(state);
    }
    return 0.0;
}

TimeSeries evaluate_series(const CoherentState& state, const TimeGrid& grid, std::span<const Observable> channels)
{
    grid.validate();
    if (channels.empty()) throw InvalidParameter("at least one channel must be requested");
    for (std::size_t i = 0; i < channels.size(); ++i)
        if (std::find(channels.begin(), channels.begin() + i, channels[i]) != channels.begin() + i)
            throw InvalidParameter("channel requested twice: " + std::string(to_string(channels[i])));

    TimeSeries out;
    out.times = grid.times();
    for (auto o : channels)
    {
        Channel ch{std::string(to_string(o)), std::vector<double>(out.times.size())};
        std::transform(out.times.begin(), out.times.end(), ch.values.begin(),
                       [&](double t) { return evaluate(o, state, t); });
        out.channels.push_back(std::move(ch));
    }
    return out;
}

}  // namespace dunkl
