#ifndef DUNKL_DYNAMICS_HPP
#define DUNKL_DYNAMICS_HPP

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dunkl/coherent_state.hpp"

namespace dunkl
{

/// Uniform sampling of [t_start, t_end], both endpoints included.
struct TimeGrid
{
    double t_start = 0.0;
    double t_end = 0.0;
    std::size_t n_samples = 2;

    void validate() const;
    double at(std::size_t i) const noexcept;
    std::vector<double> times() const;

    bool operator==(const TimeGrid&) const = default;
};

enum class Observable
{
    quadrature,  // <X(t)>
    fidelity,    // F(t) = |<psi(0)|psi(t)>|^2
    variance,    // (Delta X(t))^2
    k0_const     // 2<K0>, constant of motion
};

std::string_view to_string(Observable o) noexcept;
std::optional<Observable> parse_observable(std::string_view name) noexcept;

struct Channel
{
    std::string name;
    std::vector<double> values;

    bool operator==(const Channel&) const = default;
};

/// Sampled observables. Channels keep the order in which they were requested.
struct TimeSeries
{
    std::vector<double> times;
    std::vector<Channel> channels;

    const std::vector<double>& channel(std::string_view name) const;
    bool operator==(const TimeSeries&) const = default;
};

// Closed-form observables of the evolved state. Each sum runs over the state's truncation
// in ascending n with compensated summation.

double quadrature_expectation(const CoherentState& state, double t);
double survival_probability(const CoherentState& state, double t);
std::complex<double> kminus_expectation(const CoherentState& state, double t);
/// <K0>, time independent. Twice this value is the collapse-plateau level of the variance.
double k0_expectation(const CoherentState& state);
double quadrature_variance(const CoherentState& state, double t);

double evaluate(Observable o, const CoherentState& state, double t);

/// Throws InvalidParameter on an empty or repeated channel list or an invalid grid.
TimeSeries evaluate_series(const CoherentState& state, const TimeGrid& grid, std::span<const Observable> channels);

}  // namespace dunkl

#endif
