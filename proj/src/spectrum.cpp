#include "dunkl/spectrum.hpp"

namespace dunkl
{

double energy(FockLabel n, const ModelParams& p)
{
    const double m = static_cast<double>(n / 2);
    const double kerr = 2.0 * p.lambda * m * m;
    if (n % 2 == 0) return kerr + m * (2.0 * p.omega + 2.0 * p.lambda * p.mu - p.lambda);
    return kerr + m * (2.0 * p.omega + 2.0 * p.lambda * p.mu + p.lambda) + p.omega * (1.0 + 2.0 * p.mu);
}

EnergyLevel level(FockLabel n, const ModelParams& params) { return {n, energy(n, params)}; }

double gap_even(std::size_t m, const ModelParams& p)
{
    return 2.0 * p.omega + p.lambda * (4.0 * static_cast<double>(m) + 2.0 * p.mu + 1.0);
}

double gap_odd(std::size_t m, const ModelParams& p)
{
    return 2.0 * p.omega + p.lambda * (4.0 * static_cast<double>(m) + 2.0 * p.mu + 3.0);
}

double neighbor_gap(FockLabel n, const ModelParams& params) { return energy(n + 1, params) - energy(n, params); }

}  // namespace dunkl
