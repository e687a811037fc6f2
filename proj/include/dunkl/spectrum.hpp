#ifndef DUNKL_SPECTRUM_HPP
#define DUNKL_SPECTRUM_HPP

#include "dunkl/algebra.hpp"

namespace dunkl
{

struct EnergyLevel
{
    FockLabel n;
    double energy;
};

/// Exact eigenvalue E_n of H = omega a^dag a + (lambda/2) a^dag^2 a^2 on the Dunkl number state |n>.
/// Uses the closed parity-split form; E_0 = 0.
double energy(FockLabel n, const ModelParams& params);

EnergyLevel level(FockLabel n, const ModelParams& params);

// Next-nearest-neighbour gaps within a parity sector.
double gap_even(std::size_t m, const ModelParams& params);  // E_{2m+2} - E_{2m}
double gap_odd(std::size_t m, const ModelParams& params);   // E_{2m+3} - E_{2m+1}

// E_{n+1} - E_n; the carrier frequencies of the quadrature signal.
double neighbor_gap(FockLabel n, const ModelParams& params);

}  // namespace dunkl

#endif
