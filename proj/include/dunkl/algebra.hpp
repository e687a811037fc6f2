#ifndef DUNKL_ALGEBRA_HPP
#define DUNKL_ALGEBRA_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dunkl
{

/// Thrown when a parameter set violates a model invariant.
class InvalidParameter : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Physical parameters of the deformed Kerr oscillator plus the real coherent amplitude.
/// Natural units (hbar = 1).
struct ModelParams
{
    double mu = 0.0;      // Dunkl deformation
    double omega = 20.0;  // field frequency
    double lambda = 1.0;  // Kerr constant
    double alpha = 2.0;   // coherent amplitude (real, non-negative)

    /// Throws InvalidParameter naming the violated invariant.
    void validate() const;

    bool operator==(const ModelParams&) const = default;
};

/// Eigenvalue of the reflection operator on |n>.
enum class Parity : int
{
    even = 1,
    odd = -1
};

using FockLabel = std::size_t;

constexpr Parity parity_of(FockLabel n) noexcept { return (n % 2 == 0) ? Parity::even : Parity::odd; }
constexpr int sign(Parity p) noexcept { return static_cast<int>(p); }

/// Lowest weight of the discrete-series su(1,1) irrep carried by one parity sector.
struct BargmannIndex
{
    double k;
};

// [n]_mu = n + mu (1 - (-1)^n)
double dunkl_integer(FockLabel n, double mu);

// ln([n]_mu!), accumulated as a running sum of logs.
double dunkl_factorial_ln(FockLabel n, double mu);

// sqrt([n]_mu), the amplitude of a|n> = sqrt([n]) |n-1>. Zero on the vacuum.
double ladder_down_amp(FockLabel n, double mu);

double k0_eigenvalue(FockLabel n, double mu);
double kplus_amp(FockLabel n, double mu);
double kminus_amp(FockLabel n, double mu);

double casimir_eigenvalue(Parity p, double mu);
BargmannIndex bargmann_index(Parity p, double mu);

}  // namespace dunkl

#endif
