#include "dunkl/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace dunkl
{

void ModelParams::validate() const
{
    if (!std::isfinite(mu) || !std::isfinite(omega) || !std::isfinite(lambda) || !std::isfinite(alpha))
        throw InvalidParameter("parameters must be finite");
    if (mu < 0.0) throw InvalidParameter("mu must be >= 0 (got " + std::to_string(mu) + ")");
    if (omega <= 0.0) throw InvalidParameter("omega must be > 0 (got " + std::to_string(omega) + ")");
    if (lambda < 0.0) throw InvalidParameter("lambda must be >= 0 (got " + std::to_string(lambda) + ")");
    if (alpha < 0.0) throw InvalidParameter("alpha must be real and >= 0 (got " + std::to_string(alpha) + ")");
}

double dunkl_integer(FockLabel n, double mu)
{
    const double nd = static_cast<double>(n);
    return (n % 2 == 0) ? nd : nd + 2.0 * mu;
}

double dunkl_factorial_ln(FockLabel n, double mu)
{
    double acc = 0.0;
    for (FockLabel k = 1; k <= n; ++k)
    {
        const double f = dunkl_integer(k, mu);
        if (!(f > 0.0)) throw std::domain_error("Dunkl factorial has a non-positive factor");
        acc += std::log(f);
    }
    return acc;
}

double ladder_down_amp(FockLabel n, double mu)
{
    if (n == 0) return 0.0;
    return std::sqrt(dunkl_integer(n, mu));
}

double k0_eigenvalue(FockLabel n, double mu)
{
    return 0.5 * (dunkl_integer(n, mu) + 0.5 + mu * sign(parity_of(n)));
}

double kplus_amp(FockLabel n, double mu)
{
    return 0.5 * std::sqrt(dunkl_integer(n + 1, mu) * dunkl_integer(n + 2, mu));
}

double kminus_amp(FockLabel n, double mu)
{
    if (n < 2) return 0.0;
    return 0.5 * std::sqrt(dunkl_integer(n, mu) * dunkl_integer(n - 1, mu));
}

double casimir_eigenvalue(Parity p, double mu)
{
    return 0.25 * mu * mu - 0.25 * mu * sign(p) - 3.0 / 16.0;
}

BargmannIndex bargmann_index(Parity p, double mu)
{
    return {(p == Parity::even ? 0.25 : 0.75) + 0.5 * mu};
}

}  // namespace dunkl
