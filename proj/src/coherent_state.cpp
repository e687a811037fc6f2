#include "dunkl/coherent_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dunkl/compensated_sum.hpp"

namespace dunkl
{

void TruncationPolicy::validate() const
{
    if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw InvalidParameter("tail_tol must lie in (0, 1)");
    if (n_max_hard < 8) throw InvalidParameter("n_max_hard must be >= 8");
}

CoherentState::CoherentState(ModelParams params, std::vector<double> coeffs, double norm_const)
    : params_(params), coeffs_(std::move(coeffs)), norm_const_(norm_const)
{
    amplitudes_.reserve(coeffs_.size());
    for (double c : coeffs_) amplitudes_.push_back(norm_const_ * c);
}

double CoherentState::probability(FockLabel n) const noexcept
{
    if (n >= amplitudes_.size()) return 0.0;
    return amplitudes_[n] * amplitudes_[n];
}

CoherentState CoherentState::project_parity(Parity keep) const
{
    std::vector<double> c(coeffs_);
    CompensatedSum z;
    for (std::size_t n = 0; n < c.size(); ++n)
    {
        if (parity_of(n) != keep)
            c[n] = 0.0;
        else
            z.add(c[n] * c[n]);
    }
    if (!(z.value() > 0.0)) throw InvalidParameter("parity projection of this state is the zero vector");
    return CoherentState(params_, std::move(c), 1.0 / std::sqrt(z.value()));
}

CoherentState build_state(const ModelParams& params, const TruncationPolicy& policy)
{
    params.validate();
    policy.validate();

    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    const double ln_alpha = params.alpha > 0.0 ? std::log(params.alpha) : neg_inf;
    const double ln_tol = std::log(policy.tail_tol);
    const std::size_t cap = policy.n_max_hard;

    // ln w_n = 2n ln(alpha) - ln([n]_mu!), with the running maximum over j <= n
    std::vector<double> ln_w(cap + 1);
    std::vector<double> ln_max(cap + 1);
    double ln_fact = 0.0;
    for (std::size_t n = 0; n <= cap; ++n)
    {
        if (n > 0) ln_fact += std::log(dunkl_integer(n, params.mu));
        ln_w[n] = (n == 0) ? 0.0 : 2.0 * static_cast<double>(n) * ln_alpha - ln_fact;
        ln_max[n] = (n == 0) ? ln_w[0] : std::max(ln_max[n - 1], ln_w[n]);
    }

    auto below = [&](std::size_t k) { return ln_w[k] < ln_tol + ln_max[k]; };
    std::size_t n_cut = 0;
    for (std::size_t n = 2; n + TruncationPolicy::lookahead <= cap; ++n)
    {
        bool window_clear = true;
        for (std::size_t k = n + 1; k <= n + TruncationPolicy::lookahead; ++k)
            window_clear = window_clear && below(k);
        if (window_clear)
        {
            n_cut = n;
            break;
        }
    }
    if (n_cut == 0)
        throw TruncationError("coherent-state tail did not decay below tail_tol by n_max_hard=" +
                              std::to_string(cap) + "; alpha is too large for this policy");

    // log-sum-exp normalization keeps N finite where sum c_n^2 itself would overflow
    const double ln_peak = ln_max[n_cut];
    CompensatedSum scaled;
    for (std::size_t n = 0; n <= n_cut; ++n) scaled.add(std::exp(ln_w[n] - ln_peak));
    const double ln_z = ln_peak + std::log(scaled.value());

    std::vector<double> coeffs(n_cut + 1);
    for (std::size_t n = 0; n <= n_cut; ++n) coeffs[n] = std::exp(0.5 * ln_w[n]);
    return CoherentState(params, std::move(coeffs), std::exp(-0.5 * ln_z));
}

}  // namespace dunkl
