#ifndef DUNKL_COHERENT_STATE_HPP
#define DUNKL_COHERENT_STATE_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "dunkl/algebra.hpp"

namespace dunkl
{

/// Raised when the coherent-state tail has not decayed below tolerance by the hard cap.
class TruncationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct TruncationPolicy
{
    double tail_tol = 1e-16;
    std::size_t n_max_hard = 512;
    /// Size of the lookahead window that must sit entirely below tolerance.
    static constexpr std::size_t lookahead = 8;

    void validate() const;
    bool operator==(const TruncationPolicy&) const = default;
};

/*
 * Truncated superposition of the even and odd Dunkl coherent-state sectors,
 *
 *   |psi> = N sum_n alpha^n / sqrt([n]_mu!) |n>,   n = 0..n_cut.
 *
 * coeffs() holds the unnormalized c_n, amplitudes() holds N c_n. Immutable once built.
 */
class CoherentState
{
public:
    const ModelParams& params() const noexcept { return params_; }
    std::size_t n_cut() const noexcept { return coeffs_.size() - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    double norm_const() const noexcept { return norm_const_; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    std::span<const double> amplitudes() const noexcept { return amplitudes_; }

    /// (N c_n)^2, zero above the truncation.
    double probability(FockLabel n) const noexcept;

    /// Copy with the other parity sector zeroed and the remainder renormalized.
    CoherentState project_parity(Parity keep) const;

    friend CoherentState build_state(const ModelParams& params, const TruncationPolicy& policy);

private:
    CoherentState(ModelParams params, std::vector<double> coeffs, double norm_const);

    ModelParams params_;
    std::vector<double> coeffs_;
    std::vector<double> amplitudes_;
    double norm_const_;
};

/// Throws InvalidParameter or TruncationError.
CoherentState build_state(const ModelParams& params, const TruncationPolicy& policy = {});

/// Free-function form of CoherentState::probability.
inline double probability(const CoherentState& state, FockLabel n) noexcept { return state.probability(n); }

}  // namespace dunkl

#endif
