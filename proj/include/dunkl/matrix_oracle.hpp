#ifndef DUNKL_MATRIX_ORACLE_HPP
#define DUNKL_MATRIX_ORACLE_HPP

// Brute-force check path: dense truncated Fock-space matrices, diagonal phase evolution,
// observables as explicit <psi|O|psi> products. Shares no series code with dynamics.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dunkl/algebra.hpp"
#include "dunkl/coherent_state.hpp"

namespace dunkl::oracle
{

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;

class NonDiagonalHamiltonian : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Dense operator on span{|0>, ..., |dim-1>}.
class OperatorMatrix
{
public:
    explicit OperatorMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {}

    std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
    Complex operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }

    OperatorMatrix adjoint() const { return OperatorMatrix(entries_.adjoint()); }
    /// Frobenius norm of everything off the main diagonal.
    double off_diagonal_mass() const;

    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b)
    {
        return OperatorMatrix(a.entries_ * b.entries_);
    }
    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b)
    {
        return OperatorMatrix(a.entries_ + b.entries_);
    }
    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b)
    {
        return OperatorMatrix(a.entries_ - b.entries_);
    }
    friend OperatorMatrix operator*(Complex s, const OperatorMatrix& a) { return OperatorMatrix(s * a.entries_); }

private:
    Eigen::MatrixXcd entries_;
};

OperatorMatrix identity(std::size_t dim);

// A[n-1, n] = sqrt([n]_mu)
OperatorMatrix build_annihilation(std::size_t dim, double mu);
OperatorMatrix build_creation(std::size_t dim, double mu);
OperatorMatrix build_reflection(std::size_t dim);
OperatorMatrix build_number(std::size_t dim, double mu);
OperatorMatrix build_k0(std::size_t dim, double mu);
OperatorMatrix build_kplus(std::size_t dim, double mu);
OperatorMatrix build_kminus(std::size_t dim, double mu);
OperatorMatrix build_quadrature(std::size_t dim, double mu);

/// omega A^dag A + (lambda/2) A^dag A^dag A A, by explicit matrix products.
OperatorMatrix build_hamiltonian(std::size_t dim, const ModelParams& params);

/// Multiplies component n by exp(-i H[n,n] t). Throws NonDiagonalHamiltonian when the
/// off-diagonal mass of H exceeds 1e-10.
StateVector evolve(const StateVector& state, const OperatorMatrix& h, double t);

/// conj(bra)^T op ket. Throws std::invalid_argument on a dimension mismatch.
Complex expectation(const StateVector& bra, const OperatorMatrix& op, const StateVector& ket);

struct RelationDeviation
{
    std::string name;
    double max_abs;
};

struct AlgebraReport
{
    std::size_t dim;
    double mu;
    std::vector<RelationDeviation> relations;

    double max_deviation() const;
};

/// Max-abs residuals of the ladder, reflection and su(1,1) relations plus the conservation
/// laws of H, evaluated on the interior block away from the truncation edge.
/// Requires dim >= 8.
AlgebraReport check_algebra(std::size_t dim, const ModelParams& params);
AlgebraReport check_algebra(std::size_t dim, double mu);

struct Observables
{
    double quadrature;
    double fidelity;
    double variance;
    Complex kminus;
    double k0;
};

/// Dense-matrix evaluation of every dynamics observable for a coherent state.
class MatrixOracle
{
public:
    static constexpr std::size_t default_guard = 8;

    explicit MatrixOracle(const CoherentState& state, std::size_t guard = default_guard);

    std::size_t dim() const noexcept { return h_.dim(); }
    const OperatorMatrix& hamiltonian() const noexcept { return h_; }
    const StateVector& initial_state() const noexcept { return psi0_; }

    Observables observe(double t) const;

private:
    OperatorMatrix x_;
    OperatorMatrix x2_;
    OperatorMatrix kminus_;
    OperatorMatrix k0_;
    OperatorMatrix h_;
    StateVector psi0_;
};

}  // namespace dunkl::oracle

#endif
