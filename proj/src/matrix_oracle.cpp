#include "dunkl/matrix_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dunkl::oracle
{

namespace
{

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

double block_max_abs(const OperatorMatrix& m, std::size_t last)
{
    const Eigen::Index n = idx(last + 1);
    return m.entries().topLeftCorner(n, n).cwiseAbs().maxCoeff();
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b - b * a; }
OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b + b * a; }

}  // namespace

double OperatorMatrix::off_diagonal_mass() const
{
    Eigen::MatrixXcd off = entries_;
    off.diagonal().setZero();
    return off.norm();
}

OperatorMatrix identity(std::size_t dim) { return OperatorMatrix(Eigen::MatrixXcd::Identity(idx(dim), idx(dim))); }

OperatorMatrix build_annihilation(std::size_t dim, double mu)
{
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(idx(dim), idx(dim));
    for (std::size_t n = 1; n < dim; ++n) a(idx(n - 1), idx(n)) = std::sqrt(dunkl_integer(n, mu));
    return OperatorMatrix(std::move(a));
}

OperatorMatrix build_creation(std::size_t dim, double mu) { return build_annihilation(dim, mu).adjoint(); }

OperatorMatrix build_reflection(std::size_t dim)
{
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(idx(dim), idx(dim));
    for (std::size_t n = 0; n < dim; ++n) r(idx(n), idx(n)) = (n % 2 == 0) ? 1.0 : -1.0;
    return OperatorMatrix(std::move(r));
}

OperatorMatrix build_number(std::size_t dim, double mu)
{
    const auto a = build_annihilation(dim, mu);
    return a.adjoint() * a;
}

OperatorMatrix build_k0(std::size_t dim, double mu)
{
    const auto a = build_annihilation(dim, mu);
    const auto ad = a.adjoint();
    return Complex(0.25) * (ad * a + a * ad);
}

OperatorMatrix build_kplus(std::size_t dim, double mu)
{
    const auto ad = build_creation(dim, mu);
    return Complex(0.5) * (ad * ad);
}

OperatorMatrix build_kminus(std::size_t dim, double mu)
{
    const auto a = build_annihilation(dim, mu);
    return Complex(0.5) * (a * a);
}

OperatorMatrix build_quadrature(std::size_t dim, double mu)
{
    const auto a = build_annihilation(dim, mu);
    return Complex(1.0 / std::numbers::sqrt2) * (a + a.adjoint());
}

OperatorMatrix build_hamiltonian(std::size_t dim, const ModelParams& params)
{
    const auto a = build_annihilation(dim, params.mu);
    const auto ad = a.adjoint();
    return Complex(params.omega) * (ad * a) + Complex(0.5 * params.lambda) * (ad * ad * a * a);
}

StateVector evolve(const StateVector& state, const OperatorMatrix& h, double t)
{
    if (static_cast<std::size_t>(state.size()) != h.dim())
        throw std::invalid_argument("state and Hamiltonian dimensions differ");
    if (h.off_diagonal_mass() > 1e-10)
        throw NonDiagonalHamiltonian("Hamiltonian is not diagonal in the number basis");
    StateVector out(state.size());
    for (Eigen::Index n = 0; n < state.size(); ++n)
        out(n) = state(n) * std::polar(1.0, -h(static_cast<std::size_t>(n), static_cast<std::size_t>(n)).real() * t);
    return out;
}

Complex expectation(const StateVector& bra, const OperatorMatrix& op, const StateVector& ket)
{
    const auto d = static_cast<Eigen::Index>(op.dim());
    if (bra.size() != d || ket.size() != d) throw std::invalid_argument("expectation: dimension mismatch");
    return bra.dot(op.entries() * ket);  // Eigen's dot conjugates the left operand
}

double AlgebraReport::max_deviation() const
{
    double m = 0.0;
    for (const auto& r : relations) m = std::max(m, r.max_abs);
    return m;
}

AlgebraReport check_algebra(std::size_t dim, const ModelParams& params)
{
    if (dim < 8) throw InvalidParameter("check_algebra requires dim >= 8");
    const double mu = params.mu;
    const std::size_t linear = dim - 3;
    const std::size_t quadratic = dim - 5;

    const auto one = identity(dim);
    const auto a = build_annihilation(dim, mu);
    const auto ad = a.adjoint();
    const auto r = build_reflection(dim);
    const auto n = build_number(dim, mu);
    const auto k0 = build_k0(dim, mu);
    const auto kp = build_kplus(dim, mu);
    const auto km = build_kminus(dim, mu);
    const auto h = build_hamiltonian(dim, params);

    AlgebraReport rep{dim, mu, {}};
    rep.relations.push_back({"[a,a+] - (1 + 2 mu R)", block_max_abs(commutator(a, ad) - (one + Complex(2.0 * mu) * r), linear)});
    rep.relations.push_back({"{R,a}", block_max_abs(anticommutator(r, a), linear)});
    rep.relations.push_back({"[K0,K+] - K+", block_max_abs(commutator(k0, kp) - kp, quadratic)});
    rep.relations.push_back({"[K0,K-] + K-", block_max_abs(commutator(k0, km) + km, quadratic)});
    rep.relations.push_back({"[K-,K+] - 2 K0", block_max_abs(commutator(km, kp) - Complex(2.0) * k0, quadratic)});
    rep.relations.push_back({"[H,N]", block_max_abs(commutator(h, n), quadratic)});
    rep.relations.push_back({"[H,R]", block_max_abs(commutator(h, r), quadratic)});
    return rep;
}

AlgebraReport check_algebra(std::size_t dim, double mu)
{
    ModelParams p;
    p.mu = mu;
    return check_algebra(dim, p);
}

MatrixOracle::MatrixOracle(const CoherentState& state, std::size_t guard)
    : x_(build_quadrature(state.size() + guard, state.params().mu)),
      x2_(x_ * x_),
      kminus_(build_kminus(state.size() + guard, state.params().mu)),
      k0_(build_k0(state.size() + guard, state.params().mu)),
      h_(build_hamiltonian(state.size() + guard, state.params())),
      psi0_(StateVector::Zero(idx(state.size() + guard)))
{
    const auto amp = state.amplitudes();
    for (std::size_t n = 0; n < amp.size(); ++n) psi0_(idx(n)) = amp[n];
}

Observables MatrixOracle::observe(double t) const
{
    const StateVector psi = evolve(psi0_, h_, t);
    Observables o{};
    o.quadrature = expectation(psi, x_, psi).real();
    o.fidelity = std::norm(psi0_.dot(psi));
    o.variance = expectation(psi, x2_, psi).real() - o.quadrature * o.quadrature;
    o.kminus = expectation(psi, kminus_, psi);
    o.k0 = expectation(psi, k0_, psi).real();
    return o;
}

}  // namespace dunkl::oracle
