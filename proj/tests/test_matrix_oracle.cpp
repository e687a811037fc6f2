#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dunkl/dynamics.hpp"
#include "dunkl/matrix_oracle.hpp"
#include "dunkl/spectrum.hpp"

using namespace dunkl;
using namespace dunkl::oracle;
using doctest::Approx;

namespace
{

StateVector basis(std::size_t dim, std::size_t n)
{
    StateVector v = StateVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(n)) = 1.0;
    return v;
}

ModelParams params(double mu, double omega, double lambda)
{
    ModelParams p;
    p.mu = mu;
    p.omega = omega;
    p.lambda = lambda;
    return p;
}

}  // namespace

TEST_CASE("annihilation matrix")
{
    CHECK(build_annihilation(2, 0.0)(0, 1) == Complex(1.0));
    const auto a = build_annihilation(3, 0.5);
    CHECK(a(0, 1).real() == Approx(std::sqrt(2.0)));
    CHECK(a(1, 2).real() == Approx(std::sqrt(2.0)));
    CHECK(a(1, 0) == Complex(0.0));
    CHECK(build_annihilation(4, 1.0)(2, 3).real() == Approx(std::sqrt(5.0)));
}

TEST_CASE("reflection matrix")
{
    CHECK(build_reflection(1)(0, 0) == Complex(1.0));
    const auto r = build_reflection(4);
    for (std::size_t n = 0; n < 4; ++n) CHECK(r(n, n).real() == (n % 2 == 0 ? 1.0 : -1.0));
    CHECK(r.off_diagonal_mass() == 0.0);
}

TEST_CASE("Hamiltonian matrix")
{
    const auto h0 = build_hamiltonian(4, params(0.0, 1.0, 0.0));
    for (std::size_t n = 0; n < 4; ++n) CHECK(h0(n, n).real() == Approx(static_cast<double>(n)));

    const auto h = build_hamiltonian(4, params(0.5, 20.0, 1.0));
    CHECK(h(0, 0).real() == Approx(0.0));
    CHECK(h(1, 1).real() == Approx(40.0));
    CHECK(h(2, 2).real() == Approx(42.0));
    CHECK(h(3, 3).real() == Approx(84.0));

    const auto h3 = build_hamiltonian(3, params(0.0, 20.0, 1.0));
    CHECK(h3(2, 2).real() == Approx(41.0));

    for (double mu : {0.0, 0.25, 0.5, 1.0})
    {
        const auto hm = build_hamiltonian(40, params(mu, 20.0, 1.0));
        CHECK(hm.off_diagonal_mass() == 0.0);
        for (std::size_t n = 0; n + 4 < 40; ++n)
            CHECK(std::abs(hm(n, n).real() - energy(n, params(mu, 20.0, 1.0))) <= 1e-10 * std::max(1.0, hm(n, n).real()));
    }
}

TEST_CASE("K matrices match the scalar kernel")
{
    const double mu = 0.7;
    const std::size_t dim = 20;
    const auto km = build_kminus(dim, mu);
    const auto kp = build_kplus(dim, mu);
    const auto k0 = build_k0(dim, mu);
    for (std::size_t n = 0; n + 2 < dim; ++n)
    {
        CHECK(km(n, n + 2).real() == Approx(kminus_amp(n + 2, mu)));
        CHECK(kp(n + 2, n).real() == Approx(kplus_amp(n, mu)));
    }
    for (std::size_t n = 0; n + 1 < dim; ++n) CHECK(k0(n, n).real() == Approx(k0_eigenvalue(n, mu)));
}

TEST_CASE("evolve")
{
    const auto h = build_hamiltonian(4, params(0.5, 20.0, 1.0));
    StateVector v(4);
    v << Complex(0.1, 0.2), Complex(0.5), Complex(-0.3, 0.4), Complex(0.0, 0.6);
    CHECK(evolve(v, h, 0.0).isApprox(v));

    const auto e2 = evolve(basis(4, 2), h, std::numbers::pi);
    CHECK(std::abs(e2(2) - Complex(1.0)) <= 1e-12);

    const StateVector u = v.normalized();
    for (double t : {0.3, 1.7, 12.0}) CHECK(std::abs(evolve(u, h, t).norm() - 1.0) <= 1e-12);

    const auto not_diagonal = build_annihilation(4, 0.5);
    CHECK_THROWS_AS(evolve(u, not_diagonal, 1.0), NonDiagonalHamiltonian);
    CHECK_THROWS_AS(evolve(basis(3, 0), h, 1.0), std::invalid_argument);
}

TEST_CASE("expectation")
{
    const auto a = build_annihilation(4, 0.5);
    CHECK(expectation(basis(4, 0), a, basis(4, 0)) == Complex(0.0));
    CHECK(expectation(basis(4, 0), a, basis(4, 1)).real() == Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(expectation(basis(3, 0), a, basis(4, 1)), std::invalid_argument);

    ModelParams p;
    p.alpha = 2.0;
    const auto s = build_state(p);
    const MatrixOracle o(s);
    const auto x = build_quadrature(o.dim(), 0.0);
    const auto& psi = o.initial_state();
    CHECK(std::abs(expectation(psi, x, psi).real() - quadrature_expectation(s, 0.0)) <= 1e-10);
    CHECK(o.dim() == s.size() + MatrixOracle::default_guard);
}

TEST_CASE("algebra relations on the interior block")
{
    for (auto [dim, mu] : {std::pair<std::size_t, double>{16, 0.0}, {32, 0.5}, {32, 1.0}, {32, 0.25}})
    {
        const auto rep = check_algebra(dim, mu);
        CHECK(rep.relations.size() == 7);
        for (const auto& r : rep.relations)
        {
            CAPTURE(r.name);
            CHECK(r.max_abs <= 1e-12);
        }
    }
    const auto rep = check_algebra(32, 1.0);
    CHECK(rep.relations[5].max_abs == 0.0);  // [H,N]
    CHECK(rep.relations[6].max_abs == 0.0);  // [H,R]
    CHECK_THROWS_AS(check_algebra(7, 0.0), InvalidParameter);
}

TEST_CASE("truncation edge breaks the ladder relation")
{
    // the full matrix, edge included, violates [a,a+] = 1 + 2 mu R in the last diagonal slot
    const std::size_t dim = 10;
    const auto a = build_annihilation(dim, 0.5);
    const auto c = a * a.adjoint() - a.adjoint() * a - (identity(dim) + Complex(1.0) * build_reflection(dim));
    CHECK(std::abs(c(dim - 1, dim - 1)) > 1.0);
    CHECK(std::abs(c(dim - 2, dim - 2)) < 1e-12);
}
