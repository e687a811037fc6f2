#include <cmath>
#include <random>

#include "doctest.h"
#include "dunkl/algebra.hpp"

using namespace dunkl;
using doctest::Approx;

TEST_CASE("dunkl_integer")
{
    CHECK(dunkl_integer(0, 0.5) == 0.0);
    CHECK(dunkl_integer(3, 0.5) == 4.0);
    CHECK(dunkl_integer(4, 1.0) == 4.0);
    CHECK(dunkl_integer(1, 0.25) == 1.5);
}

TEST_CASE("dunkl_factorial_ln")
{
    CHECK(dunkl_factorial_ln(0, 0.7) == 0.0);
    // 2 * 2 * 4 = 16, mpmath value 2.772588722239781237668928485832706272302
    CHECK(dunkl_factorial_ln(3, 0.5) == Approx(2.7725887222397812).epsilon(1e-15));
    CHECK(dunkl_factorial_ln(5, 0.0) == Approx(std::log(120.0)).epsilon(1e-15));
    // stays finite far beyond where the plain factorial overflows
    CHECK(std::isfinite(dunkl_factorial_ln(400, 1.0)));
    CHECK_THROWS_AS(dunkl_factorial_ln(3, -0.6), std::domain_error);
}

TEST_CASE("ladder amplitudes")
{
    CHECK(ladder_down_amp(0, 1.0) == 0.0);
    CHECK(ladder_down_amp(1, 0.5) == Approx(std::sqrt(2.0)));
    CHECK(ladder_down_amp(2, 0.5) == Approx(std::sqrt(2.0)));

    CHECK(kminus_amp(1, 0.7) == 0.0);
    CHECK(kminus_amp(0, 0.7) == 0.0);
    CHECK(kplus_amp(0, 0.5) == Approx(1.0));
    CHECK(kminus_amp(2, 0.0) == Approx(0.5 * std::sqrt(2.0)));
}

TEST_CASE("k0, casimir and Bargmann index")
{
    CHECK(k0_eigenvalue(0, 0.5) == Approx(0.5));
    CHECK(k0_eigenvalue(1, 0.5) == Approx(1.0));
    CHECK(k0_eigenvalue(0, 0.0) == Approx(0.25));

    CHECK(casimir_eigenvalue(Parity::even, 0.0) == Approx(-3.0 / 16.0));
    CHECK(casimir_eigenvalue(Parity::even, 0.5) == Approx(-0.25));
    CHECK(casimir_eigenvalue(Parity::odd, 0.5) == Approx(0.0));

    CHECK(bargmann_index(Parity::even, 0.0).k == 0.25);
    CHECK(bargmann_index(Parity::odd, 1.0).k == 1.25);
    CHECK(bargmann_index(Parity::even, 0.5).k == 0.5);
}

TEST_CASE("parity helpers")
{
    CHECK(parity_of(0) == Parity::even);
    CHECK(parity_of(7) == Parity::odd);
    CHECK(sign(Parity::odd) == -1);
}

TEST_CASE("ModelParams validation")
{
    ModelParams p;
    CHECK_NOTHROW(p.validate());
    p.mu = -0.1;
    CHECK_THROWS_AS(p.validate(), InvalidParameter);
    p = {};
    p.omega = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidParameter);
    p = {};
    p.lambda = -1.0;
    CHECK_THROWS_AS(p.validate(), InvalidParameter);
    p = {};
    p.alpha = -2.0;
    CHECK_THROWS_AS(p.validate(), InvalidParameter);
    p = {};
    p.mu = std::nan("");
    CHECK_THROWS_AS(p.validate(), InvalidParameter);
}

TEST_CASE("algebra invariants over random inputs")
{
    std::mt19937_64 rng(20261018);
    std::uniform_real_distribution<double> mu_dist(0.0, 3.0);
    std::uniform_int_distribution<std::size_t> n_dist(0, 300);
    std::bernoulli_distribution coin(0.5);

    for (int trial = 0; trial < 100; ++trial)
    {
        const double mu = mu_dist(rng);
        const std::size_t n = n_dist(rng);
        const Parity p = coin(rng) ? Parity::even : Parity::odd;

        CHECK(dunkl_integer(n + 2, mu) == Approx(dunkl_integer(n, mu) + 2.0).epsilon(1e-15));
        CHECK(dunkl_factorial_ln(n + 1, mu) - dunkl_factorial_ln(n, mu) ==
              Approx(std::log(dunkl_integer(n + 1, mu))).epsilon(1e-9));

        const double k = bargmann_index(p, mu).k;
        CHECK(std::abs(casimir_eigenvalue(p, mu) - k * (k - 1.0)) <= 1e-14);

        CHECK(std::abs(k0_eigenvalue(n + 2, mu) - k0_eigenvalue(n, mu) - 1.0) <= 1e-12);
        CHECK(k0_eigenvalue(0, mu) == Approx(bargmann_index(Parity::even, mu).k).epsilon(1e-15));
        CHECK(k0_eigenvalue(1, mu) == Approx(bargmann_index(Parity::odd, mu).k).epsilon(1e-15));
    }
}

TEST_CASE("K0 steps by exactly one for dyadic mu")
{
    for (double mu : {0.0, 0.25, 0.5, 1.0})
        for (std::size_t n = 0; n < 200; ++n) CHECK(k0_eigenvalue(n + 2, mu) - k0_eigenvalue(n, mu) == 1.0);
}

TEST_CASE("undeformed reduction")
{
    for (std::size_t n = 0; n < 50; ++n)
    {
        CHECK(dunkl_integer(n, 0.0) == static_cast<double>(n));
        const double nd = static_cast<double>(n);
        CHECK(kminus_amp(n, 0.0) == Approx(n < 2 ? 0.0 : 0.5 * std::sqrt(nd * (nd - 1.0))));
    }
}
