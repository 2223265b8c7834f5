#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ghv/errors.hpp"
#include "ghv/exact_scalar.hpp"
#include "ghv/grassmann_scalars.hpp"

using namespace ghv;

namespace {

ExactScalar random_scalar(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> nterms(1, 3), expd(-3, 3), coeffd(-5, 5), imd(0, 1);
    auto random_laurent = [&](bool want_nonzero) {
        SLaurent p;
        int k = nterms(rng);
        for (int t = 0; t < k; ++t) {
            mpq_class re(coeffd(rng)), im(imd(rng) ? coeffd(rng) : 0);
            p += SLaurent::monomial(expd(rng), GaussianRational(re, im));
        }
        if (want_nonzero && p.is_zero()) p = SLaurent::one();
        return p;
    };
    SLaurent num = random_laurent(nonzero);
    SLaurent den = random_laurent(true);
    return ExactScalar(num, den);
}

} // namespace

TEST_CASE("basic field operations") {
    ExactScalar one = ExactScalar::one();
    ExactScalar i = ExactScalar::i();
    CHECK((one + i) * (one - i) == ExactScalar(2));

    ExactScalar q = ExactScalar::q_pow(1);
    ExactScalar x = q - one;              // s^2 - 1
    CHECK(x.inv() * x == one);
    CHECK_THROWS_AS(ExactScalar::zero().inv(), DivisionByZero);
    CHECK_THROWS_AS(one / ExactScalar::zero(), DivisionByZero);

    CHECK(ExactScalar(7).pow(0) == one);
    CHECK(q.pow(-2) == ExactScalar::q_pow(-2));
}

TEST_CASE("k k' = tau for (N,D) = (6,3)") {
    GrassmannScalars g = grassmann_scalars(6, 3);
    CHECK(g.k * g.k_prime == g.tau);
    CHECK(g.tau == -ExactScalar::s_pow(-7));
    CHECK(g.u == ExactScalar::one());
    CHECK(g.tau.str() == "-q^(-7/2)");
}

TEST_CASE("conjugation") {
    GrassmannScalars g = grassmann_scalars(6, 3);
    CHECK(g.k.conj() == -g.k);
    CHECK(g.tau.conj() == g.tau);

    std::mt19937_64 rng(2024);
    for (int t = 0; t < 200; ++t) {
        ExactScalar x = random_scalar(rng), y = random_scalar(rng);
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(777);
    for (int t = 0; t < 1000; ++t) {
        ExactScalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * x.inv() == ExactScalar::one());
    }
}

TEST_CASE("canonical form idempotence") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        ExactScalar x = random_scalar(rng);
        // rebuild from blown-up fraction: (num*g)/(den*g) must renormalize to x
        SLaurent g = SLaurent::monomial(-1, GaussianRational(mpq_class(3), mpq_class(2))) +
                     SLaurent::monomial(2, GaussianRational(5));
        ExactScalar y(x.num() * g, x.den() * g);
        CHECK(y == x);
        ExactScalar z(x.num(), x.den());   // canonicalizing twice changes nothing
        CHECK(z == x);
    }
}

TEST_CASE("eval_numeric") {
    GrassmannScalars g = grassmann_scalars(6, 3);
    auto tau2 = g.tau.eval_numeric(2.0);
    CHECK(tau2.real() == doctest::Approx(-std::pow(2.0, -3.5)).epsilon(1e-14));
    CHECK(tau2.imag() == doctest::Approx(0.0));
    CHECK(ExactScalar::one().eval_numeric(3.0).real() == doctest::Approx(1.0));
    auto k2 = (g.k * g.k).eval_numeric(2.0);
    CHECK(k2.real() == doctest::Approx(-0.0625).epsilon(1e-14));

    ExactScalar pole = ExactScalar::one() / (ExactScalar::q_pow(1) - ExactScalar(2));
    CHECK_THROWS_AS(pole.eval_numeric(2.0), PoleError);

    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        ExactScalar x = random_scalar(rng), y = random_scalar(rng);
        std::complex<double> lhs, rhs;
        try {
            lhs = (x * y).eval_numeric(2.0);
            rhs = x.eval_numeric(2.0) * y.eval_numeric(2.0);
        } catch (const PoleError&) {
            continue;
        }
        if (std::abs(rhs) > 1e-6) CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-12);
    }
}

TEST_CASE("specialize_q") {
    ExactScalar x = ExactScalar::s_pow(4) + ExactScalar::s_pow(2);
    CHECK(x.specialize_q(mpq_class(2)) == GaussianRational(6));

    GrassmannScalars g = grassmann_scalars(6, 3);
    CHECK(g.theta_star[0].specialize_q(mpq_class(2)) == GaussianRational(62));
    CHECK_THROWS(g.tau.specialize_q(mpq_class(2)));   // odd exponent -7
    CHECK(g.tau.is_rational_in_q() == false);
    CHECK((g.tau * g.tau).is_rational_in_q());
}

TEST_CASE("rendering and parsing round-trip") {
    GrassmannScalars g = grassmann_scalars(6, 3);
    CHECK(ExactScalar::parse("-q^(-7/2)") == g.tau);
    CHECK(ExactScalar::parse("i*q^(-2)") == g.k);
    CHECK(ExactScalar::parse("(q^2-1)/(q^3-1)") ==
          (ExactScalar::q_pow(2) - ExactScalar(1)) / (ExactScalar::q_pow(3) - ExactScalar(1)));
    CHECK(ExactScalar::parse("3/4*i").str() == "3/4*i");
    CHECK_THROWS_AS(ExactScalar::parse("q^"), ParseError);
    CHECK_THROWS_AS(ExactScalar::parse("2 + "), ParseError);
    CHECK_THROWS_AS(ExactScalar::parse("s^(1/2)"), ParseError);

    std::mt19937_64 rng(2718);
    for (int t = 0; t < 300; ++t) {
        ExactScalar x = random_scalar(rng);
        CHECK(ExactScalar::parse(x.str()) == x);
    }
}
