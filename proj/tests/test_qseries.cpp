#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghv/errors.hpp"
#include "ghv/grassmann_scalars.hpp"
#include "ghv/qseries.hpp"

using namespace ghv;

namespace {
const mpq_class q2(2);
GaussianRational at2(const ExactScalar& x) { return x.specialize_q(q2); }
} // namespace

TEST_CASE("q-Pochhammer") {
    CHECK(q_pochhammer(ExactScalar(5), 0) == ExactScalar::one());
    // (q;q)_3 at q=2: (-1)(-3)(-7) = -21
    CHECK(at2(q_pochhammer(ExactScalar::q_pow(1), 3)) == GaussianRational(-21));
    for (int n = 1; n < 5; ++n) CHECK(q_pochhammer(ExactScalar::one(), n).is_zero());
}

TEST_CASE("Gaussian binomials") {
    CHECK(gauss_binom(5, 0) == ExactScalar::one());
    CHECK(gauss_binom(3, 5).is_zero());
    CHECK(gauss_binom(4, -1).is_zero());
    CHECK(at2(gauss_binom(6, 3)) == GaussianRational(1395));
    CHECK(at2(gauss_binom(4, 1)) == GaussianRational(15));
    // Pascal-type recurrence [n,m] = q^m [n-1,m] + [n-1,m-1]
    for (long n = 1; n <= 6; ++n)
        for (long m = 0; m <= n; ++m)
            CHECK(gauss_binom(n, m) ==
                  ExactScalar::q_pow(m) * gauss_binom(n - 1, m) + gauss_binom(n - 1, m - 1));
}

TEST_CASE("terminating 3phi2") {
    ExactScalar q = ExactScalar::q_pow(1);
    // top parameter q^0 = 1 truncates at the constant term
    CHECK(phi32(ExactScalar::one(), ExactScalar(3), ExactScalar(5), q, q * q, q) ==
          ExactScalar::one());
    // symmetric under exchange of the two non-terminating top parameters
    ExactScalar a2 = ExactScalar(3), a3 = ExactScalar::q_pow(2) * ExactScalar(7);
    ExactScalar b1 = ExactScalar::q_pow(-5), b2 = ExactScalar(4);
    ExactScalar t = ExactScalar::q_pow(-3);
    CHECK(phi32(t, a2, a3, b1, b2, q) == phi32(t, a3, a2, b1, b2, q));
    CHECK_THROWS_AS(phi32(ExactScalar(3), a2, a3, b1, b2, q), PreconditionError);
    // denominator Pochhammer vanishing inside the range
    CHECK_THROWS_AS(phi32(t, a2, a3, ExactScalar::q_pow(-1), b2, q), PreconditionError);
}

TEST_CASE("grassmann scalar families") {
    CHECK_THROWS_AS(grassmann_scalars(5, 3), PreconditionError);
    CHECK_THROWS_AS(grassmann_scalars(10, 2), PreconditionError);

    for (auto [N, D] : {std::pair<long, long>{6, 3}, {7, 3}, {8, 4}, {9, 4}}) {
        GrassmannScalars g = grassmann_scalars(N, D);
        for (long i = 0; i <= D; ++i) CHECK(g.a[i] + g.b[i] + g.c[i] == g.b[0]);
        for (long i = 0; i < D; ++i) CHECK(g.a_t[i] + g.b_t[i] + g.c_t[i] == g.b[0]);
        CHECK(g.a[0].is_zero());
        CHECK(g.c[1] == ExactScalar::one());
        // recurrence relations tying clique to graph intersection numbers
        for (long i = 0; i < D; ++i) {
            CHECK(g.b_t[i] * (ExactScalar::q_pow(D - N + i + 1) - ExactScalar::one()) ==
                  (ExactScalar::q_pow(D - N + i) - ExactScalar::one()) * g.b[i + 1]);
            if (i >= 1)
                CHECK(g.c_t[i] * (ExactScalar::q_pow(i) - ExactScalar::one()) ==
                      (ExactScalar::q_pow(i + 1) - ExactScalar::one()) * g.c[i]);
        }
        CHECK(g.tau == g.k * g.k_prime);
        CHECK(g.u == ExactScalar::s_pow(2 * D - N));
        // cells partition the vertex set
        ExactScalar total;
        for (long i = 0; i < D; ++i) total += g.cell_minus[i] + g.cell_plus[i];
        CHECK(total == gauss_binom(N, D));
        CHECK(g.cell_minus[0] == ExactScalar::one());
        // clique dual eigenvalues agree with the weighted-average construction
        for (long i = 0; i < D; ++i)
            CHECK(g.theta_t_star[i] * g.clique_size ==
                  g.n[i] * g.theta_star[i] + (g.clique_size - g.n[i]) * g.theta_star[i + 1]);
    }

    GrassmannScalars g = grassmann_scalars(6, 3);
    CHECK(at2(g.b[0]) == GaussianRational(98));
    CHECK(at2(g.theta[3]) == GaussianRational(-7));
    CHECK(at2(g.c[2]) == GaussianRational(9));
    CHECK(at2(g.b_t[0]) == GaussianRational(84));
    CHECK(at2(g.cell_plus[0]) == GaussianRational(14));
    CHECK(at2(g.cell_minus[1]) == GaussianRational(84));
    CHECK(at2(g.clique_size) == GaussianRational(15));
    CHECK(grassmann_scalars(6, 3).clique_size.specialize_q(mpq_class(3)) == GaussianRational(40));
}
