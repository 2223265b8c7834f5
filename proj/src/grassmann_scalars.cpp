#include "ghv/grassmann_scalars.hpp"

#include "ghv/errors.hpp"
#include "ghv/qseries.hpp"

namespace ghv {

std::vector<ExactScalar> GrassmannScalars::cell_weights() const {
    std::vector<ExactScalar> w;
    w.reserve(2 * D);
    for (long i = 0; i < D; ++i) {
        w.push_back(cell_minus[i]);
        w.push_back(cell_plus[i]);
    }
    return w;
}

GrassmannScalars grassmann_scalars(long N, long D) {
    if (D < 3) throw PreconditionError("grassmann_scalars requires D >= 3");
    if (N < 2 * D) throw PreconditionError("grassmann_scalars requires N >= 2D");
    GrassmannScalars g;
    g.N = N;
    g.D = D;
    const ExactScalar one = ExactScalar::one();
    auto qp = [](long e) { return ExactScalar::q_pow(e); };

    for (long i = 0; i <= D; ++i) {
        g.b.push_back(qp(2 * i + 1) * q_int(D - i) * q_int(N - D - i));
        g.c.push_back(q_int(i) * q_int(i));
        g.a.push_back(q_int(i) * (qp(i + 1) * q_int(D - i) + qp(1) * q_int(N - D) - q_int(i)));
        g.theta.push_back(qp(i + 1) * q_int(D - i) * q_int(N - D - i) - q_int(i));
        ExactScalar den = (qp(1) - one) * (qp(D) - one) * (qp(N - D) - one);
        g.theta_star.push_back(((qp(N) - qp(1)) * (ExactScalar(2) - qp(D) - qp(N - D)) +
                                (qp(N) - qp(1)) * (qp(N) - one) * qp(-i)) /
                               den);
    }
    for (long i = 0; i < D; ++i) {
        g.b_t.push_back(qp(2 * i + 2) * q_int(D - i - 1) * q_int(N - D - i));
        g.c_t.push_back(q_int(i + 1) * q_int(i));
        g.a_t.push_back(((qp(D + 1) - qp(i + 1) + one) * q_int(i) + qp(N - D + 1) * q_int(i + 1) -
                         qp(1) * q_int(2 * i + 1)) /
                        (qp(1) - one));
        ExactScalar den = (qp(1) - one) * (qp(D) - one) * (qp(N - D + 1) - one);
        g.theta_t_star.push_back(
            ((qp(N - 1) - one) * (qp(1) + qp(2) - qp(D + 1) - qp(N - D + 2)) +
             (qp(N) - qp(1)) * (qp(N) - one) * qp(-i)) /
            den);
        g.n.push_back(q_int(i + 1));
    }
    g.clique_size = q_int(N - D + 1);

    for (long i = 0; i < D; ++i) {
        ExactScalar m = qp(i * (i + 1));
        for (long j = 1; j <= i; ++j)
            m *= (qp(D - j) - one) * (qp(N - D + 1 - j) - one) / ((qp(j) - one) * (qp(j) - one));
        g.cell_minus.push_back(m);
        ExactScalar p = qp((i + 1) * (i + 1)) * (qp(N - D) - one) / (qp(1) - one);
        for (long j = 1; j <= i; ++j)
            p *= (qp(D - j) - one) * (qp(N - D - j) - one) / ((qp(j) - one) * (qp(j + 1) - one));
        g.cell_plus.push_back(p);
    }

    g.tau = -ExactScalar::s_pow(-(N + 1));
    g.k = ExactScalar::i() * ExactScalar::s_pow(D - N - 1);
    g.k_prime = ExactScalar::i() * ExactScalar::s_pow(-D);
    g.u = ExactScalar::s_pow(2 * D - N);
    return g;
}

} // namespace ghv
