#include "ghv/qseries.hpp"

#include <algorithm>

#include "ghv/errors.hpp"

namespace ghv {

ExactScalar q_pochhammer(const ExactScalar& alpha, long n) {
    if (n < 0) throw PreconditionError("q_pochhammer needs n >= 0");
    ExactScalar acc = ExactScalar::one();
    ExactScalar term = alpha;
    for (long j = 0; j < n; ++j) {
        acc *= ExactScalar::one() - term;
        term *= ExactScalar::q_pow(1);
    }
    return acc;
}

ExactScalar gauss_binom(long n, long m) {
    if (m < 0 || n < 0 || m > n) return ExactScalar::zero();
    ExactScalar num = ExactScalar::one(), den = ExactScalar::one();
    for (long j = 0; j < m; ++j) {
        num *= ExactScalar::q_pow(n - j) - ExactScalar::one();
        den *= ExactScalar::q_pow(m - j) - ExactScalar::one();
    }
    return num / den;
}

ExactScalar q_int(long n) { return gauss_binom(n, 1); }

std::optional<long> as_negative_q_power(const ExactScalar& x) {
    if (!x.den().is_one()) return std::nullopt;
    if (x.num().term_count() != 1) return std::nullopt;
    long e = x.num().min_exp();
    if (e > 0 || e % 2 != 0) return std::nullopt;
    if (!x.num().coeff(e).is_one()) return std::nullopt;
    return -e / 2;
}

ExactScalar phi32(const ExactScalar& a1, const ExactScalar& a2, const ExactScalar& a3,
                  const ExactScalar& b1, const ExactScalar& b2, const ExactScalar& arg) {
    std::optional<long> n;
    for (const ExactScalar* a : {&a1, &a2, &a3}) {
        auto m = as_negative_q_power(*a);
        if (m && (!n || *m < *n)) n = m;
    }
    if (!n) throw PreconditionError("3phi2: no top parameter of the form q^{-n}");
    ExactScalar sum;
    ExactScalar top = ExactScalar::one();   // (a1;q)_k (a2;q)_k (a3;q)_k
    ExactScalar bot = ExactScalar::one();   // (b1;q)_k (b2;q)_k (q;q)_k
    ExactScalar argk = ExactScalar::one();
    ExactScalar qk = ExactScalar::one();    // q^k
    for (long k = 0; k <= *n; ++k) {
        if (k > 0) {
            ExactScalar qk1 = qk * ExactScalar::q_pow(-1);  // q^{k-1}
            top *= (ExactScalar::one() - a1 * qk1) * (ExactScalar::one() - a2 * qk1) *
                   (ExactScalar::one() - a3 * qk1);
            ExactScalar f = (ExactScalar::one() - b1 * qk1) * (ExactScalar::one() - b2 * qk1) *
                            (ExactScalar::one() - qk);
            if (f.is_zero())
                throw PreconditionError("3phi2: denominator Pochhammer vanishes within range");
            bot *= f;
            argk *= arg;
        }
        sum += top * argk / bot;
        qk *= ExactScalar::q_pow(1);
    }
    return sum;
}

} // namespace ghv
