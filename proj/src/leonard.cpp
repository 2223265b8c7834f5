#include "ghv/leonard.hpp"

#include "ghv/errors.hpp"
#include "ghv/qseries.hpp"

namespace ghv {

namespace {

const ExactScalar kOne = ExactScalar::one();

LambdaPoly poly_zero() { return {}; }

void poly_trim(LambdaPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

LambdaPoly poly_add(const LambdaPoly& x, const LambdaPoly& y) {
    LambdaPoly r(std::max(x.size(), y.size()));
    for (size_t j = 0; j < r.size(); ++j) {
        if (j < x.size()) r[j] += x[j];
        if (j < y.size()) r[j] += y[j];
    }
    poly_trim(r);
    return r;
}

LambdaPoly poly_scale(const LambdaPoly& x, const ExactScalar& v) {
    LambdaPoly r(x.size());
    for (size_t j = 0; j < x.size(); ++j) r[j] = x[j] * v;
    poly_trim(r);
    return r;
}

// multiply by (lambda - root)
LambdaPoly poly_mul_linear(const LambdaPoly& x, const ExactScalar& root) {
    LambdaPoly r(x.size() + 1);
    for (size_t j = 0; j < x.size(); ++j) {
        r[j + 1] += x[j];
        r[j] -= x[j] * root;
    }
    poly_trim(r);
    return r;
}

LambdaPoly poly_shift_lambda(const LambdaPoly& x) {  // multiply by lambda
    LambdaPoly r(x.size() + 1);
    for (size_t j = 0; j < x.size(); ++j) r[j + 1] = x[j];
    return r;
}

} // namespace

ExactScalar eval_lambda_poly(const LambdaPoly& p, const ExactScalar& x) {
    ExactScalar acc;
    for (size_t j = p.size(); j-- > 0;) acc = acc * x + p[j];
    return acc;
}

Mat eval_lambda_poly(const LambdaPoly& p, const Mat& x) {
    Mat acc = Mat::zero(x.rows(), x.cols());
    const Mat I = Mat::identity(x.rows());
    for (size_t j = p.size(); j-- > 0;) acc = acc * x + I.scaled(p[j]);
    return acc;
}

void ParameterSequence::validate() const {
    if (b.is_zero() || b_star.is_zero() || c.is_zero() || r.is_zero())
        throw PreconditionError("dual q-Hahn parameters b, b*, c, r must be nonzero");
    const ExactScalar cbr = c / (b * r);
    for (long i = 1; i <= d; ++i) {
        if (r * ExactScalar::q_pow(i) == kOne)
            throw PreconditionError("degenerate parameters: r q^" + std::to_string(i) + " = 1");
        if (cbr * ExactScalar::q_pow(i - 1) == kOne)
            throw PreconditionError("degenerate parameters: c b^-1 r^-1 q^" +
                                    std::to_string(i - 1) + " = 1");
    }
    if (t * t != c / b) throw PreconditionError("t^2 != b^{-1} c");
}

LeonardData derive(const ParameterSequence& ps) {
    ps.validate();
    const long d = ps.d;
    LeonardData ld;
    for (long i = 0; i <= d; ++i) {
        ld.theta.push_back(ps.a + ps.b * ExactScalar::q_pow(-i) + ps.c * ExactScalar::q_pow(i));
        ld.theta_star.push_back(ps.a_star + ps.b_star * ExactScalar::q_pow(-i));
    }
    for (long i = 0; i <= d; ++i)
        for (long j = i + 1; j <= d; ++j) {
            if (ld.theta[i] == ld.theta[j])
                throw PreconditionError("eigenvalues not mutually distinct");
            if (ld.theta_star[i] == ld.theta_star[j])
                throw PreconditionError("dual eigenvalues not mutually distinct");
        }
    for (long i = 1; i <= d; ++i) {
        ld.phi.push_back(ps.b * ps.b_star * ExactScalar::q_pow(1 - 2 * i) *
                         (kOne - ExactScalar::q_pow(i)) * (kOne - ExactScalar::q_pow(i - d - 1)) *
                         (kOne - ps.r * ExactScalar::q_pow(i)));
        ld.phi_down.push_back(ps.c * ps.b_star * ExactScalar::q_pow(d + 1 - 2 * i) *
                              (kOne - ExactScalar::q_pow(i)) *
                              (kOne - ExactScalar::q_pow(i - d - 1)) *
                              (kOne - ps.b * ps.r * ExactScalar::q_pow(i - d) / ps.c));
    }
    // closed forms of the intersection numbers
    for (long i = 0; i <= d; ++i) {
        ld.b.push_back(ps.b * (kOne - ExactScalar::q_pow(i - d)) *
                       (kOne - ps.r * ExactScalar::q_pow(i + 1)));
        ld.c.push_back((kOne - ExactScalar::q_pow(i)) *
                       (ps.c - ps.b * ps.r * ExactScalar::q_pow(i - d)));
    }
    // split-sequence quotient route; the two must coincide
    for (long i = 0; i < d; ++i) {
        ExactScalar num = kOne, den = kOne;
        for (long m2 = 0; m2 < i; ++m2) num *= ld.theta_star[i] - ld.theta_star[m2];
        for (long m2 = 0; m2 <= i; ++m2) den *= ld.theta_star[i + 1] - ld.theta_star[m2];
        if (ld.phi[i] * num / den != ld.b[i])
            throw Error("intersection number b_" + std::to_string(i) +
                        ": closed form and split-quotient route disagree");
    }
    for (long i = 1; i <= d; ++i) {
        ExactScalar num = kOne, den = kOne;
        for (long m2 = i + 1; m2 <= d; ++m2) num *= ld.theta_star[i] - ld.theta_star[m2];
        for (long m2 = i; m2 <= d; ++m2) den *= ld.theta_star[i - 1] - ld.theta_star[m2];
        if (ld.phi_down[i - 1] * num / den != ld.c[i])
            throw Error("intersection number c_" + std::to_string(i) +
                        ": closed form and split-quotient route disagree");
    }
    for (long i = 0; i <= d; ++i) ld.a.push_back(ld.theta[0] - ld.b[i] - ld.c[i]);
    ld.k.push_back(kOne);
    for (long i = 1; i <= d; ++i) ld.k.push_back(ld.k[i - 1] * ld.b[i - 1] / ld.c[i]);
    // weights m_i
    const ExactScalar t2 = ps.t * ps.t;
    ExactScalar msum;
    for (long i = 0; i <= d; ++i) {
        ExactScalar mi = ExactScalar::q_pow(d - i) * ps.r.pow(d - i) *
                         q_pochhammer(ExactScalar::q_pow(i + 1), d - i) *
                         q_pochhammer(t2 * ExactScalar::q_pow(i) / ps.r, d - i) *
                         q_pochhammer(ps.r * ExactScalar::q_pow(1), i) *
                         (kOne - t2 * ExactScalar::q_pow(2 * i)) /
                         (q_pochhammer(ExactScalar::q_pow(1), d - i) *
                          q_pochhammer(t2 * ExactScalar::q_pow(i), d + 1));
        ld.m.push_back(mi);
        msum += mi;
    }
    if (msum != kOne) throw Error("sum of m_i != 1");
    return ld;
}

PolyFamily polynomials(const ParameterSequence& ps, const LeonardData& ld) {
    const long d = ps.d;
    PolyFamily pf;
    pf.v.push_back(LambdaPoly{kOne});
    for (long i = 0; i < d; ++i) {
        // c_{i+1} v_{i+1} = (lambda - a_i) v_i - b_{i-1} v_{i-1}
        LambdaPoly t = poly_shift_lambda(pf.v[i]);
        t = poly_add(t, poly_scale(pf.v[i], -ld.a[i]));
        if (i >= 1) t = poly_add(t, poly_scale(pf.v[i - 1], -ld.b[i - 1]));
        pf.v.push_back(poly_scale(t, ld.c[i + 1].inv()));
    }
    // closed double sum for f_i
    for (long i = 0; i <= d; ++i) {
        LambdaPoly f = poly_zero();
        ExactScalar coef = kOne;             // (theta*_i - theta*_0)...(theta*_i - theta*_{n-1}) / phi_1..phi_n
        LambdaPoly lam_prod{kOne};           // (lambda - theta_0)...(lambda - theta_{n-1})
        for (long n = 0; n <= i; ++n) {
            if (n > 0) {
                coef *= (ld.theta_star[i] - ld.theta_star[n - 1]) / ld.phi[n - 1];
                lam_prod = poly_mul_linear(lam_prod, ld.theta[n - 1]);
            }
            f = poly_add(f, poly_scale(lam_prod, coef));
        }
        pf.f.push_back(f);
        if (f != poly_scale(pf.v[i], ld.k[i].inv()))
            throw Error("f_" + std::to_string(i) +
                        ": closed double sum and recurrence route disagree");
    }
    // h_i: monic symmetric Laurent renormalization, built from f_i and
    // cross-checked through the v_i prefactor identity
    const ExactScalar t2 = ps.t * ps.t;
    for (long i = 0; i <= d; ++i) {
        ExactScalar pref = q_pochhammer(ps.r * ExactScalar::q_pow(1), i) *
                           q_pochhammer(ExactScalar::q_pow(-d), i) * ps.t.pow(-i);
        ZetaLaurent h = substitute_zeta(pf.f[i], ps).scaled(pref);
        ExactScalar alt_pref = ps.t.pow(i) * q_pochhammer(ExactScalar::q_pow(1), i) *
                               q_pochhammer(ps.r * ExactScalar::q_pow(1 - d) / t2, i);
        if (h != substitute_zeta(pf.v[i], ps).scaled(alt_pref))
            throw Error("h_" + std::to_string(i) + ": the two prefactor routes disagree");
        if (!h.is_symmetric() || h.coeff(i) != kOne || (i > 0 && h.highest_degree() != i))
            throw Error("h_" + std::to_string(i) + " is not monic symmetric of degree " +
                        std::to_string(i));
        pf.h.push_back(std::move(h));
    }
    return pf;
}

ZetaLaurent substitute_zeta(const LambdaPoly& p, const ParameterSequence& ps) {
    ZetaLaurent lam = ZetaLaurent::constant(ps.a) +
                      ZetaLaurent::monomial(-1, ps.b * ps.t) +
                      ZetaLaurent::monomial(1, ps.c / ps.t);
    ZetaLaurent acc;
    for (size_t j = p.size(); j-- > 0;) acc = acc * lam + ZetaLaurent::constant(p[j]);
    return acc;
}

FourSystems four_systems(long N, long D) {
    if (D < 3) throw PreconditionError("four_systems requires D >= 3");
    if (N < 2 * D) throw PreconditionError("four_systems requires N >= 2D");
    const ExactScalar q = ExactScalar::q_pow(1);
    const ExactScalar one = kOne;
    const ExactScalar denom = (q - one) * (q - one);
    const ExactScalar tau = -ExactScalar::s_pow(-(N + 1));

    FourSystems fs;
    ParameterSequence& P = fs.phi;
    P.a = (q - ExactScalar::q_pow(N - D + 1) - ExactScalar::q_pow(D + 1) - one) / denom;
    P.a_star = (ExactScalar::q_pow(N) - q) *
               (ExactScalar(2) - ExactScalar::q_pow(D) - ExactScalar::q_pow(N - D)) /
               ((q - one) * (ExactScalar::q_pow(D) - one) * (ExactScalar::q_pow(N - D) - one));
    P.b = ExactScalar::q_pow(N + 1) / denom;
    P.b_star = (ExactScalar::q_pow(N) - q) * (ExactScalar::q_pow(N) - one) /
               ((q - one) * (ExactScalar::q_pow(D) - one) * (ExactScalar::q_pow(N - D) - one));
    P.c = one / denom;
    P.r = ExactScalar::q_pow(D - N - 1);
    P.d = D;
    P.t = tau;

    ParameterSequence& Pp = fs.phi_perp;
    Pp = P;
    Pp.b = P.b / q;
    Pp.b_star = P.b_star / q;
    Pp.c = P.c * q;
    Pp.r = P.r * q;
    Pp.d = D - 2;
    Pp.t = tau * q;

    const ExactScalar shift = (q - one) / (ExactScalar::q_pow(N - D + 1) - one);
    const ExactScalar scale =
        (ExactScalar::q_pow(N - D) - one) / (ExactScalar::q_pow(N - D + 1) - one);
    ParameterSequence& Pt = fs.phi_tilde;
    Pt = P;
    Pt.a_star = P.a_star + shift * P.b_star;
    Pt.b_star = scale * P.b_star;
    Pt.d = D - 1;
    Pt.t = tau;

    ParameterSequence& Ptp = fs.phi_tilde_perp;
    Ptp = Pt;
    Ptp.b = P.b / q;
    Ptp.c = P.c * q;
    Ptp.r = P.r * q;
    Ptp.d = D - 1;
    Ptp.t = tau * q;
    return fs;
}

DualityReport duality_check(const ParameterSequence& ps, const LeonardData& ld,
                            const PolyFamily& pf) {
    DualityReport rep;
    const ExactScalar t2 = ps.t * ps.t;
    for (long i = 0; i <= ps.d && rep.pass; ++i)
        for (long j = 0; j <= ps.d; ++j) {
            ExactScalar lhs = eval_lambda_poly(pf.f[i], ld.theta[j]);
            ExactScalar rhs = phi32(ExactScalar::q_pow(-i), ExactScalar::q_pow(-j),
                                    t2 * ExactScalar::q_pow(j), ps.r * ExactScalar::q_pow(1),
                                    ExactScalar::q_pow(-ps.d), ExactScalar::q_pow(1));
            if (lhs != rhs) {
                rep.pass = false;
                rep.witness = "(i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")";
                break;
            }
        }
    return rep;
}

namespace {
inline int idx_minus(long i) { return static_cast<int>(2 * i); }
inline int idx_plus(long i) { return static_cast<int>(2 * i + 1); }
} // namespace

ModuleMatrices module_matrices(long N, long D) {
    GrassmannScalars g = grassmann_scalars(N, D);
    const int dim = static_cast<int>(2 * D);
    ModuleMatrices mm{Mat(dim, dim), Mat(dim, dim), Mat(dim, dim)};
    auto qp = [](long e) { return ExactScalar::q_pow(e); };
    const ExactScalar valency = qp(1) * q_int(D) * q_int(N - D);
    for (long i = 0; i < D; ++i) {
        int cm = idx_minus(i), cp = idx_plus(i);
        // adjacency acting on C-_i
        if (i >= 1) {
            mm.adjacency.at(idx_minus(i - 1), cm) = qp(2 * i) * q_int(D - i) * q_int(N - D + 1 - i);
            mm.adjacency.at(idx_plus(i - 1), cm) = qp(2 * i) * q_int(D - i);
        }
        mm.adjacency.at(cm, cm) =
            valency - qp(2 * i + 1) * q_int(D - i) * q_int(N - D - i) - q_int(i + 1) * q_int(i);
        mm.adjacency.at(cp, cm) = qp(i) * q_int(i + 1);
        if (i + 1 <= D - 1) mm.adjacency.at(idx_minus(i + 1), cm) = q_int(i + 1) * q_int(i + 1);
        // adjacency acting on C+_i
        if (i >= 1)
            mm.adjacency.at(idx_plus(i - 1), cp) = qp(2 * i + 1) * q_int(D - i) * q_int(N - D - i);
        mm.adjacency.at(cm, cp) = qp(2 * i + 1) * q_int(N - D - i);
        mm.adjacency.at(cp, cp) = valency - qp(2 * i + 2) * q_int(D - 1 - i) * q_int(N - D - i) -
                                  q_int(i + 1) * q_int(i + 1);
        if (i + 1 <= D - 1) {
            mm.adjacency.at(idx_minus(i + 1), cp) = qp(i + 1) * q_int(i + 1);
            mm.adjacency.at(idx_plus(i + 1), cp) = q_int(i + 2) * q_int(i + 1);
        }
        mm.dual_adjacency.at(cm, cm) = g.theta_star[i];
        mm.dual_adjacency.at(cp, cp) = g.theta_star[i + 1];
        mm.clique_dual_adjacency.at(cm, cm) = g.theta_t_star[i];
        mm.clique_dual_adjacency.at(cp, cp) = g.theta_t_star[i];
    }
    return mm;
}

Mat module_matrix_adjacency_generic(long N, long D) {
    GrassmannScalars g = grassmann_scalars(N, D);
    const int dim = static_cast<int>(2 * D);
    Mat A(dim, dim);
    for (long i = 0; i < D; ++i) {
        int cm = idx_minus(i), cp = idx_plus(i);
        if (i >= 1) {
            A.at(idx_minus(i - 1), cm) = g.b_t[i - 1];
            A.at(idx_plus(i - 1), cm) = g.b_t[i - 1] - g.b[i];
            A.at(idx_plus(i - 1), cp) = g.b[i];
        }
        A.at(cm, cm) = g.a_t[i] - g.b[i] + g.b_t[i];
        A.at(cp, cm) = g.c[i + 1] - g.c_t[i];
        A.at(cm, cp) = g.b[i] - g.b_t[i];
        A.at(cp, cp) = g.a_t[i] - g.c[i + 1] + g.c_t[i];
        if (i + 1 <= D - 1) {
            A.at(idx_minus(i + 1), cm) = g.c[i + 1];
            A.at(idx_minus(i + 1), cp) = g.c_t[i + 1] - g.c[i + 1];
            A.at(idx_plus(i + 1), cp) = g.c_t[i + 1];
        }
    }
    return A;
}

ProjectionPair projections(long N, long D) {
    const int dim = static_cast<int>(2 * D);
    ProjectionPair pp{Mat(dim, dim), Mat(dim, dim)};
    const ExactScalar one = kOne;
    const ExactScalar qD = ExactScalar::q_pow(D);
    pp.onto_mx.at(idx_minus(0), idx_minus(0)) = one;
    pp.onto_mx.at(idx_plus(D - 1), idx_plus(D - 1)) = one;
    for (long i = 1; i <= D - 1; ++i) {
        ExactScalar cp = (ExactScalar::q_pow(i) - one) / (qD - one);
        ExactScalar cm = (qD - ExactScalar::q_pow(i)) / (qD - one);
        // pi maps both C+_{i-1} and C-_i into the line spanned by their sum
        pp.onto_mx.at(idx_plus(i - 1), idx_plus(i - 1)) = cp;
        pp.onto_mx.at(idx_minus(i), idx_plus(i - 1)) = cp;
        pp.onto_mx.at(idx_plus(i - 1), idx_minus(i)) = cm;
        pp.onto_mx.at(idx_minus(i), idx_minus(i)) = cm;
    }
    const ExactScalar qnd = ExactScalar::q_pow(N - D + 1);
    for (long i = 0; i <= D - 1; ++i) {
        ExactScalar cm = (ExactScalar::q_pow(i + 1) - one) / (qnd - one);
        ExactScalar cp = (qnd - ExactScalar::q_pow(i + 1)) / (qnd - one);
        pp.onto_mc.at(idx_minus(i), idx_minus(i)) = cm;
        pp.onto_mc.at(idx_plus(i), idx_minus(i)) = cm;
        pp.onto_mc.at(idx_minus(i), idx_plus(i)) = cp;
        pp.onto_mc.at(idx_plus(i), idx_plus(i)) = cp;
    }
    return pp;
}

Mat basis_vector_Aix(long D, long i) {
    Mat v(static_cast<int>(2 * D), 1);
    if (i >= 1 && i <= D) v.at(idx_plus(i - 1), 0) = kOne;
    if (i <= D - 1) v.at(idx_minus(i), 0) = kOne;
    return v;
}

Mat basis_vector_u_perp(long D, long i) {
    Mat v(static_cast<int>(2 * D), 1);
    v.at(idx_plus(i), 0) = ExactScalar::q_pow(D - i - 1) - kOne;
    v.at(idx_minus(i + 1), 0) = ExactScalar::q_pow(-i - 1) - kOne;
    return v;
}

Mat basis_vector_Ci(long D, long i) {
    Mat v(static_cast<int>(2 * D), 1);
    v.at(idx_minus(i), 0) = kOne;
    v.at(idx_plus(i), 0) = kOne;
    return v;
}

Mat basis_vector_u_tilde_perp(long N, long D, long i) {
    Mat v(static_cast<int>(2 * D), 1);
    v.at(idx_minus(i), 0) = ExactScalar::q_pow(N - D - i) - kOne;
    v.at(idx_plus(i), 0) = ExactScalar::q_pow(-i - 1) - kOne;
    return v;
}

} // namespace ghv
