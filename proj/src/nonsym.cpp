#include "ghv/nonsym.hpp"

#include <random>

#include "ghv/errors.hpp"
#include "ghv/qseries.hpp"

namespace ghv {

namespace {
const ExactScalar kOne = ExactScalar::one();
ExactScalar qp(long e) { return ExactScalar::q_pow(e); }
ZetaLaurent linear_factor(const ExactScalar& root) {  // zeta - root
    return ZetaLaurent::zeta() - ZetaLaurent::constant(root);
}
} // namespace

Auxiliaries build_auxiliaries(long N, long D) {
    const ExactScalar tau = -ExactScalar::s_pow(-(N + 1));
    Auxiliaries aux;
    aux.p_perp = (linear_factor(tau) * linear_factor(tau.inv() * qp(-D))).shifted(-1);
    aux.p_tilde = linear_factor(tau.inv() * qp(-D)).shifted(-1);
    aux.p_tilde_perp = linear_factor(tau).shifted(-1);
    aux.h_perp_top = ZetaLaurent::one();
    for (long j = 1; j <= D - 1; ++j)
        aux.h_perp_top = aux.h_perp_top * linear_factor(tau * qp(j)) *
                         linear_factor(tau.inv() * qp(-j));
    aux.h_perp_top = aux.h_perp_top.shifted(static_cast<int>(1 - D));
    aux.mu = (aux.p_perp * aux.h_perp_top).shifted(static_cast<int>(D));
    if (aux.mu.lowest_degree() != 0 || aux.mu.highest_degree() != 2 * D)
        throw Error("minimal polynomial is not an ordinary polynomial of degree 2D");
    return aux;
}

NonSymFamily build_family(long N, long D) {
    FourSystems fs = four_systems(N, D);
    PolyFamily hv = polynomials(fs.phi, derive(fs.phi));
    PolyFamily hp = polynomials(fs.phi_perp, derive(fs.phi_perp));
    PolyFamily ht = polynomials(fs.phi_tilde, derive(fs.phi_tilde));
    PolyFamily htp = polynomials(fs.phi_tilde_perp, derive(fs.phi_tilde_perp));
    Auxiliaries aux = build_auxiliaries(N, D);
    const ExactScalar tau = fs.phi.t;

    NonSymFamily fam;
    fam.N = N;
    fam.D = D;
    auto poch_q = [](long n) { return q_pochhammer(qp(1), n); };
    for (long i = 0; i <= D - 1; ++i) {
        ExactScalar pref = (qp(D) - qp(i)) / (tau.pow(i) * (qp(D) - kOne) * poch_q(i) * poch_q(i));
        ZetaLaurent body = hv.h[static_cast<size_t>(i)];
        if (i >= 1)
            body -= (aux.p_perp * hp.h[static_cast<size_t>(i - 1)])
                        .scaled((kOne - qp(i)) / (qp(D) - qp(i)));
        fam.minus.push_back(body.scaled(pref));

        ExactScalar prefp = (qp(i + 1) - kOne) /
                            (tau.pow(i + 1) * (qp(D) - kOne) * poch_q(i + 1) * poch_q(i + 1));
        const ZetaLaurent& hperp_i = i <= D - 2 ? hp.h[static_cast<size_t>(i)] : aux.h_perp_top;
        fam.plus.push_back(
            (hv.h[static_cast<size_t>(i + 1)] - aux.p_perp * hperp_i).scaled(prefp));
    }
    // clique-side route; the two families must coincide identically
    const ExactScalar qnd = qp(N - D + 1);
    for (long i = 0; i <= D - 1; ++i) {
        ExactScalar pref = (tau.pow(i) * (kOne - qnd) * poch_q(i) * poch_q(i)).inv();
        ZetaLaurent tm = (aux.p_tilde * ht.h[static_cast<size_t>(i)] -
                          (aux.p_tilde_perp * htp.h[static_cast<size_t>(i)]).scaled(qnd))
                             .scaled(pref);
        ExactScalar prefp = qnd / (tau.pow(i) * (qnd - kOne) * poch_q(i) * poch_q(i));
        ZetaLaurent tp =
            ((aux.p_tilde * ht.h[static_cast<size_t>(i)])
                 .scaled((kOne - qp(D - N + i)) / (kOne - qp(i + 1))) -
             aux.p_tilde_perp * htp.h[static_cast<size_t>(i)])
                .scaled(prefp);
        if (tm != fam.minus[static_cast<size_t>(i)] || tp != fam.plus[static_cast<size_t>(i)])
            throw Error("vertex-side and clique-side constructions disagree at index " +
                        std::to_string(i));
    }
    // degree windows
    for (long i = 0; i <= D - 1; ++i) {
        const ZetaLaurent& m = fam.minus[static_cast<size_t>(i)];
        const ZetaLaurent& p = fam.plus[static_cast<size_t>(i)];
        bool ok = p.highest_degree() == i && p.lowest_degree() == -i - 1;
        if (i == 0)
            ok = ok && m == ZetaLaurent::one();
        else
            ok = ok && m.highest_degree() == i && m.lowest_degree() == -i;
        if (!ok) throw Error("degree window violated at index " + std::to_string(i));
    }
    fam.minus_top =
        (aux.p_perp * aux.h_perp_top).scaled((tau.pow(D) * poch_q(D) * poch_q(D)).inv());
    ZetaLaurent factor = ZetaLaurent::constant(tau * qp(D + 1)) - ZetaLaurent::zeta(-1);
    fam.plus_top = (factor * aux.p_perp * aux.h_perp_top)
                       .scaled((tau.pow(D + 1) * poch_q(D) * poch_q(D + 1)).inv());
    return fam;
}

std::vector<TermCoeff> stated_action_terms(long N, long D, bool inverse, int sigma, long i) {
    const ExactScalar tau = -ExactScalar::s_pow(-(N + 1));
    std::vector<TermCoeff> t;
    if (sigma == 0 && !inverse) {
        t.push_back({1, i - 1, tau * (qp(i) - qp(D)) * (qp(N - D + 1) - qp(i + 1) + kOne)});
        t.push_back({0, i, tau * qp(i) * (qp(N - D + 1) - qp(i + 1) + kOne)});
        t.push_back({1, i, tau * (kOne - qp(i + 1)) * (qp(D) - qp(i + 1) + kOne)});
        t.push_back({0, i + 1, tau * (qp(i + 1) - kOne) * (qp(i + 1) - kOne)});
    } else if (sigma == 0 && inverse) {
        t.push_back({0, i - 1, tau * (kOne - qp(i - D)) * (qp(N + 1) - qp(D + i))});
        t.push_back({1, i - 1, tau * (qp(D) - qp(i)) * (qp(N - D + 1) - qp(i) + kOne)});
        t.push_back({0, i, tau * qp(i + 1) * (qp(D) - qp(i) + kOne)});
        t.push_back({1, i, tau * (qp(i + 1) - kOne) * (qp(D) - qp(i) + kOne)});
    } else if (sigma == 1 && !inverse) {
        t.push_back({1, i - 1, tau * qp(N + 1) * (qp(i - D) - kOne) * (qp(D - N + i) - kOne)});
        t.push_back({0, i, tau * qp(N - D + 1 + i) * (qp(D - N + i) - kOne)});
        t.push_back({1, i, tau * qp(i + 1) * (qp(D) - qp(i + 1) + kOne)});
        t.push_back({0, i + 1, tau * qp(i + 1) * (kOne - qp(i + 1))});
    } else {
        t.push_back({0, i, tau * qp(N - D + 2 + i) * (kOne - qp(D - N + i))});
        t.push_back({1, i, tau * qp(i + 1) * (qp(N - D + 1) - qp(i + 1) + kOne)});
        t.push_back({0, i + 1, tau * qp(i + 2) * (qp(i + 1) - kOne)});
        t.push_back({1, i + 1, tau * (qp(i + 1) - kOne) * (qp(i + 2) - kOne)});
    }
    std::vector<TermCoeff> out;
    for (auto& tc : t)
        if (tc.index >= 0 && !tc.coeff.is_zero()) out.push_back(std::move(tc));
    return out;
}

CheckList verify_module_realization(long N, long D) {
    CheckList cl;
    HvGenerators g = build_generators(N, D);
    SpectralData sd = build_spectral(g);
    NonSymFamily fam = build_family(N, D);
    Auxiliaries aux = build_auxiliaries(N, D);
    const int dim = g.dim();
    const Mat xhat = unit_column(dim, 0);
    for (long i = 0; i <= D - 1; ++i) {
        Mat vm = fam.minus[static_cast<size_t>(i)].eval_matrix(sd.X, sd.X_inv) * xhat;
        Mat vp = fam.plus[static_cast<size_t>(i)].eval_matrix(sd.X, sd.X_inv) * xhat;
        cl.add_zero("minus family realizes cell " + std::to_string(i),
                    vm - unit_column(dim, static_cast<int>(2 * i)));
        cl.add_zero("plus family realizes cell " + std::to_string(i),
                    vp - unit_column(dim, static_cast<int>(2 * i + 1)));
    }
    Mat top = aux.h_perp_top.eval_matrix(sd.X, sd.X_inv);
    for (long j = 0; j <= D - 2; ++j)
        cl.add_zero("inner annihilator kills u_perp_" + std::to_string(j),
                    top * basis_vector_u_perp(D, j));
    // the three p-polynomials map x-hat onto the stated generators
    GrassmannScalars gs = grassmann_scalars(N, D);
    Mat pm = aux.p_perp.eval_matrix(sd.X, sd.X_inv) * xhat;
    cl.add_zero("p_perp(X) x-hat",
                pm - basis_vector_u_perp(D, 0).scaled(gs.tau * qp(1) * (kOne - qp(1))));
    Mat pt = aux.p_tilde.eval_matrix(sd.X, sd.X_inv) * xhat;
    cl.add_zero("p_tilde(X) x-hat", pt - basis_vector_Ci(D, 0).scaled(kOne - qp(1)));
    Mat ptp = aux.p_tilde_perp.eval_matrix(sd.X, sd.X_inv) * xhat;
    cl.add_zero("p_tilde_perp(X) x-hat",
                ptp - basis_vector_u_tilde_perp(N, D, 0).scaled(qp(D - N)));
    return cl;
}

namespace {

// expansion of f (supported on zeta^{-D-1}..zeta^{D}) in the family basis
std::vector<ExactScalar> expand_in_family(const NonSymFamily& fam, const ZetaLaurent& f) {
    const long D = fam.D;
    const int n = static_cast<int>(2 * D + 2);
    Mat A(n, n), rhs(n, 1);
    // columns: minus 0..D then plus 0..D; rows: exponents -D-1..D
    for (long i = 0; i <= D; ++i)
        for (int e = -static_cast<int>(D) - 1; e <= static_cast<int>(D); ++e) {
            A.at(e + static_cast<int>(D) + 1, static_cast<int>(i)) = fam.at(0, i).coeff(e);
            A.at(e + static_cast<int>(D) + 1, static_cast<int>(D + 1 + i)) = fam.at(1, i).coeff(e);
        }
    for (int e = -static_cast<int>(D) - 1; e <= static_cast<int>(D); ++e)
        rhs.at(e + static_cast<int>(D) + 1, 0) = f.coeff(e);
    Mat sol = A.solve(rhs);
    std::vector<ExactScalar> out(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) out[static_cast<size_t>(j)] = sol.at(j, 0);
    return out;
}

} // namespace

CheckList verify_recurrence_tables(long N, long D) {
    CheckList cl;
    NonSymFamily fam = build_family(N, D);
    for (int sigma = 0; sigma <= 1; ++sigma)
        for (int inv = 0; inv <= 1; ++inv)
            for (long i = 0; i <= D - 1; ++i) {
                ZetaLaurent f = fam.at(sigma, i).shifted(inv ? -1 : 1);
                std::vector<ExactScalar> got = expand_in_family(fam, f);
                std::vector<ExactScalar> want(static_cast<size_t>(2 * D + 2));
                for (const TermCoeff& tc : stated_action_terms(N, D, inv != 0, sigma, i))
                    want[static_cast<size_t>(tc.sign == 0 ? tc.index : D + 1 + tc.index)] =
                        tc.coeff;
                bool ok = got == want;
                std::string name = std::string("expansion of zeta") + (inv ? "^-1 " : " ") +
                                   (sigma == 0 ? "ell-_" : "ell+_") + std::to_string(i);
                std::string witness;
                if (!ok)
                    for (size_t j = 0; j < want.size(); ++j)
                        if (got[j] != want[j]) {
                            witness = "component " + std::to_string(j) + ": got " + got[j].str() +
                                      ", want " + want[j].str();
                            break;
                        }
                cl.add(name, ok, witness);
            }
    return cl;
}

ExactScalar HermitianFormL::eval(const ZetaLaurent& f, const ZetaLaurent& g) const {
    ExactScalar acc;
    std::vector<ExactScalar> fv(static_cast<size_t>(2 * D)), gv(static_cast<size_t>(2 * D));
    for (long i = -D; i <= D - 1; ++i) {
        fv[static_cast<size_t>(i + D)] = f.eval(lambda[static_cast<size_t>(i + D)]);
        gv[static_cast<size_t>(i + D)] = g.eval(lambda[static_cast<size_t>(i + D)]);
    }
    for (long i = -D; i <= D - 1; ++i)
        acc += fv[static_cast<size_t>(i + D)] * gv[static_cast<size_t>(i + D)].conj() *
               omega[static_cast<size_t>(i + D)];
    for (long i = 1; i <= D - 1; ++i)
        acc += (fv[static_cast<size_t>(i + D)] * gv[static_cast<size_t>(-i + D)].conj() +
                fv[static_cast<size_t>(-i + D)] * gv[static_cast<size_t>(i + D)].conj()) *
               omega_vee[static_cast<size_t>(i - 1)];
    return acc;
}

HermitianFormL build_form(long N, long D) {
    HermitianFormL form;
    form.D = D;
    const ExactScalar tau = -ExactScalar::s_pow(-(N + 1));
    form.lambda.resize(static_cast<size_t>(2 * D));
    for (long i = -D; i <= D - 1; ++i)
        form.lambda[static_cast<size_t>(i + D)] =
            i >= 0 ? tau * qp(i) : tau.inv() * qp(i);
    // closed norm formulas
    form.omega.resize(static_cast<size_t>(2 * D));
    form.omega[static_cast<size_t>(0 + D)] =
        q_pochhammer(qp(1), D) / q_pochhammer(qp(N - D + 1), D);
    form.omega[0] = qp(D) * (qp(N - 2 * D + 1) - kOne) / (qp(N - D + 1) - kOne);
    for (long i = 1; i <= D - 1; ++i) {
        ExactScalar tail = q_pochhammer(qp(i), D - i) / q_pochhammer(qp(N - D + 1), D - i);
        form.omega[static_cast<size_t>(i + D)] =
            (qp(D - i) - kOne) * (qp(N + 1) + qp(D) - qp(D + i) - qp(i)) /
            ((qp(i) - kOne) * (qp(N - 2 * i + 1) - kOne)) * tail;
        form.omega[static_cast<size_t>(-i + D)] =
            qp(D + N - 2 * i + 1) * (qp(N - D - i + 1) - kOne) *
            (qp(D) - qp(D - N + i - 1) - qp(i) + kOne) /
            ((qp(N + 1 - i) - kOne) * (qp(N + 1 - 2 * i) - kOne)) * tail;
        form.omega_vee.push_back(qp(D) * (kOne - qp(D - i)) * (kOne - qp(N - D - i + 1)) /
                                 (kOne - qp(N - 2 * i + 1)) * tail);
    }
    // independent route through the eigenvector inner products
    SpectralData sd = build_spectral(build_generators(N, D));
    for (long i = -D; i <= D - 1; ++i) {
        if (form.lambda[static_cast<size_t>(i + D)] != sd.lambda_at(i))
            throw Error("node mismatch at index " + std::to_string(i));
        if (form.omega[static_cast<size_t>(i + D)] != sd.omega_at(i))
            throw Error("closed norm formula disagrees with the module inner product at index " +
                        std::to_string(i));
    }
    for (long i = 1; i <= D - 1; ++i)
        if (form.omega_vee[static_cast<size_t>(i - 1)] != sd.omega_vee[static_cast<size_t>(i - 1)])
            throw Error("closed pairing formula disagrees with the module inner product at index " +
                        std::to_string(i));
    return form;
}

CheckList verify_orthogonality(long N, long D, unsigned seed, int random_pairs) {
    CheckList cl;
    HermitianFormL form = build_form(N, D);
    NonSymFamily fam = build_family(N, D);
    GrassmannScalars gs = grassmann_scalars(N, D);
    bool gram_ok = true;
    std::string witness;
    for (long i = 0; i <= D - 1 && gram_ok; ++i)
        for (int si = 0; si <= 1 && gram_ok; ++si)
            for (long j = 0; j <= D - 1 && gram_ok; ++j)
                for (int sj = 0; sj <= 1; ++sj) {
                    ExactScalar got = form.eval(fam.at(si, i), fam.at(sj, j));
                    ExactScalar want;
                    if (i == j && si == sj)
                        want = si == 0 ? gs.cell_minus[static_cast<size_t>(i)]
                                       : gs.cell_plus[static_cast<size_t>(i)];
                    if (got != want) {
                        gram_ok = false;
                        witness = "pair (" + std::to_string(i) + (si ? "+" : "-") + ", " +
                                  std::to_string(j) + (sj ? "+" : "-") + "): got " + got.str();
                        break;
                    }
                }
    cl.add("Gram matrix equals the cell-size diagonal", gram_ok, witness);

    // quadrature identity against the module inner product
    HvGenerators g = build_generators(N, D);
    SpectralData sd = build_spectral(g);
    const std::vector<ExactScalar> w = gs.cell_weights();
    const Mat xhat = unit_column(g.dim(), 0);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    bool quad_ok = true;
    std::string qwitness;
    for (int t = 0; t < random_pairs && quad_ok; ++t) {
        ZetaLaurent f, h;
        for (int e = -static_cast<int>(D); e <= static_cast<int>(D) - 1; ++e) {
            f.set_coeff(e, ExactScalar(coeff(rng)));
            h.set_coeff(e, ExactScalar(coeff(rng)));
        }
        ExactScalar lhs = form.eval(f, h);
        Mat vf = f.eval_matrix(sd.X, sd.X_inv) * xhat;
        Mat vh = h.eval_matrix(sd.X, sd.X_inv) * xhat;
        ExactScalar rhs = dot_weighted(vf, vh, w);
        if (lhs != rhs) {
            quad_ok = false;
            qwitness = "pair " + std::to_string(t) + ": " + lhs.str() + " != " + rhs.str();
        }
    }
    cl.add("quadrature identity on " + std::to_string(random_pairs) + " random pairs", quad_ok,
           qwitness);
    return cl;
}

CheckList verify_minimal_polynomial(long N, long D) {
    CheckList cl;
    HvGenerators g = build_generators(N, D);
    SpectralData sd = build_spectral(g);
    Auxiliaries aux = build_auxiliaries(N, D);
    cl.add_zero("minimal polynomial annihilates X", aux.mu.eval_matrix(sd.X, sd.X_inv));
    // no proper divisor annihilates: drop each root in turn
    bool minimal = true;
    std::string witness;
    for (long drop = -D; drop <= D - 1; ++drop) {
        Mat prod = Mat::identity(g.dim());
        for (long i = -D; i <= D - 1; ++i) {
            if (i == drop) continue;
            prod = prod * (sd.X - Mat::identity(g.dim()).scaled(sd.lambda_at(i)));
        }
        if (prod.is_zero()) {
            minimal = false;
            witness = "dropping the root at index " + std::to_string(drop) + " still annihilates";
            break;
        }
    }
    cl.add("minimality over all degree-(2D-1) divisors", minimal, witness);
    return cl;
}

} // namespace ghv
