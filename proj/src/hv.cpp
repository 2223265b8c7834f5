#include "ghv/hv.hpp"

#include "ghv/errors.hpp"
#include "ghv/qseries.hpp"

namespace ghv {

namespace {
const ExactScalar kOne = ExactScalar::one();
inline int im_(long i) { return static_cast<int>(2 * i); }
inline int ip_(long i) { return static_cast<int>(2 * i + 1); }
} // namespace

void CheckList::add_zero(const std::string& name, const Mat& residual) {
    for (int r = 0; r < residual.rows(); ++r)
        for (int c = 0; c < residual.cols(); ++c)
            if (!residual.at(r, c).is_zero()) {
                add(name, false,
                    "entry (" + std::to_string(r) + "," + std::to_string(c) +
                        ") = " + residual.at(r, c).str());
                return;
            }
    add(name, true);
}

HvGenerators build_generators(long N, long D) {
    if (D < 3) throw PreconditionError("build_generators requires D >= 3");
    if (N < 2 * D) throw PreconditionError("build_generators requires N >= 2D");
    HvGenerators g;
    g.N = N;
    g.D = D;
    g.k = ExactScalar::i() * ExactScalar::s_pow(D - N - 1);
    g.k_prime = ExactScalar::i() * ExactScalar::s_pow(-D);
    g.u = ExactScalar::s_pow(2 * D - N);
    const int dim = g.dim();
    g.T = Mat(dim, dim);
    g.T_prime = Mat(dim, dim);
    g.U = Mat(dim, dim);
    g.U_prime = Mat(dim, dim);
    auto qp = [](long e) { return ExactScalar::q_pow(e); };

    // T: D of the 2x2 blocks t(i)
    for (long i = 0; i < D; ++i) {
        int o = im_(i);
        g.T.at(o, o) = g.k * (kOne - qp(i + 1) + qp(N - D + 1));
        g.T.at(o, o + 1) = g.k * qp(N - D + 1) * (qp(D - N + i) - kOne);
        g.T.at(o + 1, o) = g.k * (kOne - qp(i + 1));
        g.T.at(o + 1, o + 1) = g.k * qp(i + 1);
    }
    // U': D of the 2x2 blocks u'(i)
    for (long i = 0; i < D; ++i) {
        int o = im_(i);
        g.U_prime.at(o, o) = -kOne;
        g.U_prime.at(o + 1, o) = qp(-i - 1) - kOne;
    }
    // T': 1x1 [k'], then 2x2 t'(i), then 1x1 [k']
    g.T_prime.at(0, 0) = g.k_prime;
    g.T_prime.at(dim - 1, dim - 1) = g.k_prime;
    for (long i = 1; i <= D - 1; ++i) {
        int o = ip_(i - 1);
        g.T_prime.at(o, o) = g.k_prime * (kOne - qp(i) + qp(D));
        g.T_prime.at(o, o + 1) = g.k_prime * (qp(i) - qp(D));
        g.T_prime.at(o + 1, o) = g.k_prime * (kOne - qp(i));
        g.T_prime.at(o + 1, o + 1) = g.k_prime * qp(i);
    }
    // U: 1x1 [0], then 2x2 u(i), then 1x1 [-u^{-1}]
    const ExactScalar uinv = g.u.inv();
    g.U.at(dim - 1, dim - 1) = -uinv;
    for (long i = 1; i <= D - 1; ++i) {
        int o = ip_(i - 1);
        g.U.at(o, o) = -uinv;
        g.U.at(o, o + 1) = uinv * (kOne - qp(D - i));
    }
    return g;
}

CheckList verify_hv_relations(const HvGenerators& g) {
    CheckList cl;
    const Mat I = Mat::identity(g.dim());
    const ExactScalar s = ExactScalar::s_pow(1);
    const Mat kI = I.scaled(g.k), kiI = I.scaled(g.k.inv());
    const Mat kpI = I.scaled(g.k_prime), kpiI = I.scaled(g.k_prime.inv());
    const Mat uiI = I.scaled(g.u.inv());
    cl.add_zero("quadratic relation for T", (g.T - kI) * (g.T + kiI));
    cl.add_zero("quadratic relation for U'", g.U_prime * (g.U_prime + I));
    cl.add_zero("quadratic relation for T'", (g.T_prime - kpI) * (g.T_prime + kpiI));
    cl.add_zero("quadratic relation for U", g.U * (g.U + uiI));
    cl.add_zero("cross relation q^(1/2) T'TU' = U + u^(-1)",
                (g.T_prime * g.T * g.U_prime).scaled(s) - g.U - uiI);
    cl.add_zero("cross relation q^(1/2) UT'T = U' + 1",
                (g.U * g.T_prime * g.T).scaled(s) - g.U_prime - I);
    return cl;
}

SpectralData build_spectral(const HvGenerators& g) {
    const long N = g.N, D = g.D;
    const int dim = g.dim();
    SpectralData sd;
    sd.Dv = D;
    sd.X = g.T_prime * g.T;
    sd.X_inv = sd.X.inverse();
    sd.A = sd.X + sd.X_inv;
    const ExactScalar s = ExactScalar::s_pow(1);
    const ExactScalar qk = ExactScalar::q_pow(1) * g.k;
    sd.A_star = (g.U * g.T_prime.scaled(s.inv()) + g.T * g.U_prime).scaled(qk);
    sd.A_tilde_star = (g.U * g.T_prime.scaled(s) + g.T * g.U_prime).scaled(qk);

    // diagonal shape of the dual operators
    for (long i = 0; i < D; ++i) {
        if (sd.A_star.at(im_(i), im_(i)) != ExactScalar::q_pow(-i) ||
            sd.A_star.at(ip_(i), ip_(i)) != ExactScalar::q_pow(-i - 1) ||
            sd.A_tilde_star.at(im_(i), im_(i)) != ExactScalar::q_pow(-i) ||
            sd.A_tilde_star.at(ip_(i), ip_(i)) != ExactScalar::q_pow(-i))
            throw Error("dual operator diagonals do not match the stated powers of q");
    }
    Mat off = sd.A_star, off2 = sd.A_tilde_star;
    for (int i = 0; i < dim; ++i) {
        off.at(i, i) = ExactScalar::zero();
        off2.at(i, i) = ExactScalar::zero();
    }
    if (!off.is_zero() || !off2.is_zero()) throw Error("dual operators are not diagonal");

    // primitive idempotents of the adjacency action
    GrassmannScalars gs = grassmann_scalars(N, D);
    Mat A_W = module_matrices(N, D).adjacency;
    const Mat I = Mat::identity(dim);
    for (long i = 0; i <= D; ++i) {
        Mat E = I;
        for (long j = 0; j <= D; ++j) {
            if (j == i) continue;
            E = (E * (A_W - I.scaled(gs.theta[j]))).scaled((gs.theta[i] - gs.theta[j]).inv());
        }
        sd.idempotents.push_back(std::move(E));
    }
    Mat sum = Mat::zero(dim, dim);
    for (const Mat& E : sd.idempotents) sum = sum + E;
    if (!(sum == I)) throw Error("idempotents do not resolve the identity");

    const Mat xhat = unit_column(dim, 0);
    const Mat up0 = basis_vector_u_perp(D, 0);
    if (!(sd.idempotents[0] * up0).is_zero() || !(sd.idempotents[D] * up0).is_zero())
        throw Error("u_perp_0 has components outside the inner eigenspaces");

    sd.basis_change = Mat(dim, dim);
    sd.basis_change.set_column(0, sd.idempotents[0] * xhat);
    for (long i = 1; i <= D - 1; ++i) {
        sd.basis_change.set_column(2 * static_cast<int>(i) - 1, sd.idempotents[i] * xhat);
        sd.basis_change.set_column(2 * static_cast<int>(i), sd.idempotents[i] * up0);
    }
    sd.basis_change.set_column(dim - 1, sd.idempotents[D] * xhat);

    // eigenvalues and eigenvectors of X
    const ExactScalar tau = gs.tau;
    sd.lambda.resize(dim);
    sd.y.resize(dim);
    for (long i = -D; i <= D - 1; ++i)
        sd.lambda[i + D] = i >= 0 ? tau * ExactScalar::q_pow(i) : tau.inv() * ExactScalar::q_pow(i);
    sd.y[0 + D] = sd.idempotents[0] * xhat;
    sd.y[-D + D] = sd.idempotents[D] * xhat;
    const ExactScalar one = kOne;
    for (long i = 1; i <= D - 1; ++i) {
        ExactScalar den = (ExactScalar::q_pow(D) - one) *
                          (ExactScalar::q_pow(N - 2 * i + 1) - one);
        ExactScalar c1 = (ExactScalar::q_pow(D - i) - one) *
                         (ExactScalar::q_pow(N - i + 1) - one) / den;
        ExactScalar c2 = ExactScalar::q_pow(D + 1 - i) * (ExactScalar::q_pow(1) - one) / den;
        sd.y[i + D] = (sd.idempotents[i] * xhat).scaled(c1) +
                      (sd.idempotents[i] * up0).scaled(c2);
        ExactScalar c1m = ExactScalar::q_pow(D - i) * (ExactScalar::q_pow(i) - one) *
                          (ExactScalar::q_pow(N - D - i + 1) - one) / den;
        ExactScalar c2m = ExactScalar::q_pow(D - i + 1) * (ExactScalar::q_pow(1) - one) / den;
        sd.y[-i + D] = (sd.idempotents[i] * xhat).scaled(c1m) -
                       (sd.idempotents[i] * up0).scaled(c2m);
    }
    Mat ysum = Mat(dim, 1);
    for (long i = -D; i <= D - 1; ++i) {
        if (!(sd.X * sd.y_at(i) - sd.y_at(i).scaled(sd.lambda_at(i))).is_zero())
            throw Error("y_" + std::to_string(i) + " is not an eigenvector of X");
        ysum = ysum + sd.y_at(i);
    }
    if (!(ysum == xhat)) throw Error("eigenvectors do not sum to the base vertex vector");
    for (long i = 1; i <= D - 1; ++i)
        if (!(sd.y_at(i) + sd.y_at(-i) == sd.idempotents[i] * xhat))
            throw Error("y_i + y_{-i} != E_i x-hat at i = " + std::to_string(i));

    // norms with the cell-size weights
    const std::vector<ExactScalar> w = gs.cell_weights();
    sd.omega.resize(dim);
    for (long i = -D; i <= D - 1; ++i) {
        sd.omega[i + D] = dot_weighted(sd.y_at(i), sd.y_at(i), w);
        if (sd.omega[i + D].is_zero()) throw Error("vanishing norm at index " + std::to_string(i));
    }
    for (long i = 1; i <= D - 1; ++i) {
        sd.omega_vee.push_back(dot_weighted(sd.y_at(i), sd.y_at(-i), w));
        if (sd.omega_vee.back().is_zero())
            throw Error("vanishing pairing at index " + std::to_string(i));
    }
    return sd;
}

CheckList verify_t_action(long N, long D) {
    CheckList cl;
    HvGenerators g = build_generators(N, D);
    SpectralData sd = build_spectral(g);
    ModuleMatrices mm = module_matrices(N, D);
    FourSystems fs = four_systems(N, D);
    const Mat I = Mat::identity(g.dim());
    const ExactScalar tau = grassmann_scalars(N, D).tau;
    cl.add_zero("adjacency = tau b (X + X^-1) + a",
                mm.adjacency - sd.A.scaled(tau * fs.phi.b) - I.scaled(fs.phi.a));
    cl.add_zero("dual adjacency = b* A* + a*",
                mm.dual_adjacency - sd.A_star.scaled(fs.phi.b_star) - I.scaled(fs.phi.a_star));
    cl.add_zero("clique dual adjacency = b~* A~* + a~*",
                mm.clique_dual_adjacency - sd.A_tilde_star.scaled(fs.phi_tilde.b_star) -
                    I.scaled(fs.phi_tilde.a_star));
    return cl;
}

CheckList verify_projections(long N, long D) {
    CheckList cl;
    HvGenerators g = build_generators(N, D);
    ProjectionPair pp = projections(N, D);
    const Mat I = Mat::identity(g.dim());
    const ExactScalar kp = g.k_prime, kk = g.k;
    Mat from_tp = (g.T_prime + I.scaled(kp.inv())).scaled((kp + kp.inv()).inv());
    Mat from_t = (g.T + I.scaled(kk.inv())).scaled((kk + kk.inv()).inv());
    cl.add_zero("projection onto M x-hat from T'", pp.onto_mx - from_tp);
    cl.add_zero("projection onto M C-hat from T", pp.onto_mc - from_t);
    cl.add_zero("idempotency of the T'-projection", from_tp * from_tp - from_tp);
    cl.add_zero("idempotency of the T-projection", from_t * from_t - from_t);
    return cl;
}

namespace {

// stated block forms in the dual basis
Mat stated_pi_dual(long D) {
    const int dim = static_cast<int>(2 * D);
    Mat m(dim, dim);
    m.at(0, 0) = kOne;
    m.at(dim - 1, dim - 1) = kOne;
    for (long i = 1; i <= D - 1; ++i) m.at(2 * i - 1, 2 * i - 1) = kOne;
    return m;
}

Mat stated_pi_tilde_dual(long N, long D) {
    const int dim = static_cast<int>(2 * D);
    Mat m(dim, dim);
    auto qp = [](long e) { return ExactScalar::q_pow(e); };
    const ExactScalar one = kOne;
    m.at(0, 0) = one;
    const ExactScalar dd = (qp(D) - one) * (qp(N - D + 1) - one);
    for (long i = 1; i <= D - 1; ++i) {
        int o = static_cast<int>(2 * i - 1);
        m.at(o, o) = qp(i) * (qp(D - i) - one) * (qp(N - D - i + 1) - one) / dd;
        m.at(o, o + 1) = qp(i - 1) * (qp(i) - one) * (qp(D - i) - one) * (qp(N - i + 1) - one) *
                         (qp(N - D - i + 1) - one) / ((qp(1) - one) * dd);
        m.at(o + 1, o) = qp(1) * (qp(1) - one) / dd;
        m.at(o + 1, o + 1) = (qp(i) - one) * (qp(N - i + 1) - one) / dd;
    }
    return m;
}

Mat stated_t_dual(long N, long D, const ExactScalar& k) {
    const int dim = static_cast<int>(2 * D);
    Mat m(dim, dim);
    auto qp = [](long e) { return ExactScalar::q_pow(e); };
    const ExactScalar one = kOne;
    m.at(0, 0) = k;
    m.at(dim - 1, dim - 1) = -k.inv();
    const ExactScalar dd = qp(D) - one;
    for (long i = 1; i <= D - 1; ++i) {
        int o = static_cast<int>(2 * i - 1);
        m.at(o, o) = k * (qp(N + 1) + qp(D) - qp(i) - qp(N - i + 1)) / dd;
        m.at(o, o + 1) = -k * qp(i - 1) * (qp(i) - one) * (qp(D - i) - one) *
                         (qp(N - i + 1) - one) * (qp(N - D - i + 1) - one) /
                         ((qp(1) - one) * dd);
        m.at(o + 1, o) = -k * qp(1) * (qp(1) - one) / dd;
        m.at(o + 1, o + 1) = k * (qp(N - i + 1) + qp(i) - qp(N - D + 1) - one) / dd;
    }
    return m;
}

Mat stated_t_prime_dual(long D, const ExactScalar& kp) {
    const int dim = static_cast<int>(2 * D);
    Mat m(dim, dim);
    m.at(0, 0) = kp;
    m.at(dim - 1, dim - 1) = kp;
    for (long i = 1; i <= D - 1; ++i) {
        int o = static_cast<int>(2 * i - 1);
        m.at(o, o) = kp;
        m.at(o + 1, o + 1) = -kp.inv();
    }
    return m;
}

Mat stated_x_dual(long N, long D, const ExactScalar& tau) {
    const int dim = static_cast<int>(2 * D);
    Mat m(dim, dim);
    auto qp = [](long e) { return ExactScalar::q_pow(e); };
    const ExactScalar one = kOne;
    m.at(0, 0) = tau;
    m.at(dim - 1, dim - 1) = tau.inv() * qp(-D);
    const ExactScalar dd = qp(D) - one;
    for (long i = 1; i <= D - 1; ++i) {
        int o = static_cast<int>(2 * i - 1);
        m.at(o, o) = tau * (qp(N + 1) - qp(i) + qp(D) - qp(N + 1 - i)) / dd;
        m.at(o, o + 1) = tau * (qp(i) - one) * (qp(D - i) - one) * (qp(N - i + 1) - one) *
                         (qp(i - 1) - qp(N - D)) / ((qp(1) - one) * dd);
        m.at(o + 1, o) = tau * qp(D + 1) * (one - qp(1)) / dd;
        m.at(o + 1, o + 1) = tau * (qp(N + D + 1 - i) + qp(D + i) - qp(N + 1) - qp(D)) / dd;
    }
    return m;
}

} // namespace

CheckList verify_dual_basis_matrices(long N, long D) {
    CheckList cl;
    HvGenerators g = build_generators(N, D);
    SpectralData sd = build_spectral(g);
    ProjectionPair pp = projections(N, D);
    const Mat& P = sd.basis_change;
    cl.add("dual basis is a basis", P.rank() == g.dim());
    const ExactScalar tau = grassmann_scalars(N, D).tau;
    // M P = P M_stated avoids explicit inversion
    cl.add_zero("projection onto M x-hat in the dual basis",
                pp.onto_mx * P - P * stated_pi_dual(D));
    cl.add_zero("projection onto M C-hat in the dual basis",
                pp.onto_mc * P - P * stated_pi_tilde_dual(N, D));
    cl.add_zero("T in the dual basis", g.T * P - P * stated_t_dual(N, D, g.k));
    cl.add_zero("T' in the dual basis", g.T_prime * P - P * stated_t_prime_dual(D, g.k_prime));
    cl.add_zero("X in the dual basis", sd.X * P - P * stated_x_dual(N, D, tau));
    return cl;
}

CheckList verify_nildaha(const HvGenerators& g) {
    CheckList cl;
    const Mat I = Mat::identity(g.dim());
    const ExactScalar s = ExactScalar::s_pow(1);
    Mat X = g.T_prime * g.T;
    Mat Xi = X.inverse();
    cl.add_zero("T' = X T^-1", g.T_prime - X * g.T.inverse());
    cl.add_zero("U' = q^(-1/2) X^-1 (U + u^-1)",
                g.U_prime - (Xi * (g.U + I.scaled(g.u.inv()))).scaled(s.inv()));
    cl.add_zero("q^(1/2) U X = U' + 1", (g.U * X).scaled(s) - g.U_prime - I);
    cl.add_zero("quadratic relation for U", g.U * (g.U + I.scaled(g.u.inv())));
    return cl;
}

IrreducibilityProbe word_span_probe(const std::vector<Mat>& gens, int n, int max_word_length) {
    const int full = n * n;
    IrreducibilityProbe probe;

    // echelonized span of vectorized matrices
    std::vector<int> pivot_of;                      // pivot index per stored row
    std::vector<std::vector<ExactScalar>> rows;     // normalized reduced rows
    auto vectorize = [&](const Mat& m) {
        std::vector<ExactScalar> v(static_cast<size_t>(full));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) v[static_cast<size_t>(r) * n + c] = m.at(r, c);
        return v;
    };
    auto try_insert = [&](const Mat& m) -> bool {
        std::vector<ExactScalar> v = vectorize(m);
        for (size_t k = 0; k < rows.size(); ++k) {
            ExactScalar f = v[static_cast<size_t>(pivot_of[k])];
            if (f.is_zero()) continue;  // rows are pivot-normalized
            for (int j = 0; j < full; ++j)
                if (!rows[k][static_cast<size_t>(j)].is_zero())
                    v[static_cast<size_t>(j)] -= f * rows[k][static_cast<size_t>(j)];
        }
        int piv = -1;
        for (int j = 0; j < full; ++j)
            if (!v[static_cast<size_t>(j)].is_zero()) {
                piv = j;
                break;
            }
        if (piv < 0) return false;
        ExactScalar inv = v[static_cast<size_t>(piv)].inv();
        for (auto& e : v) e *= inv;
        pivot_of.push_back(piv);
        rows.push_back(std::move(v));
        return true;
    };

    struct Node {
        Mat m;
        int len;
    };
    std::vector<Node> basis_elems;
    const Mat I = Mat::identity(n);
    try_insert(I);
    basis_elems.push_back({I, 0});
    bool hit_bound = false;
    for (size_t head = 0; head < basis_elems.size(); ++head) {
        if (static_cast<int>(rows.size()) == full) break;
        if (basis_elems[head].len >= max_word_length) {
            hit_bound = true;
            continue;
        }
        for (const Mat& gen : gens) {
            Mat prod = gen * basis_elems[head].m;
            if (try_insert(prod)) basis_elems.push_back({std::move(prod), basis_elems[head].len + 1});
            if (static_cast<int>(rows.size()) == full) break;
        }
    }
    probe.span_dimension = static_cast<int>(rows.size());
    probe.irreducible = probe.span_dimension == full;
    probe.conclusive = probe.irreducible || !hit_bound;
    return probe;
}

IrreducibilityProbe irreducibility_probe(const HvGenerators& g, int max_word_length) {
    if (max_word_length < 0) max_word_length = static_cast<int>(4 * g.D);
    return word_span_probe({g.T, g.T_prime, g.U, g.U_prime}, g.dim(), max_word_length);
}

} // namespace ghv
