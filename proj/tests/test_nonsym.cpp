#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghv/nonsym.hpp"
#include "ghv/qseries.hpp"

using namespace ghv;

namespace {
ExactScalar one() { return ExactScalar::one(); }
ExactScalar qp(long e) { return ExactScalar::q_pow(e); }

void check_all(const CheckList& cl) {
    for (const auto& item : cl.items) CHECK_MESSAGE(item.pass, item.name, ": ", item.witness);
}
} // namespace

TEST_CASE("auxiliary polynomials") {
    for (auto [N, D] : {std::pair<long, long>{6, 3}, {8, 4}}) {
        Auxiliaries aux = build_auxiliaries(N, D);
        const ExactScalar tau = -ExactScalar::s_pow(-(N + 1));
        // p~ p~perp = zeta^{-1} p_perp
        CHECK(aux.p_tilde * aux.p_tilde_perp == aux.p_perp.shifted(-1));
        // the annihilator of the inner eigenspaces is monic symmetric
        CHECK(aux.h_perp_top.is_symmetric());
        CHECK(aux.h_perp_top.highest_degree() == D - 1);
        CHECK(aux.h_perp_top.coeff(static_cast<int>(D - 1)) == one());
        // mu vanishes exactly at the 2D stated eigenvalues, which are distinct
        std::vector<ExactScalar> roots;
        for (long i = 0; i <= D - 1; ++i) roots.push_back(tau * qp(i));
        for (long i = 1; i <= D; ++i) roots.push_back(tau.inv() * qp(-i));
        for (const auto& r : roots) CHECK(aux.mu.eval(r).is_zero());
        for (size_t a = 0; a < roots.size(); ++a)
            for (size_t b = a + 1; b < roots.size(); ++b) CHECK(roots[a] != roots[b]);
        CHECK(aux.mu.highest_degree() == 2 * D);
        CHECK(aux.mu.lowest_degree() == 0);
    }
}

TEST_CASE("family construction and degree pattern") {
    for (auto [N, D] : {std::pair<long, long>{6, 3}, {8, 4}, {10, 5}}) {
        NonSymFamily fam = build_family(N, D);  // throws if the two routes disagree
        CHECK(fam.minus[0] == ZetaLaurent::one());
        CHECK_FALSE(fam.plus[0].coeff(-1).is_zero());
        // the 2D elements expand the monomial basis invertibly
        Mat M(static_cast<int>(2 * D), static_cast<int>(2 * D));
        int col = 0;
        for (long i = 0; i <= D - 1; ++i)
            for (int sg = 0; sg <= 1; ++sg, ++col)
                for (int e = -static_cast<int>(D); e <= static_cast<int>(D) - 1; ++e)
                    M.at(e + static_cast<int>(D), col) = fam.at(sg, i).coeff(e);
        CHECK_FALSE(M.det().is_zero());
    }
    NonSymFamily fam = build_family(6, 3);
    CHECK(fam.plus[2].highest_degree() == 2);
    CHECK(fam.plus[2].lowest_degree() == -3);
    // boundary elements reduce mod the span to the stated leading forms
    const ExactScalar tau = -ExactScalar::s_pow(-7);
    ExactScalar pd = q_pochhammer(qp(1), 3);
    CHECK(fam.minus_top.coeff(3) == (tau.pow(3) * pd * pd).inv());
    CHECK(fam.minus_top.coeff(-3) == qp(-3) / (tau.pow(3) * pd * pd));
    ExactScalar pd1 = q_pochhammer(qp(1), 4);
    CHECK(fam.plus_top.coeff(3) == tau * qp(4) / (tau.pow(4) * pd * pd1));
    CHECK(fam.plus_top.coeff(-4) == -qp(-3) / (tau.pow(4) * pd * pd1));
}

TEST_CASE("module realization") {
    for (auto [N, D] : {std::pair<long, long>{6, 3}, {7, 3}, {8, 4}, {10, 5}})
        check_all(verify_module_realization(N, D));
}

TEST_CASE("stated tables also give the X action on the cell basis") {
    for (auto [N, D] : {std::pair<long, long>{6, 3}, {8, 4}}) {
        HvGenerators g = build_generators(N, D);
        SpectralData sd = build_spectral(g);
        const int dim = g.dim();
        for (int inv = 0; inv <= 1; ++inv) {
            Mat expect(dim, dim);
            for (long i = 0; i <= D - 1; ++i)
                for (int sigma = 0; sigma <= 1; ++sigma) {
                    int col = static_cast<int>(2 * i) + sigma;
                    for (const TermCoeff& tc : stated_action_terms(N, D, inv != 0, sigma, i)) {
                        if (tc.index > D - 1) continue;  // image cell is empty
                        expect.at(static_cast<int>(2 * tc.index) + tc.sign, col) = tc.coeff;
                    }
                }
            CHECK(((inv ? sd.X_inv : sd.X) - expect).is_zero());
        }
    }
}

TEST_CASE("recurrence tables") {
    for (auto [N, D] : {std::pair<long, long>{6, 3}, {8, 4}})
        check_all(verify_recurrence_tables(N, D));
    // boundary coefficients carried by the index-D terms
    long N = 6, D = 3;
    const ExactScalar tau = -ExactScalar::s_pow(-7);
    auto find = [&](bool inv, int sigma, long i, int sign, long index) {
        for (const TermCoeff& tc : stated_action_terms(N, D, inv, sigma, i))
            if (tc.sign == sign && tc.index == index) return tc.coeff;
        return ExactScalar::zero();
    };
    CHECK(find(false, 0, D - 1, 0, D) == tau * (one() - qp(D)) * (one() - qp(D)));
    CHECK(find(false, 1, D - 1, 0, D) == tau * qp(D) * (qp(D) - one()) * (-one()));
    CHECK(find(true, 1, D - 1, 0, D) == tau * qp(D + 1) * (qp(D) - one()));
    CHECK(find(true, 1, D - 1, 1, D) == tau * (qp(D) - one()) * (qp(D + 1) - one()));
}

TEST_CASE("transfer recursion regenerates the family") {
    for (auto [N, D] : {std::pair<long, long>{6, 3}, {8, 4}}) {
        NonSymFamily fam = build_family(N, D);
        auto term_sum = [&](bool inv, int sigma, long i, int skip_sign, long skip_index) {
            ZetaLaurent acc;
            ExactScalar skip_coeff;
            for (const TermCoeff& tc : stated_action_terms(N, D, inv, sigma, i)) {
                if (tc.sign == skip_sign && tc.index == skip_index) {
                    skip_coeff = tc.coeff;
                    continue;
                }
                acc += fam.at(tc.sign, tc.index).scaled(tc.coeff);
            }
            return std::pair{acc, skip_coeff};
        };
        std::vector<ZetaLaurent> re_minus{ZetaLaurent::one()}, re_plus;
        // l+_0 from zeta^{-1} l-_0; then alternately l-_{i+1} and l+_{i+1}
        {
            auto [rest, c] = term_sum(true, 0, 0, 1, 0);
            re_plus.push_back((ZetaLaurent::zeta(-1) - rest).scaled(c.inv()));
        }
        for (long i = 0; i + 1 <= D - 1; ++i) {
            auto [rest, c] = term_sum(false, 0, i, 0, i + 1);
            re_minus.push_back((re_minus[static_cast<size_t>(i)].shifted(1) - rest).scaled(c.inv()));
            auto [restp, cp] = term_sum(true, 1, i, 1, i + 1);
            re_plus.push_back((re_plus[static_cast<size_t>(i)].shifted(-1) - restp).scaled(cp.inv()));
        }
        for (long i = 0; i <= D - 1; ++i) {
            CHECK(re_minus[static_cast<size_t>(i)] == fam.minus[static_cast<size_t>(i)]);
            CHECK(re_plus[static_cast<size_t>(i)] == fam.plus[static_cast<size_t>(i)]);
        }
    }
}

TEST_CASE("weights and orthogonality") {
    for (auto [N, D] : {std::pair<long, long>{6, 3}, {8, 4}}) {
        HermitianFormL form = build_form(N, D);  // throws if the two routes disagree
        for (const auto& w : form.omega) {
            CHECK_FALSE(w.is_zero());
            CHECK(w.conj() == w);
        }
        for (const auto& w : form.omega_vee) {
            CHECK_FALSE(w.is_zero());
            CHECK(w.conj() == w);
        }
        for (const auto& node : form.lambda) CHECK((node * node).is_rational_in_q());
    }
    HermitianFormL form = build_form(6, 3);
    CHECK(form.omega[3].specialize_q(mpq_class(2)) == GaussianRational(mpq_class(1, 1395)));
    CHECK(form.omega[0].specialize_q(mpq_class(2)) == GaussianRational(mpq_class(8, 15)));

    NonSymFamily fam = build_family(6, 3);
    CHECK(form.eval(fam.minus[1], fam.minus[1]).specialize_q(mpq_class(2)) ==
          GaussianRational(84));
    CHECK(form.eval(fam.minus[0], fam.plus[0]).is_zero());
    CHECK(form.eval(fam.minus[0], fam.minus[0]) == one());

    check_all(verify_orthogonality(6, 3, 12345, 200));
}

TEST_CASE("minimal polynomial") {
    for (auto [N, D] : {std::pair<long, long>{6, 3}, {8, 4}})
        check_all(verify_minimal_polynomial(N, D));
}
