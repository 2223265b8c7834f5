#pragma once

#include <vector>

#include "ghv/hv.hpp"
#include "ghv/leonard.hpp"
#include "ghv/zeta_laurent.hpp"

namespace ghv {

/// The monic auxiliary Laurent polynomials and the minimal polynomial of X.
struct Auxiliaries {
    ZetaLaurent p_perp;        // zeta^{-1}(zeta - tau)(zeta - tau^{-1} q^{-D})
    ZetaLaurent p_tilde;       // zeta^{-1}(zeta - tau^{-1} q^{-D})
    ZetaLaurent p_tilde_perp;  // zeta^{-1}(zeta - tau)
    ZetaLaurent h_perp_top;    // degree-(D-1) symmetric annihilator of the inner eigenspaces
    ZetaLaurent mu;            // ordinary polynomial of degree 2D
};

Auxiliaries build_auxiliaries(long N, long D);

/// The nonsymmetric polynomial family: the 2D basis elements of the span
/// of zeta^{-D}..zeta^{D-1} plus the two boundary elements of index D.
struct NonSymFamily {
    long N = 0, D = 0;
    std::vector<ZetaLaurent> minus, plus;  // index 0..D-1
    ZetaLaurent minus_top, plus_top;       // index D

    const ZetaLaurent& at(int sign, long i) const {
        if (i == D) return sign == 0 ? minus_top : plus_top;
        return sign == 0 ? minus[static_cast<size_t>(i)] : plus[static_cast<size_t>(i)];
    }
};

/// Builds the family twice (vertex-side h/h_perp route and clique-side
/// tilde route) and requires the two to coincide as Laurent identities.
NonSymFamily build_family(long N, long D);

/// One stated expansion term: coefficient on the (sign, index) element.
struct TermCoeff {
    int sign;    // 0 = minus, 1 = plus
    long index;  // may be -1 (dropped: the element is zero) or D (boundary)
    ExactScalar coeff;
};

/// The stated coefficient tables for multiplication by zeta^{+-1}; also the
/// action of X^{+-1} on the cell basis under the module realization.
std::vector<TermCoeff> stated_action_terms(long N, long D, bool inverse, int sigma, long i);

/// ell_i^sigma(X).x-hat = C_i^sigma for every cell; the top annihilators.
CheckList verify_module_realization(long N, long D);

/// Expand zeta^{+-1} ell_i^sigma in the family basis by exact linear solve
/// and compare against the stated tables (boundary congruences included).
CheckList verify_recurrence_tables(long N, long D);

/// Discrete Hermitian form on the Laurent span.
struct HermitianFormL {
    long D = 0;
    std::vector<ExactScalar> lambda;     // nodes, index i + D for -D <= i <= D-1
    std::vector<ExactScalar> omega;      // same indexing
    std::vector<ExactScalar> omega_vee;  // index i-1 for 1 <= i <= D-1

    ExactScalar eval(const ZetaLaurent& f, const ZetaLaurent& g) const;
};

/// Weights from the closed norm formulas, cross-checked against the
/// eigenvector inner products with cell-size weights (throws on mismatch).
HermitianFormL build_form(long N, long D);

/// Full Gram matrix of the family against the cell sizes, plus the
/// quadrature identity on seeded random pairs.
CheckList verify_orthogonality(long N, long D, unsigned seed = 12345, int random_pairs = 200);

/// The minimal polynomial annihilates X and no proper divisor does.
CheckList verify_minimal_polynomial(long N, long D);

} // namespace ghv
