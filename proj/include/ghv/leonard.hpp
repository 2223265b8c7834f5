#pragma once

#include <string>
#include <vector>

#include "ghv/grassmann_scalars.hpp"
#include "ghv/matrix.hpp"
#include "ghv/zeta_laurent.hpp"

namespace ghv {

/// Dense polynomial in the symmetric variable lambda = zeta + zeta^{-1}
/// scaled form; coefficient of lambda^j at index j.
using LambdaPoly = std::vector<ExactScalar>;

ExactScalar eval_lambda_poly(const LambdaPoly& p, const ExactScalar& x);
Mat eval_lambda_poly(const LambdaPoly& p, const Mat& x);

/// Parameter sequence (a, a*, b, b*, c, r; q, d) of a Leonard system of
/// dual q-Hahn type, plus the fixed square root t of b^{-1} c.
struct ParameterSequence {
    ExactScalar a, a_star, b, b_star, c, r;
    long d = 0;
    ExactScalar t;

    /// Nondegeneracy of the family; throws naming the failed condition.
    void validate() const;
};

/// Everything derived from a parameter sequence.
struct LeonardData {
    std::vector<ExactScalar> theta, theta_star;  // eigenvalues, 0..d
    std::vector<ExactScalar> phi, phi_down;      // split sequences, index j holds varphi_{j+1}
    std::vector<ExactScalar> b, c, a;            // intersection numbers, 0..d
    std::vector<ExactScalar> k;                  // k_i = b_0..b_{i-1}/c_1..c_i
    std::vector<ExactScalar> m;                  // trace(E_i E*_0)
};

/// Derives LeonardData; the closed-form intersection numbers and the
/// split-sequence quotient route are both computed and must agree.
LeonardData derive(const ParameterSequence& ps);

/// The polynomial ladder of a system: v_i from the three-term recurrence,
/// f_i = v_i/k_i independently from the closed double sum (must agree),
/// and the monic symmetric Laurent renormalization h_i.
struct PolyFamily {
    std::vector<LambdaPoly> v;
    std::vector<LambdaPoly> f;
    std::vector<ZetaLaurent> h;
};

PolyFamily polynomials(const ParameterSequence& ps, const LeonardData& ld);

/// Substitute lambda = a + b t zeta^{-1} + c t^{-1} zeta.
ZetaLaurent substitute_zeta(const LambdaPoly& p, const ParameterSequence& ps);

/// The four dual q-Hahn systems carried by the module W.
struct FourSystems {
    ParameterSequence phi;             // diameter D
    ParameterSequence phi_perp;        // diameter D-2
    ParameterSequence phi_tilde;       // diameter D-1
    ParameterSequence phi_tilde_perp;  // diameter D-1
};

FourSystems four_systems(long N, long D);

struct DualityReport {
    bool pass = true;
    std::string witness;  // first mismatching (i, j) if any
};

/// f_i(theta_j) by polynomial evaluation against the terminating 3phi2
/// with argument row (q^{-i}, q^{-j}, t^2 q^j; rq, q^{-d} | q; q).
DualityReport duality_check(const ParameterSequence& ps, const LeonardData& ld,
                            const PolyFamily& pf);

/// The 2D x 2D matrices of A, A*, tilde-A* on W in the ordered cell basis
/// (entry (row k, col j) = coefficient of basis k in the image of basis j).
struct ModuleMatrices {
    Mat adjacency;
    Mat dual_adjacency;
    Mat clique_dual_adjacency;
};

ModuleMatrices module_matrices(long N, long D);

/// Independent route to the adjacency action via the plain and clique
/// intersection numbers (the five-term expansions).
Mat module_matrix_adjacency_generic(long N, long D);

struct ProjectionPair {
    Mat onto_mx;      // orthogonal projection onto M x-hat
    Mat onto_mc;      // orthogonal projection onto M C-hat
};

ProjectionPair projections(long N, long D);

/// Standard-basis vectors in cell coordinates.
Mat basis_vector_Aix(long D, long i);            // C+_{i-1} + C-_i, 0 <= i <= D
Mat basis_vector_u_perp(long D, long i);         // 0 <= i <= D-2
Mat basis_vector_Ci(long D, long i);             // C-_i + C+_i, 0 <= i <= D-1
Mat basis_vector_u_tilde_perp(long N, long D, long i);  // 0 <= i <= D-1

} // namespace ghv
