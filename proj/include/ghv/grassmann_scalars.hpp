#pragma once

#include <vector>

#include "ghv/exact_scalar.hpp"

namespace ghv {

/// All named scalar families of the Grassmann graph J_q(N,D) and its fixed
/// Delsarte clique, as exact symbolic functions of q (q = s^2 left formal).
///
/// Indexing: a,b,c,theta,theta_star run 0..D; the clique families
/// (a_t, b_t, c_t, theta_t_star, n) run 0..D-1, as do the cell sizes.
struct GrassmannScalars {
    long N = 0, D = 0;
    std::vector<ExactScalar> a, b, c;            // intersection numbers of the graph
    std::vector<ExactScalar> theta;              // eigenvalues
    std::vector<ExactScalar> theta_star;         // dual eigenvalues (vertex)
    std::vector<ExactScalar> a_t, b_t, c_t;      // intersection numbers of the clique
    std::vector<ExactScalar> theta_t_star;       // dual eigenvalues (clique)
    std::vector<ExactScalar> n;                  // |{y in C : d(y,z)=i}| for z in C_i
    std::vector<ExactScalar> cell_minus;         // |C_i^-|
    std::vector<ExactScalar> cell_plus;          // |C_i^+|
    ExactScalar clique_size;                     // |C|
    ExactScalar tau, k, k_prime, u;

    /// Weights of the ordered basis (C0^-, C0^+, ..., C(D-1)^-, C(D-1)^+).
    std::vector<ExactScalar> cell_weights() const;
};

/// Builds every family above. Requires N >= 2D and D >= 3; the error
/// message names the violated inequality.
GrassmannScalars grassmann_scalars(long N, long D);

} // namespace ghv
