#pragma once

#include <string>
#include <vector>

#include "ghv/leonard.hpp"
#include "ghv/matrix.hpp"

namespace ghv {

/// One verified identity: name plus a pass flag and, on failure, a witness
/// rendering of the offending entry.
struct CheckItem {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct CheckList {
    std::vector<CheckItem> items;
    bool all_pass() const {
        for (const auto& c : items)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string witness = "") {
        items.push_back({std::move(name), pass, std::move(witness)});
    }
    void add_zero(const std::string& name, const Mat& residual);
};

/// Generators of the confluent Cherednik algebra action on W in the ordered
/// cell basis, with the scalar triple (k, k', u).
struct HvGenerators {
    long N = 0, D = 0;
    ExactScalar k, k_prime, u;
    Mat T, T_prime, U, U_prime;

    int dim() const { return static_cast<int>(2 * D); }
};

HvGenerators build_generators(long N, long D);

/// The six defining relations, as identically-zero residual matrices.
CheckList verify_hv_relations(const HvGenerators& g);

/// X = T'T and the derived operators, spectral decomposition of X, and the
/// dual orthogonal basis of W assembled from the primitive idempotents of
/// the adjacency action.
struct SpectralData {
    Mat X, X_inv;
    Mat A;          // X + X^{-1}
    Mat A_star;     // q k (q^{-1/2} U T' + T U')
    Mat A_tilde_star;
    std::vector<Mat> idempotents;   // E_0..E_D of the adjacency action on W
    Mat basis_change;               // columns: dual basis in cell coordinates
    std::vector<ExactScalar> lambda;  // eigenvalues of X, index i + D for -D <= i <= D-1
    std::vector<Mat> y;               // eigenvectors, same indexing
    std::vector<ExactScalar> omega;         // |y_i|^2, same indexing
    std::vector<ExactScalar> omega_vee;     // <y_i, y_-i>, index i-1 for 1 <= i <= D-1

    const ExactScalar& lambda_at(long i) const { return lambda[static_cast<size_t>(i + Dv)]; }
    const Mat& y_at(long i) const { return y[static_cast<size_t>(i + Dv)]; }
    const ExactScalar& omega_at(long i) const { return omega[static_cast<size_t>(i + Dv)]; }
    long Dv = 0;
};

SpectralData build_spectral(const HvGenerators& g);

/// The adjacency-side operators match the Hecke-side ones:
/// A = tau b (X + X^{-1}) + a, A* = b* A*_H + a*, tilde versions likewise.
CheckList verify_t_action(long N, long D);

/// Projection identities pi = (T'+k'^{-1})/(k'+k'^{-1}), and the tilde
/// counterpart, plus idempotency.
CheckList verify_projections(long N, long D);

/// Entry-by-entry forms of T, T', X, pi, tilde-pi in the dual basis.
CheckList verify_dual_basis_matrices(long N, long D);

/// Consistency of the nil presentation: T' = X T^{-1},
/// U' = q^{-1/2} X^{-1} (U + u^{-1}), q^{1/2} U X = U' + 1.
CheckList verify_nildaha(const HvGenerators& g);

/// Dimension of the span of words in {T, T', U, U', I} up to the given
/// length cap (default 4D); irreducible iff it reaches (2D)^2.
struct IrreducibilityProbe {
    bool irreducible = false;
    bool conclusive = false;   // false = bound hit before closure
    int span_dimension = 0;
};

IrreducibilityProbe irreducibility_probe(const HvGenerators& g, int max_word_length = -1);

/// Span dimension of words (length <= cap, including the empty word) in an
/// arbitrary generator set of n x n matrices.
IrreducibilityProbe word_span_probe(const std::vector<Mat>& gens, int n, int max_word_length);

} // namespace ghv
