#pragma once

#include <string>
#include <vector>

#include "ghv/finite_field.hpp"

namespace ghv {

/// Subspace of F_q^N held as its canonical reduced-row-echelon basis, so
/// two Subspaces are equal iff their byte content is equal.
struct Subspace {
    int n_cols = 0;
    std::vector<std::uint8_t> rows;  // k x n_cols, row-major
    std::vector<int> pivots;

    int dim() const { return static_cast<int>(pivots.size()); }
    const std::uint8_t* row(int r) const { return rows.data() + static_cast<size_t>(r) * n_cols; }
    std::string key() const { return std::string(rows.begin(), rows.end()); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_cols == b.n_cols && a.rows == b.rows;
    }
};

/// Canonical RREF of the span of the given rows (zero rows dropped).
Subspace rref_subspace(const FiniteField& ff, int n_cols, const std::uint8_t* rows, int n_rows);

/// Rank of the stacked bases, i.e. dim(a + b).
int stacked_rank(const FiniteField& ff, const Subspace& a, const Subspace& b);

/// true if v (length n_cols) lies in the row space of s.
bool contains_vector(const FiniteField& ff, const Subspace& s, const std::uint8_t* v);

/// true if every row of inner lies in outer.
bool contains_subspace(const FiniteField& ff, const Subspace& outer, const Subspace& inner);

} // namespace ghv
