#include "ghv/subspace.hpp"

#include <cstring>

namespace ghv {

namespace {

// in-place row reduction; returns rank, records pivot columns if asked
int reduce(const FiniteField& ff, std::uint8_t* m, int n_rows, int n_cols,
           std::vector<int>* pivots) {
    int r = 0;
    for (int c = 0; c < n_cols && r < n_rows; ++c) {
        int pr = -1;
        for (int i = r; i < n_rows; ++i)
            if (m[static_cast<size_t>(i) * n_cols + c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < n_cols; ++j)
                std::swap(m[static_cast<size_t>(pr) * n_cols + j],
                          m[static_cast<size_t>(r) * n_cols + j]);
        std::uint8_t inv = ff.inv(m[static_cast<size_t>(r) * n_cols + c]);
        for (int j = c; j < n_cols; ++j)
            m[static_cast<size_t>(r) * n_cols + j] =
                ff.mul(m[static_cast<size_t>(r) * n_cols + j], inv);
        for (int i = 0; i < n_rows; ++i) {
            if (i == r) continue;
            std::uint8_t f = m[static_cast<size_t>(i) * n_cols + c];
            if (f == 0) continue;
            for (int j = c; j < n_cols; ++j)
                m[static_cast<size_t>(i) * n_cols + j] =
                    ff.sub(m[static_cast<size_t>(i) * n_cols + j],
                           ff.mul(f, m[static_cast<size_t>(r) * n_cols + j]));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

} // namespace

Subspace rref_subspace(const FiniteField& ff, int n_cols, const std::uint8_t* rows, int n_rows) {
    std::vector<std::uint8_t> work(rows, rows + static_cast<size_t>(n_rows) * n_cols);
    std::vector<int> pivots;
    int rank = reduce(ff, work.data(), n_rows, n_cols, &pivots);
    Subspace s;
    s.n_cols = n_cols;
    s.pivots = std::move(pivots);
    s.rows.assign(work.begin(), work.begin() + static_cast<size_t>(rank) * n_cols);
    return s;
}

int stacked_rank(const FiniteField& ff, const Subspace& a, const Subspace& b) {
    std::vector<std::uint8_t> work;
    work.reserve(a.rows.size() + b.rows.size());
    work.insert(work.end(), a.rows.begin(), a.rows.end());
    work.insert(work.end(), b.rows.begin(), b.rows.end());
    return reduce(ff, work.data(), a.dim() + b.dim(), a.n_cols, nullptr);
}

bool contains_vector(const FiniteField& ff, const Subspace& s, const std::uint8_t* v) {
    // eliminate v against the RREF rows; contained iff it reduces to zero
    std::vector<std::uint8_t> w(v, v + s.n_cols);
    for (int r = 0; r < s.dim(); ++r) {
        std::uint8_t f = w[static_cast<size_t>(s.pivots[static_cast<size_t>(r)])];
        if (f == 0) continue;
        const std::uint8_t* row = s.row(r);
        for (int j = 0; j < s.n_cols; ++j) w[static_cast<size_t>(j)] = ff.sub(w[static_cast<size_t>(j)], ff.mul(f, row[j]));
    }
    for (auto x : w)
        if (x != 0) return false;
    return true;
}

bool contains_subspace(const FiniteField& ff, const Subspace& outer, const Subspace& inner) {
    for (int r = 0; r < inner.dim(); ++r)
        if (!contains_vector(ff, outer, inner.row(r))) return false;
    return true;
}

} // namespace ghv
