#pragma once

#include <vector>

#include "ghv/exact_scalar.hpp"

namespace ghv {

/// Dense matrix over Q(i)(s). Sized for modules of dimension 2D (D <= 8);
/// all arithmetic exact.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    ExactScalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const ExactScalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    Mat operator-() const;
    friend Mat operator+(const Mat& x, const Mat& y);
    friend Mat operator-(const Mat& x, const Mat& y);
    friend Mat operator*(const Mat& x, const Mat& y);
    Mat scaled(const ExactScalar& v) const;
    Mat transpose() const;
    Mat conj() const;

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    bool is_zero() const;
    ExactScalar trace() const;

    /// Gauss-Jordan inverse; throws PreconditionError when singular.
    Mat inverse() const;
    int rank() const;
    ExactScalar det() const;
    /// Solve A x = b (A square nonsingular, b a column block).
    Mat solve(const Mat& b) const;

    Mat column(int c) const;
    void set_column(int c, const Mat& col);

private:
    int rows_, cols_;
    std::vector<ExactScalar> a_;
};

/// Column vector convenience wrappers.
Mat unit_column(int n, int idx);
ExactScalar dot_weighted(const Mat& u, const Mat& v, const std::vector<ExactScalar>& weights);

} // namespace ghv
