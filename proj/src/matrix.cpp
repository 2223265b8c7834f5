#include "ghv/matrix.hpp"

#include "ghv/errors.hpp"

namespace ghv {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ExactScalar::one();
    return m;
}

Mat Mat::operator-() const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw PreconditionError("matrix shape mismatch");
    Mat r(x.rows_, x.cols_);
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
}

Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw PreconditionError("matrix shape mismatch");
    Mat r(x.rows_, x.cols_);
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
}

Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw PreconditionError("matrix shape mismatch");
    Mat r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            const ExactScalar& v = x.at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < y.cols_; ++j) {
                if (y.at(k, j).is_zero()) continue;
                r.at(i, j) += v * y.at(k, j);
            }
        }
    return r;
}

Mat Mat::scaled(const ExactScalar& v) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * v;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::conj() const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].conj();
    return r;
}

bool Mat::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

ExactScalar Mat::trace() const {
    ExactScalar t;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

namespace {

// Row echelon in place; returns (rank, det of the square part up to sign bookkeeping).
struct EchelonResult {
    int rank;
    ExactScalar det;
};

EchelonResult echelon(Mat& m) {
    int rows = m.rows(), cols = m.cols();
    ExactScalar det = ExactScalar::one();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) {
            det = ExactScalar::zero();
            continue;
        }
        if (piv != r) {
            for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
            det = -det;
        }
        det *= m.at(r, c);
        ExactScalar inv = m.at(r, c).inv();
        for (int j = c; j < cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            ExactScalar f = m.at(i, c);
            for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return {r, det};
}

} // namespace

Mat Mat::inverse() const {
    if (rows_ != cols_) throw PreconditionError("inverse of non-square matrix");
    Mat aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = ExactScalar::one();
    }
    EchelonResult e = echelon(aug);
    if (e.rank < rows_) throw PreconditionError("singular matrix");
    Mat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
    return r;
}

int Mat::rank() const {
    Mat m = *this;
    return echelon(m).rank;
}

ExactScalar Mat::det() const {
    if (rows_ != cols_) throw PreconditionError("det of non-square matrix");
    Mat m = *this;
    return echelon(m).det;
}

Mat Mat::solve(const Mat& b) const {
    if (rows_ != cols_ || b.rows_ != rows_) throw PreconditionError("solve shape mismatch");
    Mat aug(rows_, cols_ + b.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        for (int j = 0; j < b.cols_; ++j) aug.at(i, cols_ + j) = b.at(i, j);
    }
    EchelonResult e = echelon(aug);
    if (e.rank < rows_) throw PreconditionError("singular system");
    Mat r(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
    return r;
}

Mat Mat::column(int c) const {
    Mat r(rows_, 1);
    for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
    return r;
}

void Mat::set_column(int c, const Mat& col) {
    for (int i = 0; i < rows_; ++i) at(i, c) = col.at(i, 0);
}

Mat unit_column(int n, int idx) {
    Mat r(n, 1);
    r.at(idx, 0) = ExactScalar::one();
    return r;
}

ExactScalar dot_weighted(const Mat& u, const Mat& v, const std::vector<ExactScalar>& weights) {
    if (u.rows() != v.rows() || static_cast<size_t>(u.rows()) != weights.size())
        throw PreconditionError("weighted dot shape mismatch");
    ExactScalar acc;
    for (int i = 0; i < u.rows(); ++i) acc += u.at(i, 0) * v.at(i, 0).conj() * weights[i];
    return acc;
}

} // namespace ghv
