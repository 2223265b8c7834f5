#pragma once

#include <map>

#include "ghv/exact_scalar.hpp"
#include "ghv/matrix.hpp"

namespace ghv {

/// Laurent polynomial in zeta over Q(i)(s); no zero coefficients stored.
class ZetaLaurent {
public:
    ZetaLaurent() = default;

    static ZetaLaurent zero() { return {}; }
    static ZetaLaurent one() { return monomial(0, ExactScalar::one()); }
    static ZetaLaurent zeta(int e = 1) { return monomial(e, ExactScalar::one()); }
    static ZetaLaurent monomial(int exp, ExactScalar coeff);
    static ZetaLaurent constant(const ExactScalar& c) { return monomial(0, c); }

    bool is_zero() const { return c_.empty(); }
    int lowest_degree() const;
    int highest_degree() const;
    ExactScalar coeff(int exp) const;
    void set_coeff(int exp, const ExactScalar& v);
    const std::map<int, ExactScalar>& terms() const { return c_; }

    ZetaLaurent operator-() const;
    ZetaLaurent& operator+=(const ZetaLaurent& o);
    ZetaLaurent& operator-=(const ZetaLaurent& o);
    friend ZetaLaurent operator+(ZetaLaurent a, const ZetaLaurent& b) { return a += b; }
    friend ZetaLaurent operator-(ZetaLaurent a, const ZetaLaurent& b) { return a -= b; }
    friend ZetaLaurent operator*(const ZetaLaurent& a, const ZetaLaurent& b);
    ZetaLaurent scaled(const ExactScalar& v) const;
    /// Multiply by zeta^k.
    ZetaLaurent shifted(int k) const;
    /// zeta -> zeta^{-1}.
    ZetaLaurent reversed() const;
    bool is_symmetric() const { return *this == reversed(); }

    friend bool operator==(const ZetaLaurent& a, const ZetaLaurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ZetaLaurent& a, const ZetaLaurent& b) { return !(a == b); }

    ExactScalar eval(const ExactScalar& zeta_value) const;
    /// Evaluate at an invertible matrix argument, with its inverse supplied.
    Mat eval_matrix(const Mat& x, const Mat& x_inv) const;

private:
    std::map<int, ExactScalar> c_;
};

} // namespace ghv
