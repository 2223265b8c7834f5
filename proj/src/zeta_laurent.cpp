#include "ghv/zeta_laurent.hpp"

#include "ghv/errors.hpp"

namespace ghv {

ZetaLaurent ZetaLaurent::monomial(int exp, ExactScalar coeff) {
    ZetaLaurent r;
    if (!coeff.is_zero()) r.c_.emplace(exp, std::move(coeff));
    return r;
}

int ZetaLaurent::lowest_degree() const {
    if (c_.empty()) throw PreconditionError("degree of zero polynomial");
    return c_.begin()->first;
}

int ZetaLaurent::highest_degree() const {
    if (c_.empty()) throw PreconditionError("degree of zero polynomial");
    return c_.rbegin()->first;
}

ExactScalar ZetaLaurent::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? ExactScalar::zero() : it->second;
}

void ZetaLaurent::set_coeff(int exp, const ExactScalar& v) {
    if (v.is_zero())
        c_.erase(exp);
    else
        c_[exp] = v;
}

ZetaLaurent ZetaLaurent::operator-() const {
    ZetaLaurent r;
    for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
    return r;
}

ZetaLaurent& ZetaLaurent::operator+=(const ZetaLaurent& o) {
    for (const auto& [e, v] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

ZetaLaurent& ZetaLaurent::operator-=(const ZetaLaurent& o) {
    for (const auto& [e, v] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, -v);
        } else {
            it->second -= v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

ZetaLaurent operator*(const ZetaLaurent& a, const ZetaLaurent& b) {
    ZetaLaurent r;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) {
            ExactScalar p = va * vb;
            if (p.is_zero()) continue;
            int e = ea + eb;
            auto it = r.c_.find(e);
            if (it == r.c_.end()) {
                r.c_.emplace(e, std::move(p));
            } else {
                it->second += p;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    return r;
}

ZetaLaurent ZetaLaurent::scaled(const ExactScalar& v) const {
    ZetaLaurent r;
    if (v.is_zero()) return r;
    for (const auto& [e, c] : c_) {
        ExactScalar p = c * v;
        if (!p.is_zero()) r.c_.emplace(e, std::move(p));
    }
    return r;
}

ZetaLaurent ZetaLaurent::shifted(int k) const {
    ZetaLaurent r;
    for (const auto& [e, c] : c_) r.c_.emplace(e + k, c);
    return r;
}

ZetaLaurent ZetaLaurent::reversed() const {
    ZetaLaurent r;
    for (const auto& [e, c] : c_) r.c_.emplace(-e, c);
    return r;
}

ExactScalar ZetaLaurent::eval(const ExactScalar& zeta_value) const {
    ExactScalar acc;
    for (const auto& [e, c] : c_) acc += c * zeta_value.pow(e);
    return acc;
}

Mat ZetaLaurent::eval_matrix(const Mat& x, const Mat& x_inv) const {
    int n = x.rows();
    Mat acc = Mat::zero(n, n);
    if (c_.empty()) return acc;
    // positive powers ascending, negative powers descending, sharing partial products
    Mat pos = Mat::identity(n);
    int cur = 0;
    for (const auto& [e, c] : c_) {
        if (e < 0) continue;
        while (cur < e) {
            pos = pos * x;
            ++cur;
        }
        acc = acc + pos.scaled(c);
    }
    Mat neg = Mat::identity(n);
    cur = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (it->first >= 0) continue;
        while (cur > it->first) {
            neg = neg * x_inv;
            --cur;
        }
        acc = acc + neg.scaled(it->second);
    }
    return acc;
}

} // namespace ghv
