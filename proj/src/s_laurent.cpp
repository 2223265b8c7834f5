#include "ghv/s_laurent.hpp"

#include "ghv/errors.hpp"

namespace ghv {

SLaurent SLaurent::monomial(long exp, GaussianRational coeff) {
    SLaurent r;
    if (!coeff.is_zero()) r.c_.emplace(exp, std::move(coeff));
    return r;
}

bool SLaurent::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one();
}

long SLaurent::min_exp() const {
    if (c_.empty()) throw PreconditionError("min_exp of zero polynomial");
    return c_.begin()->first;
}

long SLaurent::max_exp() const {
    if (c_.empty()) throw PreconditionError("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

GaussianRational SLaurent::coeff(long exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? GaussianRational() : it->second;
}

void SLaurent::set_coeff(long exp, const GaussianRational& v) {
    if (v.is_zero())
        c_.erase(exp);
    else
        c_[exp] = v;
}

SLaurent SLaurent::operator-() const {
    SLaurent r;
    for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
    return r;
}

SLaurent& SLaurent::operator+=(const SLaurent& o) {
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

SLaurent& SLaurent::operator-=(const SLaurent& o) {
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

SLaurent operator*(const SLaurent& a, const SLaurent& b) {
    SLaurent r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) {
            long e = ea + eb;
            auto it = r.c_.find(e);
            if (it == r.c_.end()) {
                GaussianRational v = va * vb;
                if (!v.is_zero()) r.c_.emplace(e, std::move(v));
            } else {
                it->second += va * vb;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    return r;
}

SLaurent SLaurent::scaled(const GaussianRational& v) const {
    SLaurent r;
    if (v.is_zero()) return r;
    for (const auto& [e, c] : c_) r.c_.emplace(e, c * v);
    return r;
}

SLaurent SLaurent::shifted(long k) const {
    SLaurent r;
    for (const auto& [e, c] : c_) r.c_.emplace(e + k, c);
    return r;
}

SLaurent SLaurent::conj() const {
    SLaurent r;
    for (const auto& [e, c] : c_) r.c_.emplace(e, c.conj());
    return r;
}

bool SLaurent::all_exponents_even() const {
    for (const auto& [e, c] : c_)
        if (e % 2 != 0) return false;
    return true;
}

GaussianRational SLaurent::subs_q(const mpq_class& qval) const {
    GaussianRational acc;
    for (const auto& [e, c] : c_) {
        if (e % 2 != 0) throw PreconditionError("odd power of s: not a rational function of q");
        long h = e / 2;
        mpq_class p(1);
        for (long j = 0; j < (h >= 0 ? h : -h); ++j) p *= qval;
        if (h < 0) {
            if (qval == 0) throw DivisionByZero("q = 0 with negative exponent");
            p = mpq_class(1) / p;
        }
        acc += c * GaussianRational(p);
    }
    return acc;
}

std::pair<GaussianRational, GaussianRational> SLaurent::eval_sqrt_split(
    const mpq_class& qval) const {
    auto q_pow_exact = [&](long h) {
        mpq_class p(1);
        for (long j = 0; j < (h >= 0 ? h : -h); ++j) p *= qval;
        if (h < 0) {
            if (qval == 0) throw DivisionByZero("q = 0 with negative exponent");
            p = mpq_class(1) / p;
        }
        return p;
    };
    GaussianRational even, odd;
    for (const auto& [e, c] : c_) {
        if (e % 2 == 0) {
            even += c * GaussianRational(q_pow_exact(e / 2));
        } else {
            // e odd => e-1 even, so (e-1)/2 is exact for negative e too
            odd += c * GaussianRational(q_pow_exact((e - 1) / 2));
        }
    }
    return {even, odd};
}

std::pair<SLaurent, SLaurent> SLaurent::divmod(const SLaurent& a, const SLaurent& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if ((!a.is_zero() && a.min_exp() < 0) || b.min_exp() < 0)
        throw PreconditionError("divmod requires ordinary polynomials");
    SLaurent rem = a, quo;
    if (a.is_zero()) return {quo, rem};
    long db = b.max_exp();
    const GaussianRational lead_b = b.coeff(db);
    while (!rem.is_zero() && rem.max_exp() >= db) {
        long e = rem.max_exp() - db;
        GaussianRational f = rem.coeff(rem.max_exp()) / lead_b;
        quo.set_coeff(e, quo.coeff(e) + f);
        rem -= b.shifted(e).scaled(f);
    }
    return {quo, rem};
}

SLaurent SLaurent::gcd(const SLaurent& a, const SLaurent& b) {
    auto poly_part = [](const SLaurent& x) { return x.is_zero() ? x : x.shifted(-x.min_exp()); };
    auto make_monic = [](SLaurent x) {
        if (x.is_zero()) return x;
        return x.scaled(GaussianRational(1) / x.coeff(x.max_exp()));
    };
    SLaurent u = poly_part(a), v = poly_part(b);
    while (!v.is_zero()) {
        SLaurent r = divmod(u, v).second;
        u = std::move(v);
        v = make_monic(std::move(r));
    }
    return make_monic(std::move(u));
}

} // namespace ghv
