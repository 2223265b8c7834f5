#include "ghv/exact_scalar.hpp"

#include <cmath>

#include "ghv/errors.hpp"

namespace ghv {

ExactScalar::ExactScalar(SLaurent num, SLaurent den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void ExactScalar::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = SLaurent::one();
        return;
    }
    // Push the denominator's unit s^k into the numerator.
    long dshift = den_.min_exp();
    if (dshift != 0) {
        den_ = den_.shifted(-dshift);
        num_ = num_.shifted(-dshift);
    }
    long nshift = num_.min_exp();
    SLaurent npoly = nshift != 0 ? num_.shifted(-nshift) : num_;
    SLaurent g = SLaurent::gcd(npoly, den_);
    if (!g.is_one()) {
        npoly = SLaurent::divmod(npoly, g).first;
        den_ = SLaurent::divmod(den_, g).first;
    }
    GaussianRational lead = den_.coeff(den_.max_exp());
    if (!lead.is_one()) {
        GaussianRational inv_lead = GaussianRational(1) / lead;
        den_ = den_.scaled(inv_lead);
        npoly = npoly.scaled(inv_lead);
    }
    num_ = nshift != 0 ? npoly.shifted(nshift) : npoly;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    if (is_zero() || o.is_zero()) {
        *this = zero();
        return *this;
    }
    // Cross-reduce before multiplying to keep intermediates small.
    long nshift = num_.min_exp();
    SLaurent npoly = num_.shifted(-nshift);
    long onshift = o.num_.min_exp();
    SLaurent onpoly = o.num_.shifted(-onshift);
    SLaurent g1 = SLaurent::gcd(npoly, o.den_);
    SLaurent g2 = SLaurent::gcd(onpoly, den_);
    SLaurent oden = o.den_;
    SLaurent den = den_;
    if (!g1.is_one()) {
        npoly = SLaurent::divmod(npoly, g1).first;
        oden = SLaurent::divmod(oden, g1).first;
    }
    if (!g2.is_one()) {
        onpoly = SLaurent::divmod(onpoly, g2).first;
        den = SLaurent::divmod(den, g2).first;
    }
    num_ = (npoly * onpoly).shifted(nshift + onshift);
    den_ = den * oden;
    canonicalize();
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this *= o.inv(); }

ExactScalar ExactScalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    ExactScalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.canonicalize();
    return r;
}

ExactScalar ExactScalar::pow(long e) const {
    if (e == 0) return one();
    ExactScalar base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    ExactScalar acc = one();
    while (n) {
        if (n & 1) acc *= base;
        base = n > 1 ? base * base : base;
        n >>= 1;
    }
    return acc;
}

ExactScalar ExactScalar::conj() const {
    ExactScalar r;
    r.num_ = num_.conj();
    r.den_ = den_.conj();
    r.canonicalize();
    return r;
}

GaussianRational ExactScalar::specialize_q(const mpq_class& qval) const {
    GaussianRational d = den_.subs_q(qval);
    if (d.is_zero()) throw PoleError("denominator vanishes at the given q");
    return num_.subs_q(qval) / d;
}

std::pair<GaussianRational, GaussianRational> ExactScalar::specialize_sqrt(
    const mpq_class& qval) const {
    auto [an, bn] = num_.eval_sqrt_split(qval);
    auto [ad, bd] = den_.eval_sqrt_split(qval);

    // sqrt(q) rational iff numerator and denominator are perfect squares
    bool square = mpz_perfect_square_p(qval.get_num().get_mpz_t()) &&
                  mpz_perfect_square_p(qval.get_den().get_mpz_t());
    if (square) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), qval.get_num().get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), qval.get_den().get_mpz_t());
        GaussianRational root(mpq_class(rn) / mpq_class(rd));
        GaussianRational dv = ad + bd * root;
        if (dv.is_zero()) throw PoleError("denominator vanishes at the given q");
        return {(an + bn * root) / dv, GaussianRational()};
    }
    if (ad.is_zero() && bd.is_zero()) throw PoleError("denominator vanishes at the given q");
    // (an + bn r)/(ad + bd r) with r = sqrt(q): rationalize by (ad - bd r);
    // the rationalized denominator cannot vanish since r is irrational here
    GaussianRational denom = ad * ad - bd * bd * GaussianRational(qval);
    GaussianRational A = (an * ad - bn * bd * GaussianRational(qval)) / denom;
    GaussianRational B = (bn * ad - an * bd) / denom;
    return {A, B};
}

std::complex<double> ExactScalar::eval_numeric(double qval) const {
    // Exact arithmetic in Q(i)(sqrt(q)); floats only in the final conversion.
    mpq_class qr(qval);
    qr.canonicalize();
    auto [A, B] = specialize_sqrt(qr);
    // high-precision final conversion to avoid cancellation noise
    mpf_class r(0, 256);
    mpf_class qf(qr, 256);
    mpf_sqrt(r.get_mpf_t(), qf.get_mpf_t());
    mpf_class vre = mpf_class(A.re(), 256) + mpf_class(B.re(), 256) * r;
    mpf_class vim = mpf_class(A.im(), 256) + mpf_class(B.im(), 256) * r;
    return {vre.get_d(), vim.get_d()};
}

} // namespace ghv
