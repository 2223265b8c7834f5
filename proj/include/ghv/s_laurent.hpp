#pragma once

#include <complex>
#include <map>
#include <utility>

#include "ghv/gaussian_rational.hpp"

namespace ghv {

/// Sparse Laurent polynomial in the formal square root s of q (q = s^2),
/// with Gaussian-rational coefficients. No zero coefficients are stored.
class SLaurent {
public:
    SLaurent() = default;

    static SLaurent zero() { return {}; }
    static SLaurent one() { return monomial(0, GaussianRational(1)); }
    static SLaurent monomial(long exp, GaussianRational coeff);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    /// Nonzero monomials only; throws on the zero polynomial.
    long min_exp() const;
    long max_exp() const;
    std::size_t term_count() const { return c_.size(); }

    GaussianRational coeff(long exp) const;
    void set_coeff(long exp, const GaussianRational& v);
    const std::map<long, GaussianRational>& terms() const { return c_; }

    SLaurent operator-() const;
    SLaurent& operator+=(const SLaurent& o);
    SLaurent& operator-=(const SLaurent& o);
    friend SLaurent operator+(SLaurent a, const SLaurent& b) { return a += b; }
    friend SLaurent operator-(SLaurent a, const SLaurent& b) { return a -= b; }
    friend SLaurent operator*(const SLaurent& a, const SLaurent& b);

    SLaurent scaled(const GaussianRational& v) const;
    /// Multiply by the unit s^k.
    SLaurent shifted(long k) const;
    SLaurent conj() const;

    friend bool operator==(const SLaurent& a, const SLaurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const SLaurent& a, const SLaurent& b) { return !(a == b); }

    bool all_exponents_even() const;
    /// Substitute s^2 -> qval; requires all exponents even.
    GaussianRational subs_q(const mpq_class& qval) const;
    /// Exact split p(s) = E(s^2) + s*O(s^2) evaluated at s^2 = qval:
    /// returns {E(qval), O(qval)}, i.e. p(sqrt(qval)) = first + second*sqrt(qval).
    std::pair<GaussianRational, GaussianRational> eval_sqrt_split(const mpq_class& qval) const;

    /// Ordinary-polynomial division (both operands with min_exp >= 0,
    /// divisor nonzero): returns {quotient, remainder}.
    static std::pair<SLaurent, SLaurent> divmod(const SLaurent& a, const SLaurent& b);
    /// Monic gcd of the polynomial parts (Laurent units ignored); gcd(0,0) = 0.
    static SLaurent gcd(const SLaurent& a, const SLaurent& b);

private:
    std::map<long, GaussianRational> c_;
};

} // namespace ghv
