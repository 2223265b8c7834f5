#pragma once

#include <complex>
#include <string>

#include "ghv/s_laurent.hpp"

namespace ghv {

/// Element of the field Q(i)(s) with q = s^2, as a canonical fraction
/// num/den of Laurent polynomials in s.
///
/// Canonical form: den is an ordinary polynomial with nonzero constant
/// term and leading coefficient 1, and gcd(num, den) is a unit. Structural
/// equality then coincides with mathematical equality.
class ExactScalar {
public:
    ExactScalar() : num_(SLaurent::zero()), den_(SLaurent::one()) {}
    ExactScalar(long n) : num_(SLaurent::monomial(0, GaussianRational(n))), den_(SLaurent::one()) {}
    explicit ExactScalar(const GaussianRational& v)
        : num_(SLaurent::monomial(0, v)), den_(SLaurent::one()) {}
    ExactScalar(SLaurent num, SLaurent den);

    static ExactScalar zero() { return ExactScalar(); }
    static ExactScalar one() { return ExactScalar(1); }
    static ExactScalar i() { return ExactScalar(GaussianRational::i()); }
    /// s^k  (i.e. q^{k/2})
    static ExactScalar s_pow(long k) {
        return ExactScalar(SLaurent::monomial(k, GaussianRational(1)), SLaurent::one());
    }
    /// q^k
    static ExactScalar q_pow(long k) { return s_pow(2 * k); }

    const SLaurent& num() const { return num_; }
    const SLaurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);
    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    ExactScalar inv() const;
    ExactScalar pow(long e) const;
    /// Field automorphism i -> -i; s is fixed (s models the positive real root).
    ExactScalar conj() const;

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    /// True when the value lies in Q(i)(q), i.e. all s-exponents are even.
    bool is_rational_in_q() const {
        return num_.all_exponents_even() && den_.all_exponents_even();
    }
    /// Substitute q -> qval exactly. Throws unless is_rational_in_q().
    GaussianRational specialize_q(const mpq_class& qval) const;
    /// Exact value at s = +sqrt(qval) written as {A, B} with value
    /// A + B*sqrt(qval); B = 0 whenever qval is a perfect square of a
    /// rational. Throws PoleError at poles.
    std::pair<GaussianRational, GaussianRational> specialize_sqrt(const mpq_class& qval) const;
    /// Floating evaluation at s = +sqrt(qval). Throws PoleError if the
    /// denominator vanishes there. Diagnostics only.
    std::complex<double> eval_numeric(double qval) const;

    /// Canonical text form, e.g. "-q^(-7/2)" or "(q^2 - 1)/(q^3 - 1)".
    std::string str() const;
    /// Parse the rendering grammar (general +,-,*,/,^ expressions over
    /// integers, i, q, s). Round-trips str().
    static ExactScalar parse(const std::string& text);

private:
    void canonicalize();
    SLaurent num_, den_;
};

} // namespace ghv
