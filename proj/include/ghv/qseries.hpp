#pragma once

#include <optional>

#include "ghv/exact_scalar.hpp"

namespace ghv {

/// q-shifted factorial (alpha; q)_n = (1-alpha)(1-alpha q)...(1-alpha q^{n-1}).
ExactScalar q_pochhammer(const ExactScalar& alpha, long n);

/// Gaussian binomial coefficient as a polynomial in q; returns 0 unless
/// 0 <= m <= n (so boundary conventions in recurrences come out uniformly).
ExactScalar gauss_binom(long n, long m);

/// [n]_q = (q^n - 1)/(q - 1) = gauss_binom(n, 1).
ExactScalar q_int(long n);

/// If x == q^{-n} for a nonnegative integer n, return n.
std::optional<long> as_negative_q_power(const ExactScalar& x);

/// Terminating basic hypergeometric sum
///   3phi2(a1, a2, a3; b1, b2 | q; arg).
/// Some top parameter must equal q^{-n} (n >= 0); the sum has n+1 terms.
/// Throws when no top parameter terminates or a denominator factor
/// (b; q)_k vanishes within range.
ExactScalar phi32(const ExactScalar& a1, const ExactScalar& a2, const ExactScalar& a3,
                  const ExactScalar& b1, const ExactScalar& b2, const ExactScalar& arg);

} // namespace ghv
