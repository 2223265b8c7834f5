#pragma once

#include <cstdint>
#include <vector>

namespace ghv {

/// GF(q) for prime powers q <= 16, elements encoded 0..q-1 as base-p digit
/// vectors of the polynomial representation (Conway polynomial modulus for
/// the extension fields). Full operation tables; field axioms verified
/// exhaustively at construction.
class FiniteField {
public:
    explicit FiniteField(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, b)]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, neg_[b])]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[idx(a, b)]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t inv(std::uint8_t a) const;  // throws on 0

    static bool is_prime_power(int q, int* p_out = nullptr, int* e_out = nullptr);

private:
    std::size_t idx(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::size_t>(a) * q_ + b;
    }
    void verify_axioms() const;

    int q_, p_, e_;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

} // namespace ghv
