#include "ghv/finite_field.hpp"

#include <array>

#include "ghv/errors.hpp"

namespace ghv {

namespace {

// reduction rules x^e = <digits> for the Conway moduli we support
struct ExtensionRule {
    int q;
    int p;
    int e;
    std::array<int, 4> reduction;  // coefficients of 1, x, x^2, x^3
};

constexpr ExtensionRule kRules[] = {
    {4, 2, 2, {1, 1, 0, 0}},    // x^2 = x + 1
    {8, 2, 3, {1, 1, 0, 0}},    // x^3 = x + 1
    {9, 3, 2, {1, 1, 0, 0}},    // x^2 = x + 1  (from x^2 + 2x + 2)
    {16, 2, 4, {1, 1, 0, 0}},   // x^4 = x + 1
};

std::vector<int> digits_of(int v, int p, int e) {
    std::vector<int> d(static_cast<size_t>(e));
    for (int i = 0; i < e; ++i) {
        d[static_cast<size_t>(i)] = v % p;
        v /= p;
    }
    return d;
}

int value_of(const std::vector<int>& d, int p) {
    int v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

} // namespace

bool FiniteField::is_prime_power(int q, int* p_out, int* e_out) {
    if (q < 2) return false;
    int p = 0;
    for (int cand = 2; cand * cand <= q; ++cand)
        if (q % cand == 0) {
            p = cand;
            break;
        }
    if (p == 0) p = q;  // q prime
    int e = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) return false;
    if (p_out) *p_out = p;
    if (e_out) *e_out = e;
    return true;
}

FiniteField::FiniteField(int q) : q_(q) {
    if (q < 2 || q > 16 || !is_prime_power(q, &p_, &e_))
        throw PreconditionError(std::to_string(q) + " is not a prime power <= 16");
    add_.resize(static_cast<size_t>(q) * q);
    mul_.resize(static_cast<size_t>(q) * q);
    neg_.resize(static_cast<size_t>(q));
    inv_.assign(static_cast<size_t>(q), 0);

    const ExtensionRule* rule = nullptr;
    for (const auto& r : kRules)
        if (r.q == q) rule = &r;
    if (e_ > 1 && rule == nullptr) throw PreconditionError("unsupported extension field");

    for (int a = 0; a < q; ++a) {
        auto da = digits_of(a, p_, e_);
        for (int i = 0; i < e_; ++i) da[static_cast<size_t>(i)] = (p_ - da[static_cast<size_t>(i)]) % p_;
        neg_[static_cast<size_t>(a)] = static_cast<std::uint8_t>(value_of(da, p_));
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            auto da = digits_of(a, p_, e_), db = digits_of(b, p_, e_);
            std::vector<int> sum(static_cast<size_t>(e_));
            for (int i = 0; i < e_; ++i)
                sum[static_cast<size_t>(i)] =
                    (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p_;
            add_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] =
                static_cast<std::uint8_t>(value_of(sum, p_));
            // polynomial product, reduced by the modulus rule
            std::vector<int> prod(static_cast<size_t>(2 * e_ - 1), 0);
            for (int i = 0; i < e_; ++i)
                for (int j = 0; j < e_; ++j)
                    prod[static_cast<size_t>(i + j)] =
                        (prod[static_cast<size_t>(i + j)] +
                         da[static_cast<size_t>(i)] * db[static_cast<size_t>(j)]) %
                        p_;
            for (int deg = 2 * e_ - 2; deg >= e_; --deg) {
                int coef = prod[static_cast<size_t>(deg)];
                if (coef == 0) continue;
                prod[static_cast<size_t>(deg)] = 0;
                for (int i = 0; i < e_; ++i)
                    prod[static_cast<size_t>(deg - e_ + i)] =
                        (prod[static_cast<size_t>(deg - e_ + i)] +
                         coef * rule->reduction[static_cast<size_t>(i)]) %
                        p_;
            }
            prod.resize(static_cast<size_t>(e_));
            mul_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] =
                static_cast<std::uint8_t>(value_of(prod, p_));
        }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] == 1)
                inv_[static_cast<size_t>(a)] = static_cast<std::uint8_t>(b);
    verify_axioms();
}

std::uint8_t FiniteField::inv(std::uint8_t a) const {
    if (a == 0) throw DivisionByZero("inverse of 0 in GF(q)");
    return inv_[a];
}

void FiniteField::verify_axioms() const {
    const int q = q_;
    auto fail = [](const char* what) { throw Error(std::string("field axiom violated: ") + what); };
    for (int a = 0; a < q; ++a) {
        if (add(static_cast<std::uint8_t>(a), 0) != a) fail("additive identity");
        if (mul(static_cast<std::uint8_t>(a), 1) != a) fail("multiplicative identity");
        if (add(static_cast<std::uint8_t>(a), neg(static_cast<std::uint8_t>(a))) != 0)
            fail("additive inverse");
        if (a != 0 && mul(static_cast<std::uint8_t>(a), inv_[static_cast<size_t>(a)]) != 1)
            fail("multiplicative inverse");
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            auto ua = static_cast<std::uint8_t>(a), ub = static_cast<std::uint8_t>(b);
            if (add(ua, ub) != add(ub, ua)) fail("additive commutativity");
            if (mul(ua, ub) != mul(ub, ua)) fail("multiplicative commutativity");
            for (int c = 0; c < q; ++c) {
                auto uc = static_cast<std::uint8_t>(c);
                if (add(add(ua, ub), uc) != add(ua, add(ub, uc))) fail("additive associativity");
                if (mul(mul(ua, ub), uc) != mul(ua, mul(ub, uc)))
                    fail("multiplicative associativity");
                if (mul(ua, add(ub, uc)) != add(mul(ua, ub), mul(ua, uc))) fail("distributivity");
            }
        }
}

} // namespace ghv
