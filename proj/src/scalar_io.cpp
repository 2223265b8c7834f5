#include <cctype>
#include <sstream>

#include "ghv/errors.hpp"
#include "ghv/exact_scalar.hpp"

namespace ghv {

namespace {

std::string mpq_str(const mpq_class& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// "i", "-i", "2*i", "-2/3*i"
std::string imag_str(const mpq_class& im) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return mpq_str(im) + "*i";
}

// q^(e/2) for the s-exponent e
std::string q_power_str(long e) {
    if (e == 0) return "";
    if (e == 2) return "q";
    std::ostringstream os;
    if (e % 2 == 0) {
        long h = e / 2;
        os << "q^" << (h < 0 ? "(" : "") << h << (h < 0 ? ")" : "");
    } else {
        os << "q^(" << e << "/2)";
    }
    return os.str();
}

std::string laurent_str(const SLaurent& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    // descending exponents
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        long e = it->first;
        const GaussianRational& c = it->second;
        std::string cs;
        bool negated = false;
        if (c.is_real()) {
            mpq_class re = c.re();
            if (re < 0) {
                negated = true;
                re = -re;
            }
            cs = (re == 1 && e != 0) ? "" : mpq_str(re);
        } else if (c.re() == 0) {
            mpq_class im = c.im();
            if (im < 0) {
                negated = true;
                im = -im;
            }
            cs = imag_str(im);
        } else {
            cs = "(" + mpq_str(c.re()) + (c.im() > 0 ? " + " : " - ") +
                 imag_str(abs(c.im())) + ")";
        }
        std::string qs = q_power_str(e);
        std::string term = cs.empty() ? qs : (qs.empty() ? cs : cs + "*" + qs);
        if (first) {
            out += (negated ? "-" : "") + term;
            first = false;
        } else {
            out += (negated ? " - " : " + ") + term;
        }
    }
    return out;
}

} // namespace

std::string GaussianRational::str() const {
    if (is_real()) return mpq_str(re_);
    if (re_ == 0) return imag_str(im_);
    return "(" + mpq_str(re_) + (im_ > 0 ? " + " : " - ") + imag_str(abs(im_)) + ")";
}

std::string ExactScalar::str() const {
    if (den_.is_one()) return laurent_str(num_);
    return "(" + laurent_str(num_) + ")/(" + laurent_str(den_) + ")";
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : t_(text) {}

    ExactScalar run() {
        ExactScalar v = expr();
        skip_ws();
        if (pos_ != t_.size()) throw ParseError("trailing input at position " + std::to_string(pos_));
        return v;
    }

private:
    ExactScalar expr() {
        ExactScalar v = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    ExactScalar term() {
        ExactScalar v = unary();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                ExactScalar d = unary();
                if (d.is_zero()) throw ParseError("division by zero in scalar text");
                v /= d;
            } else {
                return v;
            }
        }
    }

    ExactScalar unary() {
        skip_ws();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (get() == '-') neg = !neg;
            skip_ws();
        }
        ExactScalar v = power();
        return neg ? -v : v;
    }

    ExactScalar power() {
        ExactScalar base = atom();
        skip_ws();
        if (!accept('^')) return base;
        skip_ws();
        // exponent: integer, or parenthesized rational with denominator 1 or 2
        mpq_class e = exponent_value();
        mpz_class den = e.get_den();
        if (den == 1) return base.pow(e.get_num().get_si());
        if (den == 2) {
            // only q (= s^2) admits half-integer exponents in this grammar
            if (base == ExactScalar::q_pow(1)) return ExactScalar::s_pow(e.get_num().get_si());
            throw ParseError("half-integer exponent on a base other than q");
        }
        throw ParseError("unsupported exponent denominator");
    }

    mpq_class exponent_value() {
        skip_ws();
        if (accept('(')) {
            mpq_class v = signed_rational();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')' in exponent");
            return v;
        }
        return signed_rational();
    }

    mpq_class signed_rational() {
        skip_ws();
        bool neg = accept('-');
        mpz_class n = integer();
        mpq_class v(n);
        skip_ws();
        if (accept('/')) v /= mpq_class(integer());
        v.canonicalize();
        return neg ? mpq_class(-v) : v;
    }

    ExactScalar atom() {
        skip_ws();
        char ch = peek();
        if (ch == '(') {
            get();
            ExactScalar v = expr();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)))
            return ExactScalar(GaussianRational(mpq_class(integer())));
        if (ch == 'i') {
            get();
            return ExactScalar::i();
        }
        if (ch == 'q') {
            get();
            return ExactScalar::q_pow(1);
        }
        if (ch == 's') {
            get();
            return ExactScalar::s_pow(1);
        }
        throw ParseError(std::string("unexpected character '") + ch + "' at position " +
                         std::to_string(pos_));
    }

    mpz_class integer() {
        skip_ws();
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        if (digits.empty()) throw ParseError("expected integer at position " + std::to_string(pos_));
        return mpz_class(digits);
    }

    void skip_ws() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
    char get() { return pos_ < t_.size() ? t_[pos_++] : '\0'; }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& t_;
    std::size_t pos_ = 0;
};

} // namespace

ExactScalar ExactScalar::parse(const std::string& text) { return Parser(text).run(); }

} // namespace ghv
