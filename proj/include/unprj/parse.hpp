#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "unprj/poly.hpp"

namespace unprj {

// Grammar: integer (or integer/integer) literals; identifiers
// [A-Za-z_][A-Za-z0-9_]*; operators + - * ^ and parentheses; explicit
// '*' required (no juxtaposition); whitespace insignificant.
template <class K>
class PolyParser {
  public:
    PolyParser(const std::string& text, RingPtr ring)
        : s_(text), ring_(std::move(ring)) {}

    Poly<K> parse() {
        Poly<K> p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(pos_, msg); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly<K> expr() {
        bool neg = false;
        skip_ws();
        if (eat('+')) {
        } else if (eat('-')) {
            neg = true;
        }
        Poly<K> acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Poly<K> term() {
        Poly<K> acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Poly<K> factor() {
        Poly<K> b = base();
        if (eat('^')) {
            long long e = natural();
            b = pow(b, static_cast<int32_t>(e));
        }
        return b;
    }

    long long natural() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1LL << 60)) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    Poly<K> base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly<K> p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            long long num = natural();
            if (eat('/')) {
                long long den = natural();
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator");
                }
                K d = scalar_of_int<K>(den, ring_->characteristic());
                if (d.is_zero()) {
                    pos_ = at;
                    fail("coefficient denominator not invertible modulo characteristic");
                }
                K v = scalar_of_int<K>(num, ring_->characteristic()) / d;
                return Poly<K>::constant(ring_, v);
            }
            return Poly<K>::constant(ring_, scalar_of_int<K>(num, ring_->characteristic()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                name += s_[pos_];
                ++pos_;
            }
            int idx = ring_->var_index(name);
            if (idx < 0) {
                pos_ = at;
                fail("unknown variable '" + name + "'");
            }
            return Poly<K>::variable(ring_, static_cast<std::size_t>(idx));
        }
        fail("expected integer, variable or '('");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    RingPtr ring_;
};

template <class K>
Poly<K> parse_poly(const std::string& text, const RingPtr& ring) {
    return PolyParser<K>(text, ring).parse();
}

namespace detail {
inline std::string coeff_str(const Fp& c) { return std::to_string(c.value()); }
inline std::string coeff_str(const Rat& c) { return c.str(); }
inline bool coeff_negative(const Fp&) { return false; }
inline bool coeff_negative(const Rat& c) { return c.raw() < 0; }
}  // namespace detail

template <class K>
std::string to_string(const Poly<K>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        K c = t.c;
        if (first) {
            if (detail::coeff_negative(c)) {
                os << "-";
                c = -c;
            }
        } else {
            if (detail::coeff_negative(c)) {
                os << " - ";
                c = -c;
            } else {
                os << " + ";
            }
        }
        first = false;
        bool printed_coeff = false;
        if (!c.is_one() || t.m.is_one()) {
            os << detail::coeff_str(c);
            printed_coeff = true;
        }
        bool first_var = true;
        for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
            if (t.m[i] == 0) continue;
            if (printed_coeff || !first_var) os << "*";
            os << f.ring()->var_name(i);
            if (t.m[i] > 1) os << "^" << t.m[i];
            first_var = false;
            printed_coeff = printed_coeff || true;
        }
    }
    return os.str();
}

}  // namespace unprj
