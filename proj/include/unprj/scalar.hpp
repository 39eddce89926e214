#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "unprj/check.hpp"

namespace unprj {

// Residue field F_p for an odd prime p < 2^31.  Each value carries its
// modulus so mixed-prime arithmetic is caught instead of silently wrong.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(long long v, uint32_t p) : p_(p) {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        v_ = static_cast<uint32_t>(r);
    }

    static Fp zero(uint32_t p) { return Fp(0, p); }
    static Fp one(uint32_t p) { return Fp(1, p); }

    uint32_t value() const { return v_; }
    uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp operator+(const Fp& o) const {
        same(o);
        uint32_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }
    Fp operator-(const Fp& o) const {
        same(o);
        uint32_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return raw(s, p_);
    }
    Fp operator*(const Fp& o) const {
        same(o);
        return raw(static_cast<uint32_t>(uint64_t(v_) * o.v_ % p_), p_);
    }
    Fp inverse() const {
        UNPRJ_CHECK(v_ != 0, "Fp: inverse of zero");
        // extended Euclid
        int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            int64_t q = a / b;
            int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        UNPRJ_CHECK(a == 1, "Fp: modulus not prime?");
        if (x0 < 0) x0 += p_;
        return raw(static_cast<uint32_t>(x0), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

  private:
    static Fp raw(uint32_t v, uint32_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    void same(const Fp& o) const { UNPRJ_CHECK(p_ == o.p_, "Fp: mixed moduli"); }
    uint32_t v_, p_;
};

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator); GMP guarantees both after canonicalize().
class Rat {
  public:
    Rat() : q_(0) {}
    Rat(long long n) : q_(static_cast<long>(n)) {}
    Rat(long long n, long long d) : q_(static_cast<long>(n), static_cast<long>(d)) {
        UNPRJ_REQUIRE(d != 0, "Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Rat zero(uint32_t /*unused*/ = 0) { return Rat(0); }
    static Rat one(uint32_t /*unused*/ = 0) { return Rat(1); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
    Rat operator/(const Rat& o) const {
        UNPRJ_CHECK(!o.is_zero(), "Rat: division by zero");
        return Rat(mpq_class(q_ / o.q_));
    }
    Rat inverse() const { return Rat::one() / *this; }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rat& o) const { return q_ == o.q_; }
    bool operator!=(const Rat& o) const { return q_ != o.q_; }

    const mpq_class& raw() const { return q_; }
    std::string str() const { return q_.get_str(); }

  private:
    mpq_class q_;
};

// Coefficient construction helpers; p is ignored for Rat.
template <class K>
K scalar_of_int(long long n, uint32_t p);
template <>
inline Fp scalar_of_int<Fp>(long long n, uint32_t p) { return Fp(n, p); }
template <>
inline Rat scalar_of_int<Rat>(long long n, uint32_t) { return Rat(n); }

template <class K>
constexpr bool is_modular_field = false;
template <>
inline constexpr bool is_modular_field<Fp> = true;

}  // namespace unprj
