#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "unprj/check.hpp"

namespace unprj {

// Exponent vector with cached total degree.  Exponents are machine
// integers; multiplication checks against overflow (degrees in this
// problem domain stay far below the guard).
class Monomial {
  public:
    static constexpr int32_t kMaxExponent = 1 << 24;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<int32_t> e) : e_(std::move(e)) {
        deg_ = 0;
        for (int32_t x : e_) {
            UNPRJ_CHECK(x >= 0 && x < kMaxExponent, "Monomial: exponent out of range");
            deg_ += x;
        }
    }

    static Monomial variable(std::size_t nvars, std::size_t i, int32_t power = 1) {
        Monomial m(nvars);
        m.e_[i] = power;
        m.deg_ = power;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    int32_t degree() const { return deg_; }
    int32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<int32_t>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        UNPRJ_CHECK(e_.size() == o.e_.size(), "Monomial: size mismatch");
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] += o.e_[i];
            UNPRJ_CHECK(r.e_[i] < kMaxExponent, "Monomial: exponent overflow");
        }
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // this / o, requires o | this
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= o.e_[i];
            UNPRJ_CHECK(r.e_[i] >= 0, "Monomial: non-divisible quotient");
        }
        r.deg_ = deg_ - o.deg_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            r.e_[i] = std::max(a.e_[i], b.e_[i]);
        r.deg_ = std::accumulate(r.e_.begin(), r.e_.end(), int32_t{0});
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            r.e_[i] = std::min(a.e_[i], b.e_[i]);
        r.deg_ = std::accumulate(r.e_.begin(), r.e_.end(), int32_t{0});
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  private:
    std::vector<int32_t> e_;
    int32_t deg_ = 0;
};

// Multidegree under a user-supplied grading (one integer vector per
// variable); additive under multiplication by construction.
inline std::vector<long long> multidegree(const Monomial& m,
                                          const std::vector<std::vector<long long>>& grading) {
    UNPRJ_REQUIRE(grading.size() == m.nvars(), "multidegree: grading size mismatch");
    std::size_t dim = grading.empty() ? 0 : grading[0].size();
    for (const auto& g : grading)
        UNPRJ_REQUIRE(g.size() == dim, "multidegree: ragged grading vectors");
    std::vector<long long> d(dim, 0);
    for (std::size_t i = 0; i < m.nvars(); ++i)
        for (std::size_t k = 0; k < dim; ++k) d[k] += static_cast<long long>(m[i]) * grading[i][k];
    return d;
}

}  // namespace unprj
