#pragma once

#include <string>
#include <vector>

#include "unprj/monomial.hpp"

namespace unprj {

enum class OrderKind { Grevlex, Lex, WeightedGrevlex, Block };

// Global monomial orders: graded reverse lexicographic, lexicographic,
// weighted grevlex, and block orders that rank a front group of
// variables first (used for elimination).  An optional permutation maps
// comparison slot -> ring variable, so any variable subset can be moved
// to the front block.
class MonomialOrder {
  public:
    MonomialOrder() : kind_(OrderKind::Grevlex) {}

    static MonomialOrder grevlex() { return MonomialOrder(); }
    static MonomialOrder lex() {
        MonomialOrder o;
        o.kind_ = OrderKind::Lex;
        return o;
    }
    static MonomialOrder weighted_grevlex(std::vector<int32_t> weights) {
        for (int32_t w : weights) UNPRJ_REQUIRE(w > 0, "weighted order: weights must be positive");
        MonomialOrder o;
        o.kind_ = OrderKind::WeightedGrevlex;
        o.weights_ = std::move(weights);
        return o;
    }
    // Eliminates the first `front` variables (after permutation).
    static MonomialOrder block(int front, OrderKind inner = OrderKind::Grevlex,
                               std::vector<int> perm = {}) {
        MonomialOrder o;
        o.kind_ = OrderKind::Block;
        o.front_ = front;
        o.inner_ = inner;
        o.perm_ = std::move(perm);
        return o;
    }

    OrderKind kind() const { return kind_; }
    int front() const { return front_; }
    const std::vector<int>& permutation() const { return perm_; }

    // three-way: +1 if a > b, 0 if equal, -1 if a < b
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case OrderKind::Grevlex:
                return cmp_grevlex(a, b, 0, a.nvars());
            case OrderKind::Lex:
                return cmp_lex(a, b, 0, a.nvars());
            case OrderKind::WeightedGrevlex: {
                long long wa = 0, wb = 0;
                for (std::size_t i = 0; i < a.nvars(); ++i) {
                    wa += static_cast<long long>(weights_[i]) * a[i];
                    wb += static_cast<long long>(weights_[i]) * b[i];
                }
                if (wa != wb) return wa > wb ? 1 : -1;
                return cmp_grevlex(a, b, 0, a.nvars());
            }
            case OrderKind::Block: {
                long long da = 0, db = 0;
                for (int i = 0; i < front_; ++i) {
                    da += at(a, i);
                    db += at(b, i);
                }
                if (da != db) return da > db ? 1 : -1;
                if (int c = cmp_grevlex(a, b, 0, front_)) return c;
                if (inner_ == OrderKind::Lex) return cmp_lex(a, b, front_, a.nvars());
                return cmp_grevlex(a, b, front_, a.nvars());
            }
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && front_ == o.front_ && inner_ == o.inner_ &&
               weights_ == o.weights_ && perm_ == o.perm_;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    // stable cache key
    std::string key() const {
        std::string s;
        s += std::to_string(static_cast<int>(kind_));
        s += '/';
        s += std::to_string(front_);
        s += '/';
        s += std::to_string(static_cast<int>(inner_));
        s += '/';
        for (int32_t w : weights_) s += std::to_string(w) + ',';
        s += '/';
        for (int p : perm_) s += std::to_string(p) + ',';
        return s;
    }

  private:
    int32_t at(const Monomial& m, std::size_t slot) const {
        return perm_.empty() ? m[slot] : m[static_cast<std::size_t>(perm_[slot])];
    }
    int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
        long long da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += at(a, i);
            db += at(b, i);
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;) {
            int32_t d = at(a, i) - at(b, i);
            if (d != 0) return d < 0 ? 1 : -1;
        }
        return 0;
    }
    int cmp_lex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
        for (std::size_t i = lo; i < hi; ++i) {
            int32_t d = at(a, i) - at(b, i);
            if (d != 0) return d > 0 ? 1 : -1;
        }
        return 0;
    }

    OrderKind kind_ = OrderKind::Grevlex;
    OrderKind inner_ = OrderKind::Grevlex;
    int front_ = 0;
    std::vector<int32_t> weights_;
    std::vector<int> perm_;
};

// Order eliminating an arbitrary variable subset: those variables are
// permuted to the front block.
inline MonomialOrder elimination_order(std::size_t nvars, const std::vector<int>& vars,
                                       OrderKind inner = OrderKind::Grevlex) {
    std::vector<char> in_front(nvars, 0);
    for (int v : vars) in_front[static_cast<std::size_t>(v)] = 1;
    std::vector<int> perm;
    perm.reserve(nvars);
    for (int v : vars) perm.push_back(v);
    for (std::size_t i = 0; i < nvars; ++i)
        if (!in_front[i]) perm.push_back(static_cast<int>(i));
    return MonomialOrder::block(static_cast<int>(vars.size()), inner, std::move(perm));
}

}  // namespace unprj
