#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "unprj/monomial.hpp"
#include "unprj/ring.hpp"
#include "unprj/scalar.hpp"

namespace unprj {

template <class K>
struct Term {
    K c;
    Monomial m;
};

// Multivariate polynomial over an exact field: term list kept strictly
// descending under the active order.  Values are immutable in spirit;
// all operations return fresh polynomials.  Re-sorting on an order
// change is explicit via resorted().
template <class K>
class Poly {
  public:
    Poly() = default;
    Poly(RingPtr ring, MonomialOrder ord) : ring_(std::move(ring)), ord_(std::move(ord)) {}

    static Poly zero(const RingPtr& ring) { return Poly(ring, ring->order()); }
    static Poly zero(const RingPtr& ring, const MonomialOrder& ord) { return Poly(ring, ord); }

    static Poly from_terms(const RingPtr& ring, const MonomialOrder& ord,
                           std::vector<Term<K>> ts) {
        Poly p(ring, ord);
        p.ts_ = std::move(ts);
        p.normalize();
        return p;
    }

    // Caller promises strictly descending monomials and no zero coeffs.
    static Poly from_sorted(const RingPtr& ring, const MonomialOrder& ord,
                            std::vector<Term<K>> ts) {
        Poly p(ring, ord);
        p.ts_ = std::move(ts);
        return p;
    }

    static Poly constant(const RingPtr& ring, const K& c) {
        Poly p(ring, ring->order());
        if (!c.is_zero()) p.ts_.push_back({c, Monomial(ring->nvars())});
        return p;
    }

    static Poly monomial(const RingPtr& ring, const K& c, Monomial m) {
        Poly p(ring, ring->order());
        if (!c.is_zero()) p.ts_.push_back({c, std::move(m)});
        return p;
    }

    static Poly variable(const RingPtr& ring, std::size_t i, int32_t power = 1) {
        return monomial(ring, scalar_of_int<K>(1, ring->characteristic()),
                        Monomial::variable(ring->nvars(), i, power));
    }

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Term<K>>& terms() const { return ts_; }
    bool is_zero() const { return ts_.empty(); }
    std::size_t nterms() const { return ts_.size(); }

    const Term<K>& lead() const {
        UNPRJ_CHECK(!ts_.empty(), "Poly: lead of zero");
        return ts_.front();
    }
    const Monomial& lead_monomial() const { return lead().m; }
    const K& lead_coeff() const { return lead().c; }

    int32_t degree() const {
        int32_t d = -1;
        for (const auto& t : ts_) d = std::max(d, t.m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (ts_.empty()) return true;
        int32_t d = ts_.front().m.degree();
        for (const auto& t : ts_)
            if (t.m.degree() != d) return false;
        return true;
    }

    int32_t degree_in(std::size_t var) const {
        int32_t d = 0;
        for (const auto& t : ts_) d = std::max(d, t.m[var]);
        return d;
    }

    bool is_constant() const { return ts_.empty() || (ts_.size() == 1 && ts_[0].m.is_one()); }

    Poly resorted(const MonomialOrder& ord) const {
        Poly p(ring_, ord);
        p.ts_ = ts_;
        std::sort(p.ts_.begin(), p.ts_.end(),
                  [&](const Term<K>& a, const Term<K>& b) { return ord.greater(a.m, b.m); });
        return p;
    }

    Poly operator-() const {
        Poly p(ring_, ord_);
        p.ts_.reserve(ts_.size());
        for (const auto& t : ts_) p.ts_.push_back({-t.c, t.m});
        return p;
    }

    Poly operator+(const Poly& o) const { return merged(o, false); }
    Poly operator-(const Poly& o) const { return merged(o, true); }

    Poly operator*(const Poly& o) const {
        check_compatible(o);
        Poly acc(ring_, ord_);
        const Poly& small_p = ts_.size() <= o.ts_.size() ? *this : o;
        const Poly& big_p = ts_.size() <= o.ts_.size() ? o : *this;
        for (const auto& t : small_p.ts_) acc = acc.axpy(t.c, t.m, big_p);
        return acc;
    }

    Poly scaled(const K& c) const {
        Poly p(ring_, ord_);
        if (c.is_zero()) return p;
        p.ts_.reserve(ts_.size());
        for (const auto& t : ts_) p.ts_.push_back({t.c * c, t.m});
        return p;
    }

    Poly monic() const {
        if (ts_.empty()) return *this;
        return scaled(lead_coeff().inverse());
    }

    Poly mono_mul(const Monomial& m) const {
        Poly p(ring_, ord_);
        p.ts_.reserve(ts_.size());
        for (const auto& t : ts_) p.ts_.push_back({t.c, t.m * m});
        return p;
    }

    // this + c * m * g, single merge
    Poly axpy(const K& c, const Monomial& m, const Poly& g) const {
        check_compatible(g);
        Poly r(ring_, ord_);
        r.ts_.reserve(ts_.size() + g.ts_.size());
        std::size_t i = 0, j = 0;
        while (i < ts_.size() && j < g.ts_.size()) {
            Monomial gm = g.ts_[j].m * m;
            int cmp = ord_.compare(ts_[i].m, gm);
            if (cmp > 0) {
                r.ts_.push_back(ts_[i]);
                ++i;
            } else if (cmp < 0) {
                K x = c * g.ts_[j].c;
                if (!x.is_zero()) r.ts_.push_back({std::move(x), std::move(gm)});
                ++j;
            } else {
                K x = ts_[i].c + c * g.ts_[j].c;
                if (!x.is_zero()) r.ts_.push_back({std::move(x), std::move(gm)});
                ++i;
                ++j;
            }
        }
        for (; i < ts_.size(); ++i) r.ts_.push_back(ts_[i]);
        for (; j < g.ts_.size(); ++j) {
            K x = c * g.ts_[j].c;
            if (!x.is_zero()) r.ts_.push_back({std::move(x), g.ts_[j].m * m});
        }
        return r;
    }

    // coefficient of var^i as a polynomial with var-exponent zero
    Poly coefficient_of_power(std::size_t var, int32_t i) const {
        Poly r(ring_, ord_);
        for (const auto& t : ts_) {
            if (t.m[var] != i) continue;
            std::vector<int32_t> e = t.m.exponents();
            e[var] = 0;
            r.ts_.push_back({t.c, Monomial(std::move(e))});
        }
        std::sort(r.ts_.begin(), r.ts_.end(),
                  [&](const Term<K>& a, const Term<K>& b) { return ord_.greater(a.m, b.m); });
        return r;
    }

    K eval(const std::vector<K>& point) const {
        UNPRJ_REQUIRE(point.size() == ring_->nvars(), "eval: point size mismatch");
        K acc = scalar_of_int<K>(0, ring_->characteristic());
        for (const auto& t : ts_) {
            K v = t.c;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (int32_t k = 0; k < t.m[i]; ++k) v = v * point[i];
            acc = acc + v;
        }
        return acc;
    }

    bool operator==(const Poly& o) const {
        if (ts_.size() != o.ts_.size()) return false;
        for (std::size_t i = 0; i < ts_.size(); ++i)
            if (ts_[i].c != o.ts_[i].c || ts_[i].m != o.ts_[i].m) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

  private:
    void check_compatible(const Poly& o) const {
        UNPRJ_CHECK(same_ring(ring_, o.ring_), "Poly: ring mismatch");
        UNPRJ_CHECK(ord_ == o.ord_, "Poly: order mismatch");
    }

    void normalize() {
        std::sort(ts_.begin(), ts_.end(),
                  [&](const Term<K>& a, const Term<K>& b) { return ord_.greater(a.m, b.m); });
        std::vector<Term<K>> out;
        out.reserve(ts_.size());
        for (auto& t : ts_) {
            if (!out.empty() && out.back().m == t.m)
                out.back().c += t.c;
            else
                out.push_back(std::move(t));
            if (!out.empty() && out.back().c.is_zero()) out.pop_back();
        }
        ts_ = std::move(out);
    }

    Poly merged(const Poly& o, bool subtract) const {
        check_compatible(o);
        Poly r(ring_, ord_);
        r.ts_.reserve(ts_.size() + o.ts_.size());
        std::size_t i = 0, j = 0;
        while (i < ts_.size() && j < o.ts_.size()) {
            int cmp = ord_.compare(ts_[i].m, o.ts_[j].m);
            if (cmp > 0) {
                r.ts_.push_back(ts_[i++]);
            } else if (cmp < 0) {
                r.ts_.push_back({subtract ? -o.ts_[j].c : o.ts_[j].c, o.ts_[j].m});
                ++j;
            } else {
                K x = subtract ? ts_[i].c - o.ts_[j].c : ts_[i].c + o.ts_[j].c;
                if (!x.is_zero()) r.ts_.push_back({std::move(x), ts_[i].m});
                ++i;
                ++j;
            }
        }
        for (; i < ts_.size(); ++i) r.ts_.push_back(ts_[i]);
        for (; j < o.ts_.size(); ++j)
            r.ts_.push_back({subtract ? -o.ts_[j].c : o.ts_[j].c, o.ts_[j].m});
        return r;
    }

    RingPtr ring_;
    MonomialOrder ord_;
    std::vector<Term<K>> ts_;
};

template <class K>
Poly<K> pow(const Poly<K>& f, int32_t e) {
    UNPRJ_REQUIRE(e >= 0, "pow: negative exponent");
    Poly<K> r = Poly<K>::constant(f.ring(), scalar_of_int<K>(1, f.ring()->characteristic()));
    r = r.resorted(f.order());
    Poly<K> base = f;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

// Transport a polynomial to another ring by variable NAME; every
// variable actually occurring must exist in the target.
template <class K>
Poly<K> transport(const Poly<K>& f, const RingPtr& target) {
    UNPRJ_REQUIRE(f.ring()->characteristic() == target->characteristic(),
                  "transport: characteristic mismatch");
    std::vector<int> map(f.ring()->nvars(), -1);
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
        map[i] = target->var_index(f.ring()->var_name(i));
    std::vector<Term<K>> ts;
    ts.reserve(f.nterms());
    for (const auto& t : f.terms()) {
        std::vector<int32_t> e(target->nvars(), 0);
        for (std::size_t i = 0; i < map.size(); ++i) {
            if (t.m[i] == 0) continue;
            UNPRJ_REQUIRE(map[i] >= 0, "transport: variable " + f.ring()->var_name(i) +
                                           " missing in target ring");
            e[static_cast<std::size_t>(map[i])] = t.m[i];
        }
        ts.push_back({t.c, Monomial(std::move(e))});
    }
    return Poly<K>::from_terms(target, target->order(), std::move(ts));
}

// Graded ring homomorphism given by an image polynomial per source
// variable.
template <class K>
class RingMap {
  public:
    RingMap(RingPtr source, RingPtr target, std::vector<Poly<K>> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
        UNPRJ_REQUIRE(images_.size() == source_->nvars(), "RingMap: one image per variable");
        for (const auto& g : images_)
            UNPRJ_CHECK(same_ring(g.ring(), target_), "RingMap: image in wrong ring");
    }

    static RingMap identity(const RingPtr& ring) {
        std::vector<Poly<K>> im;
        for (std::size_t i = 0; i < ring->nvars(); ++i) im.push_back(Poly<K>::variable(ring, i));
        return RingMap(ring, ring, std::move(im));
    }

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const std::vector<Poly<K>>& images() const { return images_; }

    Poly<K> apply(const Poly<K>& f) const {
        UNPRJ_REQUIRE(same_ring(f.ring(), source_), "RingMap: ring mismatch");
        Poly<K> acc = Poly<K>::zero(target_);
        for (const auto& t : f.terms()) {
            Poly<K> prod = Poly<K>::constant(target_, t.c);
            for (std::size_t i = 0; i < source_->nvars(); ++i)
                if (t.m[i] > 0) prod = prod * pow(images_[i], t.m[i]);
            acc = acc + prod;
        }
        return acc;
    }

  private:
    RingPtr source_;
    RingPtr target_;
    std::vector<Poly<K>> images_;
};

}  // namespace unprj
