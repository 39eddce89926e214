#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "unprj/buchberger.hpp"
#include "unprj/poly.hpp"

namespace unprj {

template <class K>
struct MTerm {
    K c;
    Monomial m;
    int comp;
};

// Element of a graded free module: term list sorted descending under
// "ring order on the monomial, ties to the smaller component".
template <class K>
class ModPoly {
  public:
    ModPoly() = default;
    ModPoly(RingPtr ring, MonomialOrder ord) : ring_(std::move(ring)), ord_(std::move(ord)) {}

    static ModPoly zero(const RingPtr& ring, const MonomialOrder& ord) {
        return ModPoly(ring, ord);
    }

    static ModPoly from_terms(const RingPtr& ring, const MonomialOrder& ord,
                              std::vector<MTerm<K>> ts) {
        ModPoly v(ring, ord);
        v.ts_ = std::move(ts);
        v.normalize();
        return v;
    }

    static ModPoly from_sorted(const RingPtr& ring, const MonomialOrder& ord,
                               std::vector<MTerm<K>> ts) {
        ModPoly v(ring, ord);
        v.ts_ = std::move(ts);
        return v;
    }

    static ModPoly unit(const RingPtr& ring, const MonomialOrder& ord, int comp, const K& c) {
        ModPoly v(ring, ord);
        if (!c.is_zero()) v.ts_.push_back({c, Monomial(ring->nvars()), comp});
        return v;
    }

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<MTerm<K>>& terms() const { return ts_; }
    bool is_zero() const { return ts_.empty(); }

    const MTerm<K>& lead() const {
        UNPRJ_CHECK(!ts_.empty(), "ModPoly: lead of zero");
        return ts_.front();
    }

    int term_compare(const MTerm<K>& a, const MTerm<K>& b) const {
        int c = ord_.compare(a.m, b.m);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }

    ModPoly operator-() const {
        ModPoly v(ring_, ord_);
        v.ts_.reserve(ts_.size());
        for (const auto& t : ts_) v.ts_.push_back({-t.c, t.m, t.comp});
        return v;
    }

    ModPoly scaled(const K& c) const {
        ModPoly v(ring_, ord_);
        if (c.is_zero()) return v;
        v.ts_.reserve(ts_.size());
        for (const auto& t : ts_) v.ts_.push_back({t.c * c, t.m, t.comp});
        return v;
    }

    ModPoly monic() const {
        if (ts_.empty()) return *this;
        return scaled(lead().c.inverse());
    }

    ModPoly mono_mul(const Monomial& m) const {
        ModPoly v(ring_, ord_);
        v.ts_.reserve(ts_.size());
        for (const auto& t : ts_) v.ts_.push_back({t.c, t.m * m, t.comp});
        return v;
    }

    // this + c * m * g
    ModPoly axpy(const K& c, const Monomial& m, const ModPoly& g) const {
        ModPoly r(ring_, ord_);
        r.ts_.reserve(ts_.size() + g.ts_.size());
        std::size_t i = 0, j = 0;
        while (i < ts_.size() && j < g.ts_.size()) {
            MTerm<K> gt{c * g.ts_[j].c, g.ts_[j].m * m, g.ts_[j].comp};
            int cmp = term_compare(ts_[i], gt);
            if (cmp > 0) {
                r.ts_.push_back(ts_[i++]);
            } else if (cmp < 0) {
                if (!gt.c.is_zero()) r.ts_.push_back(std::move(gt));
                ++j;
            } else {
                K x = ts_[i].c + gt.c;
                if (!x.is_zero()) r.ts_.push_back({std::move(x), ts_[i].m, ts_[i].comp});
                ++i;
                ++j;
            }
        }
        for (; i < ts_.size(); ++i) r.ts_.push_back(ts_[i]);
        for (; j < g.ts_.size(); ++j) {
            K x = c * g.ts_[j].c;
            if (!x.is_zero()) r.ts_.push_back({std::move(x), g.ts_[j].m * m, g.ts_[j].comp});
        }
        return r;
    }

    ModPoly operator+(const ModPoly& o) const {
        return axpy(scalar_of_int<K>(1, ring_->characteristic()), Monomial(ring_->nvars()), o);
    }
    ModPoly operator-(const ModPoly& o) const {
        return axpy(scalar_of_int<K>(-1, ring_->characteristic()), Monomial(ring_->nvars()), o);
    }

    // degree of a homogeneous element in a free module with `twists`
    int32_t degree(const std::vector<int32_t>& twists) const {
        if (ts_.empty()) return -1;
        return ts_[0].m.degree() + twists[static_cast<std::size_t>(ts_[0].comp)];
    }

    bool is_homogeneous(const std::vector<int32_t>& twists) const {
        if (ts_.empty()) return true;
        int32_t d = degree(twists);
        for (const auto& t : ts_)
            if (t.m.degree() + twists[static_cast<std::size_t>(t.comp)] != d) return false;
        return true;
    }

    Poly<K> component(int comp) const {
        std::vector<Term<K>> ts;
        for (const auto& t : ts_)
            if (t.comp == comp) ts.push_back({t.c, t.m});
        return Poly<K>::from_sorted(ring_, ord_, std::move(ts));
    }

    bool operator==(const ModPoly& o) const {
        if (ts_.size() != o.ts_.size()) return false;
        for (std::size_t i = 0; i < ts_.size(); ++i)
            if (ts_[i].c != o.ts_[i].c || ts_[i].m != o.ts_[i].m || ts_[i].comp != o.ts_[i].comp)
                return false;
        return true;
    }
    bool operator!=(const ModPoly& o) const { return !(*this == o); }

  private:
    void normalize() {
        std::sort(ts_.begin(), ts_.end(),
                  [&](const MTerm<K>& a, const MTerm<K>& b) { return term_compare(a, b) > 0; });
        std::vector<MTerm<K>> out;
        out.reserve(ts_.size());
        for (auto& t : ts_) {
            if (t.c.is_zero()) continue;
            if (!out.empty() && out.back().m == t.m && out.back().comp == t.comp) {
                out.back().c += t.c;
                if (out.back().c.is_zero()) out.pop_back();
            } else {
                out.push_back(std::move(t));
            }
        }
        ts_ = std::move(out);
    }

    RingPtr ring_;
    MonomialOrder ord_;
    std::vector<MTerm<K>> ts_;
};

template <class K>
ModPoly<K> from_columns(const RingPtr& ring, const MonomialOrder& ord,
                        const std::vector<Poly<K>>& col) {
    std::vector<MTerm<K>> ts;
    for (std::size_t r = 0; r < col.size(); ++r)
        for (const auto& t : col[r].terms()) ts.push_back({t.c, t.m, static_cast<int>(r)});
    return ModPoly<K>::from_terms(ring, ord, std::move(ts));
}

// Full normal form against a fixed list of module elements (same-
// component divisor search, first match).
template <class K>
ModPoly<K> module_normal_form(const ModPoly<K>& f, const std::vector<ModPoly<K>>& basis) {
    ModPoly<K> work = f;
    std::vector<MTerm<K>> rem;
    while (!work.is_zero()) {
        guard_tick();
        const MTerm<K>& lt = work.lead();
        const ModPoly<K>* red = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const MTerm<K>& gl = g.lead();
            if (gl.comp == lt.comp && gl.m.divides(lt.m)) {
                red = &g;
                break;
            }
        }
        if (red) {
            K q = lt.c / red->lead().c;
            work = work.axpy(-q, lt.m / red->lead().m, *red);
        } else {
            rem.push_back(lt);
            std::vector<MTerm<K>> tail(work.terms().begin() + 1, work.terms().end());
            work = ModPoly<K>::from_sorted(f.ring(), f.order(), std::move(tail));
        }
    }
    return ModPoly<K>::from_sorted(f.ring(), f.order(), std::move(rem));
}

namespace detail {

struct MPair {
    int i, j;
    Monomial lcm;
    int32_t deg;  // true graded degree of the S-pair
};

struct MPairLess {
    const MonomialOrder* ord;
    bool operator()(const MPair& a, const MPair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace detail

// Gröbner basis of the submodule generated by `gens` inside the free
// module with the given twists.  When `track` is non-null, every basis
// element's representation in terms of the inputs is maintained and the
// syzygies arising from zero reductions are appended to *track; these
// generate the full syzygy module of the inputs (Schreyer).  Pair
// pruning uses the Gebauer-Möller chain criteria, whose discarded
// syzygies are module combinations of the kept ones; the product
// criterion is never used here since it drops genuine Koszul
// generators.
template <class K>
std::vector<ModPoly<K>> module_groebner(const std::vector<ModPoly<K>>& gens,
                                        const std::vector<int32_t>& twists,
                                        const MonomialOrder& ord,
                                        std::vector<ModPoly<K>>* track = nullptr) {
    const bool tracking = track != nullptr;
    RingPtr ring;
    for (const auto& g : gens)
        if (g.ring()) {
            ring = g.ring();
            break;
        }
    if (!ring) return {};
    const uint32_t p = ring->characteristic();

    std::vector<ModPoly<K>> basis;
    std::vector<ModPoly<K>> reps;  // in free module over the inputs
    std::vector<std::vector<int>> by_comp;  // lead comp -> basis indices
    std::set<detail::MPair, detail::MPairLess> pairs(detail::MPairLess{&ord});

    auto append = [&](ModPoly<K> val, ModPoly<K> rep) {
        K inv = val.lead().c.inverse();
        val = val.scaled(inv);
        if (tracking) rep = rep.scaled(inv);
        int t = static_cast<int>(basis.size());
        basis.push_back(std::move(val));
        if (tracking) reps.push_back(std::move(rep));
        const MTerm<K>& lt = basis[static_cast<std::size_t>(t)].lead();
        if (by_comp.size() <= static_cast<std::size_t>(lt.comp))
            by_comp.resize(static_cast<std::size_t>(lt.comp) + 1);
        // B criterion: old pairs whose lcm the new lead strictly refines
        for (auto it = pairs.begin(); it != pairs.end();) {
            const MTerm<K>& li = basis[static_cast<std::size_t>(it->i)].lead();
            const MTerm<K>& lj = basis[static_cast<std::size_t>(it->j)].lead();
            if (li.comp == lt.comp && lt.m.divides(it->lcm) &&
                Monomial::lcm(li.m, lt.m) != it->lcm && Monomial::lcm(lj.m, lt.m) != it->lcm)
                it = pairs.erase(it);
            else
                ++it;
        }
        std::vector<detail::MPair> fresh;
        for (int i : by_comp[static_cast<std::size_t>(lt.comp)]) {
            Monomial l = Monomial::lcm(basis[static_cast<std::size_t>(i)].lead().m, lt.m);
            fresh.push_back(detail::MPair{i, t, l,
                                          l.degree() + twists[static_cast<std::size_t>(lt.comp)]});
        }
        // M criterion: drop fresh pairs properly refined by another fresh lcm
        std::vector<char> drop(fresh.size(), 0);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a] || drop[b]) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm)
                    drop[a] = 1;
            }
        // F criterion: one representative per lcm value
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < a; ++b) {
                if (drop[a] || drop[b]) continue;
                if (fresh[a].lcm == fresh[b].lcm) drop[a] = 1;
            }
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) pairs.insert(std::move(fresh[a]));
        by_comp[static_cast<std::size_t>(lt.comp)].push_back(t);
    };

    for (std::size_t i = 0; i < gens.size(); ++i) {
        ModPoly<K> rep;
        if (tracking)
            rep = ModPoly<K>::unit(ring, ord, static_cast<int>(i), scalar_of_int<K>(1, p));
        if (gens[i].is_zero()) {
            if (tracking) track->push_back(std::move(rep));  // zero column: trivial syzygy
            continue;
        }
        append(gens[i], std::move(rep));
    }

    auto find_reducer = [&](const MTerm<K>& lt) -> int {
        if (static_cast<std::size_t>(lt.comp) >= by_comp.size()) return -1;
        for (int g : by_comp[static_cast<std::size_t>(lt.comp)])
            if (basis[static_cast<std::size_t>(g)].lead().m.divides(lt.m)) return g;
        return -1;
    };

    // reduce with representation kept in lockstep
    auto reduce_tracked = [&](ModPoly<K> work, ModPoly<K> rep) {
        std::vector<MTerm<K>> rem;
        while (!work.is_zero()) {
            guard_tick();
            const MTerm<K>& lt = work.lead();
            int red = find_reducer(lt);
            if (red >= 0) {
                K q = lt.c;  // basis monic
                Monomial m = lt.m / basis[static_cast<std::size_t>(red)].lead().m;
                work = work.axpy(-q, m, basis[static_cast<std::size_t>(red)]);
                if (tracking) rep = rep.axpy(-q, m, reps[static_cast<std::size_t>(red)]);
            } else {
                rem.push_back(lt);
                std::vector<MTerm<K>> tail(work.terms().begin() + 1, work.terms().end());
                work = ModPoly<K>::from_sorted(ring, ord, std::move(tail));
            }
        }
        return std::pair<ModPoly<K>, ModPoly<K>>(
            ModPoly<K>::from_sorted(ring, ord, std::move(rem)), std::move(rep));
    };

    while (!pairs.empty()) {
        guard_tick();
        detail::MPair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        const ModPoly<K>& fi = basis[static_cast<std::size_t>(pr.i)];
        const ModPoly<K>& fj = basis[static_cast<std::size_t>(pr.j)];
        Monomial mi = pr.lcm / fi.lead().m;
        Monomial mj = pr.lcm / fj.lead().m;
        ModPoly<K> s = fi.mono_mul(mi).axpy(scalar_of_int<K>(-1, p), mj, fj);
        ModPoly<K> rep;
        if (tracking)
            rep = reps[static_cast<std::size_t>(pr.i)].mono_mul(mi).axpy(
                scalar_of_int<K>(-1, p), mj, reps[static_cast<std::size_t>(pr.j)]);
        auto [r, rrep] = reduce_tracked(std::move(s), std::move(rep));
        if (r.is_zero()) {
            if (tracking && !rrep.is_zero()) track->push_back(std::move(rrep));
            continue;
        }
        append(std::move(r), std::move(rrep));
    }
    return basis;
}

// Canonical reduced module GB (monic, minimal leads, reduced tails,
// sorted ascending by lead term).
template <class K>
std::vector<ModPoly<K>> module_reduced_groebner(const std::vector<ModPoly<K>>& gens,
                                                const std::vector<int32_t>& twists,
                                                const MonomialOrder& ord) {
    std::vector<ModPoly<K>> gb = module_groebner<K>(gens, twists, ord);
    auto less = [&](const ModPoly<K>& a, const ModPoly<K>& b) {
        return a.term_compare(a.lead(), b.lead()) < 0;
    };
    std::sort(gb.begin(), gb.end(), less);
    std::vector<ModPoly<K>> minimal;
    for (auto& g : gb) {
        bool redundant = false;
        for (const auto& h : minimal)
            if (h.lead().comp == g.lead().comp && h.lead().m.divides(g.lead().m)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(g));
    }
    std::vector<ModPoly<K>> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<ModPoly<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        out.push_back(module_normal_form(minimal[i], others).monic());
    }
    std::sort(out.begin(), out.end(), less);
    return out;
}

// Generators of the syzygy module of `cols` (in the free module over
// the columns themselves).  Zero columns yield unit syzygies.
template <class K>
std::vector<ModPoly<K>> syzygies(const std::vector<ModPoly<K>>& cols,
                                 const std::vector<int32_t>& twists, const MonomialOrder& ord) {
    std::vector<ModPoly<K>> syz;
    module_groebner<K>(cols, twists, ord, &syz);
    return syz;
}

}  // namespace unprj
