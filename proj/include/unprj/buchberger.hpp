#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "unprj/guard.hpp"
#include "unprj/poly.hpp"

namespace unprj {

struct GBOptions {
    int32_t degree_cap = 0;  // homogeneous inputs only: ignore S-pairs above this degree
};

// Full normal form of f against `basis`: no term of the remainder is
// divisible by a basis lead.  Reducer choice (first listed divisor) is
// deterministic.
template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& basis) {
    Poly<K> work = f;
    std::vector<Term<K>> rem;
    while (!work.is_zero()) {
        guard_tick();
        const Term<K>& lt = work.lead();
        const Poly<K>* red = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.lead_monomial().divides(lt.m)) {
                red = &g;
                break;
            }
        }
        if (red) {
            K q = lt.c / red->lead_coeff();
            work = work.axpy(-q, lt.m / red->lead_monomial(), *red);
        } else {
            rem.push_back(lt);
            std::vector<Term<K>> tail(work.terms().begin() + 1, work.terms().end());
            work = Poly<K>::from_sorted(f.ring(), f.order(), std::move(tail));
        }
    }
    return Poly<K>::from_sorted(f.ring(), f.order(), std::move(rem));
}

namespace detail {

struct SPair {
    int i, j;
    Monomial lcm;
    int32_t deg;
};

// Deterministic pair ranking: degree, then lcm under the order, then
// generator indices.
struct SPairLess {
    const MonomialOrder* ord;
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

using PairSet = std::set<SPair, SPairLess>;

// Gebauer-Moller update of the pair set for newly appended element t.
template <class K>
void update_pairs(PairSet& pairs, const std::vector<Poly<K>>& gb, int t,
                  bool use_product_criterion) {
    const Monomial& lt = gb[static_cast<std::size_t>(t)].lead_monomial();
    std::vector<SPair> fresh;
    fresh.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        if (gb[static_cast<std::size_t>(i)].is_zero()) continue;
        Monomial l = Monomial::lcm(gb[static_cast<std::size_t>(i)].lead_monomial(), lt);
        fresh.push_back(SPair{i, t, l, l.degree()});
    }
    // B criterion: drop old pairs strictly refined by the new lead
    for (auto it = pairs.begin(); it != pairs.end();) {
        const Monomial& li = gb[static_cast<std::size_t>(it->i)].lead_monomial();
        const Monomial& lj = gb[static_cast<std::size_t>(it->j)].lead_monomial();
        if (lt.divides(it->lcm) && Monomial::lcm(li, lt) != it->lcm &&
            Monomial::lcm(lj, lt) != it->lcm)
            it = pairs.erase(it);
        else
            ++it;
    }
    // M criterion: drop fresh pairs whose lcm another fresh lcm properly divides
    std::vector<char> drop(fresh.size(), 0);
    for (std::size_t a = 0; a < fresh.size(); ++a)
        for (std::size_t b = 0; b < fresh.size(); ++b) {
            if (a == b || drop[a] || drop[b]) continue;
            if (fresh[b].lcm.divides(fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm) drop[a] = 1;
        }
    // F criterion: one representative per lcm
    for (std::size_t a = 0; a < fresh.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
            if (drop[a] || drop[b]) continue;
            if (fresh[a].lcm == fresh[b].lcm) drop[a] = 1;
        }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (drop[a]) continue;
        const Monomial& li = gb[static_cast<std::size_t>(fresh[a].i)].lead_monomial();
        if (use_product_criterion && Monomial::coprime(li, lt)) continue;
        pairs.insert(std::move(fresh[a]));
    }
}

}  // namespace detail

// Buchberger with Gebauer-Moller pair elimination and normal (degree)
// selection.  Returns a non-reduced basis; reduced_groebner yields the
// canonical object.
template <class K>
std::vector<Poly<K>> buchberger(const std::vector<Poly<K>>& gens, const MonomialOrder& ord,
                                const GBOptions& opt = {}) {
    std::vector<Poly<K>> gb;
    detail::PairSet pairs(detail::SPairLess{&ord});
    for (const auto& g0 : gens) {
        Poly<K> g = g0.order() == ord ? g0 : g0.resorted(ord);
        if (g.is_zero()) continue;
        gb.push_back(g.monic());
        detail::update_pairs(pairs, gb, static_cast<int>(gb.size()) - 1, true);
    }
    while (!pairs.empty()) {
        guard_tick();
        detail::SPair p = *pairs.begin();
        pairs.erase(pairs.begin());
        if (opt.degree_cap && p.deg > opt.degree_cap) continue;
        const Poly<K>& fi = gb[static_cast<std::size_t>(p.i)];
        const Poly<K>& fj = gb[static_cast<std::size_t>(p.j)];
        Poly<K> s = fi.mono_mul(p.lcm / fi.lead_monomial())
                        .axpy(-scalar_of_int<K>(1, fi.ring()->characteristic()),
                              p.lcm / fj.lead_monomial(), fj);
        Poly<K> r = normal_form(s, gb);
        if (r.is_zero()) continue;
        gb.push_back(r.monic());
        detail::update_pairs(pairs, gb, static_cast<int>(gb.size()) - 1, true);
    }
    return gb;
}

// Canonical reduced basis: monic, no lead divides another, tails fully
// reduced, sorted ascending by lead.  Unique for (ideal, order).
template <class K>
std::vector<Poly<K>> reduced_groebner(const std::vector<Poly<K>>& gens, const MonomialOrder& ord,
                                      const GBOptions& opt = {}) {
    std::vector<Poly<K>> gb = buchberger(gens, ord, opt);
    std::sort(gb.begin(), gb.end(), [&](const Poly<K>& a, const Poly<K>& b) {
        return ord.compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    std::vector<Poly<K>> minimal;
    for (auto& g : gb) {
        bool redundant = false;
        for (const auto& h : minimal)
            if (h.lead_monomial().divides(g.lead_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(g));
    }
    std::vector<Poly<K>> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<K>> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        out.push_back(normal_form(minimal[i], others).monic());
    }
    std::sort(out.begin(), out.end(), [&](const Poly<K>& a, const Poly<K>& b) {
        return ord.compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    return out;
}

}  // namespace unprj
