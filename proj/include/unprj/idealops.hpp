#pragma once

#include <vector>

#include "unprj/ideal.hpp"
#include "unprj/modpoly.hpp"

namespace unprj {

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
    UNPRJ_CHECK(same_ring(a.ring(), b.ring()), "ideal_sum: ring mismatch");
    std::vector<Poly<K>> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal<K>(a.ring(), std::move(gens));
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
    UNPRJ_CHECK(same_ring(a.ring(), b.ring()), "ideal_product: ring mismatch");
    std::vector<Poly<K>> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal<K>(a.ring(), std::move(gens));
}

template <class K>
Ideal<K> ideal_power(const Ideal<K>& a, int k) {
    UNPRJ_REQUIRE(k >= 0, "ideal_power: negative exponent");
    const RingPtr& ring = a.ring();
    if (k == 0)
        return Ideal<K>(ring, {Poly<K>::constant(ring, scalar_of_int<K>(1, ring->characteristic()))});
    Ideal<K> acc = a;
    for (int i = 1; i < k; ++i) acc = ideal_product(acc, a);
    return acc;
}

// Elimination: generators of I ∩ k[vars not in `vars`], computed from a
// block-order GB.  Returned in the same ambient ring; restrict_scalars
// moves it to the honest subring.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<int>& vars) {
    const RingPtr& ring = I.ring();
    MonomialOrder elim = elimination_order(ring->nvars(), vars);
    const auto& gb = I.groebner(elim);
    std::vector<char> dropped(ring->nvars(), 0);
    for (int v : vars) dropped[static_cast<std::size_t>(v)] = 1;
    std::vector<Poly<K>> kept;
    for (const auto& g : gb) {
        bool clean = true;
        for (const auto& t : g.terms()) {
            for (std::size_t v = 0; v < ring->nvars() && clean; ++v)
                if (dropped[v] && t.m[v] > 0) clean = false;
            if (!clean) break;
        }
        if (clean) kept.push_back(g.resorted(ring->order()));
    }
    return Ideal<K>(ring, std::move(kept));
}

// Move an ideal whose generators avoid certain variables into the ring
// without them.
template <class K>
Ideal<K> restrict_scalars(const Ideal<K>& I, const RingPtr& subring) {
    std::vector<Poly<K>> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(transport(g, subring));
    return Ideal<K>(subring, std::move(gens));
}

template <class K>
Ideal<K> extend_scalars(const Ideal<K>& I, const RingPtr& superring) {
    std::vector<Poly<K>> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(transport(g, superring));
    return Ideal<K>(superring, std::move(gens));
}

// Intersection via one tag variable: I ∩ J = (t·I + (1-t)·J) ∩ R.
template <class K>
Ideal<K> ideal_intersect(const Ideal<K>& a, const Ideal<K>& b) {
    UNPRJ_CHECK(same_ring(a.ring(), b.ring()), "ideal_intersect: ring mismatch");
    const RingPtr& ring = a.ring();
    std::string tag = "tag_";
    while (ring->var_index(tag) >= 0) tag += "_";
    RingPtr ext = ring_with_extra_vars(ring, {tag});
    std::size_t ti = ext->nvars() - 1;
    Poly<K> t = Poly<K>::variable(ext, ti);
    Poly<K> one = Poly<K>::constant(ext, scalar_of_int<K>(1, ext->characteristic()));
    std::vector<Poly<K>> gens;
    for (const auto& f : a.gens()) gens.push_back(t * transport(f, ext));
    for (const auto& g : b.gens()) gens.push_back((one - t) * transport(g, ext));
    Ideal<K> big(ext, std::move(gens));
    Ideal<K> cut = eliminate(big, {static_cast<int>(ti)});
    std::vector<Poly<K>> back;
    for (const auto& g : cut.gens()) {
        UNPRJ_CHECK(g.degree_in(ti) == 0, "ideal_intersect: tag variable leaked");
        back.push_back(transport(g, ring));
    }
    return Ideal<K>(ring, std::move(back));
}

// Principal colon (I : f) via syzygies of [f | gens I]: the first
// coordinates of the syzygy module are exactly the colon ideal.
template <class K>
Ideal<K> ideal_colon(const Ideal<K>& I, const Poly<K>& f) {
    UNPRJ_REQUIRE(!f.is_zero(), "ideal_colon: zero denominator");
    const RingPtr& ring = I.ring();
    const MonomialOrder& ord = ring->order();
    std::vector<ModPoly<K>> cols;
    auto push = [&](const Poly<K>& g) {
        std::vector<MTerm<K>> ts;
        for (const auto& t : g.terms()) ts.push_back({t.c, t.m, 0});
        cols.push_back(ModPoly<K>::from_terms(ring, ord, std::move(ts)));
    };
    Poly<K> fr = f.order() == ord ? f : f.resorted(ord);
    push(fr);
    for (const auto& g : I.gens()) push(g.order() == ord ? g : g.resorted(ord));
    std::vector<int32_t> tw{0};
    std::vector<ModPoly<K>> syz = syzygies(cols, tw, ord);
    std::vector<Poly<K>> gens = I.gens();  // I ⊆ (I : f)
    for (const auto& s : syz) {
        Poly<K> c0 = s.component(0);
        if (!c0.is_zero()) gens.push_back(std::move(c0));
    }
    return Ideal<K>(ring, std::move(gens));
}

// (I : J) over all generators of J.
template <class K>
Ideal<K> ideal_colon(const Ideal<K>& I, const Ideal<K>& J) {
    bool first = true;
    Ideal<K> acc;
    for (const auto& f : J.gens()) {
        if (f.is_zero()) continue;
        Ideal<K> q = ideal_colon(I, f);
        acc = first ? q : ideal_intersect(acc, q);
        first = false;
    }
    if (first) {
        // J = (0): colon is the unit ideal
        const RingPtr& ring = I.ring();
        return Ideal<K>(ring,
                        {Poly<K>::constant(ring, scalar_of_int<K>(1, ring->characteristic()))});
    }
    return acc;
}

// Saturation (I : f^∞) by iterated colon until the chain stabilizes;
// the cap converts a nonterminating chain (an engine bug) into a loud
// abort.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Poly<K>& f) {
    UNPRJ_REQUIRE(!f.is_zero(), "saturate: zero element");
    int32_t maxdeg = 1;
    for (const auto& g : I.gens()) maxdeg = std::max(maxdeg, g.degree());
    maxdeg = std::max(maxdeg, f.degree());
    const int iter_cap = 2 * maxdeg * static_cast<int>(I.ring()->nvars()) + 4;
    Ideal<K> cur = I;
    for (int it = 0; it < iter_cap; ++it) {
        Ideal<K> next = ideal_colon(cur, f);
        if (ideal_equal(cur, next)) return cur;
        cur = next;
    }
    throw resource_limit_error("saturate: colon chain failed to stabilize");
}

// Kernel of a graded ring map via the graph ideal: in target ⊗ source
// tag variables, eliminate the target block from (tags - images).
template <class K>
Ideal<K> kernel(const RingMap<K>& phi, const Ideal<K>& target_modulo = {}) {
    const RingPtr& src = phi.source();
    const RingPtr& tgt = phi.target();
    std::vector<std::string> names = tgt->vars();
    std::vector<std::string> tags = src->vars();
    for (auto& s : tags) {
        while (std::find(names.begin(), names.end(), s) != names.end()) s += "_s";
        names.push_back(s);
    }
    RingPtr big = PolyRing::make(names, tgt->characteristic(), tgt->order());
    std::vector<Poly<K>> gens;
    for (std::size_t i = 0; i < src->nvars(); ++i) {
        Poly<K> tagvar = Poly<K>::variable(big, tgt->nvars() + i);
        gens.push_back(tagvar - transport(phi.images()[i], big));
    }
    if (target_modulo.valid())
        for (const auto& g : target_modulo.gens()) gens.push_back(transport(g, big));
    std::vector<int> front;
    for (std::size_t i = 0; i < tgt->nvars(); ++i) front.push_back(static_cast<int>(i));
    Ideal<K> graph(big, std::move(gens));
    Ideal<K> cut = eliminate(graph, front);
    // rename tags back to source variables
    std::vector<Poly<K>> out;
    for (const auto& g : cut.gens()) {
        std::vector<Term<K>> ts;
        for (const auto& t : g.terms()) {
            std::vector<int32_t> e(src->nvars(), 0);
            for (std::size_t i = 0; i < src->nvars(); ++i) e[i] = t.m[tgt->nvars() + i];
            ts.push_back({t.c, Monomial(std::move(e))});
        }
        out.push_back(Poly<K>::from_terms(src, src->order(), std::move(ts)));
    }
    return Ideal<K>(src, std::move(out));
}

}  // namespace unprj
