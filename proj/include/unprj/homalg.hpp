#pragma once

#include <optional>

#include "unprj/idealops.hpp"
#include "unprj/resolution.hpp"

namespace unprj {

// Minimal free resolution of S/I with built-in certification: composable
// differentials, graded entries, no unit entries, length within the
// variable count.
template <class K>
Complex<K> resolve_quotient(const Ideal<K>& I) {
    const RingPtr& ring = I.ring();
    Complex<K> cx = resolve_quotient_from_gens<K>(ring, ring->order(), I.gens());
    UNPRJ_CHECK(cx.length() <= ring->nvars() + 1, "resolution: length exceeds variable count");
    UNPRJ_CHECK(complex_is_graded(cx), "resolution: entry with wrong degree");
    UNPRJ_CHECK(complex_is_minimal(cx), "resolution: constant entry survived pruning");
    UNPRJ_CHECK(complex_is_exactly_composable(cx), "resolution: d o d != 0");
    return cx;
}

namespace detail {
template <class K>
const BettiTable& cached_quotient_betti(const Ideal<K>& I);
}

// Betti table of S/I (level 0 is S itself).
template <class K>
BettiTable betti_of_quotient(const Ideal<K>& I) {
    return detail::cached_quotient_betti(I);
}

// Betti table of the ideal viewed as a module.
template <class K>
BettiTable betti_of_ideal(const Ideal<K>& I) {
    return ideal_table_from_quotient(detail::cached_quotient_betti(I));
}

template <class K>
int reg_of_ideal(const Ideal<K>& I) {
    BettiTable b = betti_of_ideal(I);
    UNPRJ_REQUIRE(!b.empty(), "reg: zero ideal has no regularity");
    return b.regularity();
}

template <class K>
int pd_of_quotient(const Ideal<K>& I) {
    return detail::cached_quotient_betti(I).projective_dimension();
}

// Auslander-Buchsbaum: depth = #vars - pd over the polynomial ring.
template <class K>
int depth_of_quotient(const Ideal<K>& I) {
    return static_cast<int>(I.ring()->nvars()) - pd_of_quotient(I);
}

// Exact integer identity tying the resolution to the Hilbert series:
// sum_i (-1)^i sum_j beta_{i,j}(S/I) t^{i+j} equals the numerator of
// HS(S/I) over (1-t)^n.
template <class K>
bool euler_identity_holds(const Ideal<K>& I) {
    auto gf = betti_of_quotient(I).alternating_gf();
    const ZPoly& num = I.hilbert().numerator;
    for (std::size_t e = 0; e < num.size(); ++e) {
        long long c = num[e];
        auto it = gf.find(static_cast<int>(e));
        long long g = it == gf.end() ? 0 : it->second;
        if (c != g) return false;
    }
    for (const auto& [e, g] : gf)
        if (e < 0 || e >= static_cast<int>(num.size())) {
            if (g != 0) return false;
        }
    return true;
}

// Presentation of the subquotient (top/bottom)(-shift) as generators
// (the reduced GB of `top`) plus relation columns obtained from one
// syzygy call on [top gens | bottom gens].
template <class K>
struct SubquotientPresentation {
    std::vector<Poly<K>> gens;          // representatives in the ring
    std::vector<int32_t> gen_twists;    // degrees after the twist shift
    std::vector<ModPoly<K>> relations;  // columns over the generators
};

template <class K>
SubquotientPresentation<K> subquotient_module(const Ideal<K>& top, const Ideal<K>& bottom,
                                              int twist_shift) {
    UNPRJ_CHECK(same_ring(top.ring(), bottom.ring()), "subquotient: ring mismatch");
    const RingPtr& ring = top.ring();
    const MonomialOrder& ord = ring->order();
    SubquotientPresentation<K> out;
    out.gens = top.groebner(ord);
    std::vector<ModPoly<K>> cols;
    auto push = [&](const Poly<K>& g) {
        std::vector<MTerm<K>> ts;
        for (const auto& t : g.terms()) ts.push_back({t.c, t.m, 0});
        cols.push_back(ModPoly<K>::from_terms(ring, ord, std::move(ts)));
    };
    for (const auto& g : out.gens) push(g);
    std::vector<Poly<K>> lower = bottom.groebner(ord);
    for (const auto& g : lower) push(g);
    std::vector<ModPoly<K>> syz = syzygies(cols, {0}, ord);
    const int a = static_cast<int>(out.gens.size());
    for (const auto& s : syz) {
        std::vector<MTerm<K>> kept;
        for (const auto& t : s.terms())
            if (t.comp < a) kept.push_back(t);
        if (!kept.empty())
            out.relations.push_back(ModPoly<K>::from_sorted(ring, ord, std::move(kept)));
    }
    for (const auto& g : out.gens) out.gen_twists.push_back(g.degree() + twist_shift);
    return out;
}

// Betti table of a presented module, with certification.
template <class K>
BettiTable betti_of_presented(const RingPtr& ring, const std::vector<int32_t>& gen_twists,
                              const std::vector<ModPoly<K>>& relations) {
    Complex<K> cx = resolve_presented<K>(ring, ring->order(), gen_twists, relations);
    UNPRJ_CHECK(complex_is_graded(cx), "module resolution: entry with wrong degree");
    UNPRJ_CHECK(complex_is_minimal(cx), "module resolution: constant entry survived");
    UNPRJ_CHECK(complex_is_exactly_composable(cx), "module resolution: d o d != 0");
    return betti_from_complex(cx);
}

namespace detail {

template <class K>
const BettiTable& cached_quotient_betti(const Ideal<K>& I) {
    if (auto hit = I.betti_cache_get()) return *hit;
    Complex<K> cx = resolve_quotient(I);
    return I.betti_cache_put(std::make_shared<const BettiTable>(betti_from_complex(cx)));
}

}  // namespace detail

}  // namespace unprj
