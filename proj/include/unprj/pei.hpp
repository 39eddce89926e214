#pragma once

#include <map>
#include <optional>

#include "unprj/homalg.hpp"
#include "unprj/rng.hpp"

namespace unprj {

// Projection of X from a point z: ambient ring S with the distinguished
// coordinate first, the subring R, the ideal moved so that z becomes
// (1:0:...:0), and memoized partial elimination data.
template <class K>
class ProjectionContext {
  public:
    RingPtr S;               // distinguished variable is index 0
    RingPtr R;               // S without the distinguished variable
    Ideal<K> IX;             // normalized ideal
    std::vector<K> z_given;  // original coordinates of z
    bool z_on_X = false;

    const MonomialOrder& elim_order() const { return elim_; }

    // reduced GB under the x0-elimination order; the x0-degrees of its
    // elements drive everything below
    const std::vector<Poly<K>>& elim_gb() const { return IX.groebner(elim_); }

    int candidate_stab_index() const {
        int c = 0;
        for (const auto& g : elim_gb()) c = std::max(c, static_cast<int>(g.degree_in(0)));
        return c;
    }

    MonomialOrder elim_;
    mutable std::mutex mu;
    mutable std::map<int, Ideal<K>> K_cache;
    mutable std::optional<int> stab_index;
};

template <class K>
using ContextPtr = std::shared_ptr<ProjectionContext<K>>;

// Normalizes z to (1:0:...:0) by a variable swap plus the translation
// x_i -> x_i + z_i*x_0 and returns the ready context.
template <class K>
ContextPtr<K> make_context(const Ideal<K>& I, std::vector<K> z) {
    const RingPtr& S = I.ring();
    const uint32_t p = S->characteristic();
    UNPRJ_REQUIRE(z.size() == S->nvars(), "make_context: point has wrong coordinate count");
    std::size_t pivot = S->nvars();
    for (std::size_t i = 0; i < z.size(); ++i)
        if (!z[i].is_zero()) {
            pivot = i;
            break;
        }
    UNPRJ_REQUIRE(pivot < S->nvars(), "make_context: the origin is not a projective point");

    auto ctx = std::make_shared<ProjectionContext<K>>();
    ctx->S = S;
    ctx->z_given = z;
    ctx->elim_ = elimination_order(S->nvars(), {0});

    // swap pivot to slot 0, then rescale so z_0 = 1
    std::vector<Poly<K>> images;
    for (std::size_t i = 0; i < S->nvars(); ++i) {
        std::size_t to = i == 0 ? pivot : (i == pivot ? 0 : i);
        images.push_back(Poly<K>::variable(S, to));
    }
    RingMap<K> swap_map(S, S, std::move(images));
    std::swap(z[0], z[pivot]);
    K inv = z[0].inverse();
    for (auto& c : z) c = c * inv;

    // translation sending e_0 to (the swapped) z
    std::vector<Poly<K>> shift;
    shift.push_back(Poly<K>::variable(S, 0));
    for (std::size_t i = 1; i < S->nvars(); ++i) {
        Poly<K> img = Poly<K>::variable(S, i);
        if (!z[i].is_zero())
            img = img + Poly<K>::variable(S, 0).scaled(z[i]);
        shift.push_back(std::move(img));
    }
    RingMap<K> shift_map(S, S, std::move(shift));

    bool on_x = true;
    std::vector<Poly<K>> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) {
        if (!g.eval(ctx->z_given).is_zero()) on_x = false;
        gens.push_back(shift_map.apply(swap_map.apply(g)));
    }
    ctx->z_on_X = on_x;
    ctx->IX = Ideal<K>(S, std::move(gens));
    ctx->R = subring_without(S, {0});
    if (on_x) {
        std::vector<K> e0(S->nvars(), scalar_of_int<K>(0, p));
        e0[0] = scalar_of_int<K>(1, p);
        for (const auto& g : ctx->IX.gens())
            UNPRJ_CHECK(g.eval(e0).is_zero(), "make_context: normalization broke the point");
    }
    return ctx;
}

// K_i(X,z): the ideal of x0-top coefficients of elimination-GB elements
// of x0-degree <= i, landed in R.  Certified on demand against the
// definition by sampled membership (certify_partial_elimination).
template <class K>
const Ideal<K>& partial_elimination_ideal(const ContextPtr<K>& ctx, int i) {
    UNPRJ_REQUIRE(i >= 0, "partial elimination index must be nonnegative");
    {
        std::lock_guard<std::mutex> lock(ctx->mu);
        auto it = ctx->K_cache.find(i);
        if (it != ctx->K_cache.end()) return it->second;
    }
    std::vector<Poly<K>> gens;
    for (const auto& g : ctx->elim_gb()) {
        int32_t d = g.degree_in(0);
        if (d <= i)
            gens.push_back(transport(g.coefficient_of_power(0, d), ctx->R));
    }
    Ideal<K> Ki(ctx->R, std::move(gens));
    std::lock_guard<std::mutex> lock(ctx->mu);
    auto [it, fresh] = ctx->K_cache.emplace(i, std::move(Ki));
    return it->second;
}

// Sampled certification straight from the definition: random elements
// f in I_X with deg_x0 f <= i have their x0^i coefficient inside K_i.
template <class K>
bool certify_partial_elimination(const ContextPtr<K>& ctx, int i, std::mt19937_64& rng,
                                 int samples = 8) {
    const Ideal<K>& Ki = partial_elimination_ideal(ctx, i);
    const uint32_t p = ctx->S->characteristic();
    std::uniform_int_distribution<long long> dc(p ? 0 : -9, p ? static_cast<long long>(p) - 1 : 9);
    for (int s = 0; s < samples; ++s) {
        Poly<K> f = Poly<K>::zero(ctx->S, ctx->elim_order());
        for (const auto& g : ctx->elim_gb()) {
            int32_t d = g.degree_in(0);
            if (d > i) continue;
            // multiplier free of x0, plus an admissible power of x0
            std::uniform_int_distribution<int32_t> dx(0, i - d);
            Monomial mult = random_form<K>(ctx->R, 1 + (s % 2), rng).lead_monomial();
            std::vector<int32_t> e(ctx->S->nvars(), 0);
            e[0] = dx(rng);
            for (std::size_t v = 1; v < ctx->S->nvars(); ++v) e[v] = mult[v - 1];
            f = f.axpy(scalar_of_int<K>(dc(rng), p), Monomial(e), g);
        }
        if (f.is_zero()) continue;
        if (f.degree_in(0) > i) return false;  // sampler bug
        Poly<K> coeff = transport(f.coefficient_of_power(0, i), ctx->R);
        if (!Ki.contains(coeff)) return false;
    }
    return true;
}

template <class K>
struct StabilizationResult {
    int index = 0;                 // smallest i with K_i = K_infinity
    Ideal<K> K_inf;
    bool z_on_X = false;
    long long pc_degree = 0;       // degree of the projectivized tangent cone
    int pc_dim = -1;               // its projective dimension
};

// Finds the smallest verified stabilization index.  The candidate from
// the elimination GB is certified by comparing reduced bases up to
// candidate+1 and by sampled definition checks; when z lies on X the
// tangent-cone dimension must drop by exactly one.
template <class K>
StabilizationResult<K> stabilization(const ContextPtr<K>& ctx) {
    StabilizationResult<K> out;
    out.z_on_X = ctx->z_on_X;
    int cand = ctx->candidate_stab_index();
    const Ideal<K>& Ktop = partial_elimination_ideal(ctx, cand);
    const Ideal<K>& Knext = partial_elimination_ideal(ctx, cand + 1);
    UNPRJ_CHECK(ideal_equal(Ktop, Knext) && ideal_contains(Knext, Ktop) &&
                    ideal_contains(Ktop, Knext),
                "stabilization: candidate index not stable");
    int idx = cand;
    while (idx > 0 && ideal_equal(partial_elimination_ideal(ctx, idx - 1), Ktop)) --idx;
    out.index = idx;
    out.K_inf = Ktop;
    {
        std::lock_guard<std::mutex> lock(ctx->mu);
        ctx->stab_index = idx;
    }
    if (ctx->z_on_X) {
        const HilbertData& hk = Ktop.hilbert();
        const HilbertData& hx = ctx->IX.hilbert();
        UNPRJ_CHECK(hk.krull_dim == hx.krull_dim - 1,
                    "stabilization: tangent cone dimension must drop by one");
        out.pc_degree = hk.degree;
        out.pc_dim = hk.projective_dim();
    } else {
        UNPRJ_CHECK(Ktop.is_unit_ideal(), "stabilization: z off X forces K_inf = R");
    }
    return out;
}

// zero-module marker plus presentation for M_i(X,z) = (K_i/K_{i-1})(-i)
template <class K>
struct PartialEliminationModule {
    bool zero = false;
    SubquotientPresentation<K> pres;
};

template <class K>
PartialEliminationModule<K> partial_elimination_module(const ContextPtr<K>& ctx, int i) {
    PartialEliminationModule<K> out;
    if (i == 0) {
        out.pres = subquotient_module(partial_elimination_ideal(ctx, 0),
                                      Ideal<K>::zero(ctx->R), 0);
        out.zero = out.pres.gens.empty();
        return out;
    }
    const Ideal<K>& top = partial_elimination_ideal(ctx, i);
    const Ideal<K>& bottom = partial_elimination_ideal(ctx, i - 1);
    if (ideal_equal(top, bottom)) {
        out.zero = true;
        return out;
    }
    out.pres = subquotient_module(top, bottom, i);
    return out;
}

template <class K>
BettiTable betti_of_pei_module(const ContextPtr<K>& ctx, int i) {
    PartialEliminationModule<K> m = partial_elimination_module(ctx, i);
    if (m.zero) return BettiTable{};
    return betti_of_presented(ctx->R, m.pres.gen_twists, m.pres.relations);
}

template <class K>
struct ProjectionInvariants {
    int projection_degree = 0;
    long long deg_X = 0;
    long long deg_Xz = 0;
    long long deg_pc = 0;  // 0 when z off X
    bool formula_holds = false;
};

// deg(pi_z|_X) via the supports Z_i = X_z test (dimension equality plus
// the chain containment), then the degree formula
// deg X = deg(pi) deg X_z + [z on X] deg PC_z X, checked exactly.
template <class K>
ProjectionInvariants<K> projection_invariants(const ContextPtr<K>& ctx) {
    ProjectionInvariants<K> out;
    const HilbertData& hx = ctx->IX.hilbert();
    const Ideal<K>& K0 = partial_elimination_ideal(ctx, 0);
    const HilbertData& h0 = K0.hilbert();
    UNPRJ_REQUIRE(h0.krull_dim == hx.krull_dim,
                  "projection not generically finite (image dimension dropped)");
    out.deg_X = hx.degree;
    out.deg_Xz = h0.degree;
    int cand = ctx->candidate_stab_index();
    int i = 1;
    for (; i <= cand + 1; ++i) {
        const Ideal<K>& Ki = partial_elimination_ideal(ctx, i);
        if (Ki.is_unit_ideal()) break;
        const HilbertData& hi = Ki.hilbert();
        if (hi.krull_dim != h0.krull_dim) break;
        UNPRJ_CHECK(hi.degree >= h0.degree,
                    "projection: contained scheme of equal dimension with smaller degree");
    }
    out.projection_degree = i;  // max{ i : Z_i = X_z } + 1 = first failing i
    if (ctx->z_on_X) out.deg_pc = stabilization(ctx).pc_degree;
    out.formula_holds =
        out.deg_X == static_cast<long long>(out.projection_degree) * out.deg_Xz + out.deg_pc;
    return out;
}

// The scheme cut by K_1/K_0 on X_z (birational projections only).
template <class K>
Ideal<K> exceptional_fundamental_ideal(const ContextPtr<K>& ctx) {
    ProjectionInvariants<K> inv = projection_invariants(ctx);
    UNPRJ_REQUIRE(inv.projection_degree == 1,
                  "exceptional-fundamental scheme needs a birational projection");
    return partial_elimination_ideal(ctx, 1);
}

enum class DominanceMode { Regularity, ProjectiveDimension };

struct DominanceReport {
    bool dominates = false;
    int value = 0;  // reg M_i resp. pd M_i when dominating
};

// Betti-table comparisons for the dominance conditions; zero modules
// compare as trivially dominated.
template <class K>
DominanceReport dominance(const ContextPtr<K>& ctx, int i, DominanceMode mode) {
    int stab;
    {
        StabilizationResult<K> s = stabilization(ctx);
        stab = s.index;
    }
    constexpr int kNeg = -1000000;
    std::map<int, BettiTable> tables;
    for (int j = 0; j <= std::max(stab, i); ++j) tables[j] = betti_of_pei_module(ctx, j);
    auto reg = [&](int j) { return tables[j].empty() ? kNeg : tables[j].regularity(); };
    auto pd = [&](int j) { return tables[j].empty() ? kNeg : tables[j].projective_dimension(); };
    DominanceReport out;
    if (tables[i].empty()) return out;
    bool ok = true;
    for (int j = 0; j <= std::max(stab, i); ++j) {
        if (j == i) continue;
        if (mode == DominanceMode::Regularity) {
            if (j < i)
                ok = ok && reg(i) >= reg(j);
            else
                ok = ok && (tables[j].empty() || reg(i) >= reg(j) + 2);
        } else {
            if (j < i)
                ok = ok && (tables[j].empty() || pd(i) >= pd(j) + 2);
            else
                ok = ok && pd(i) >= pd(j);
        }
    }
    out.dominates = ok;
    if (ok) out.value = mode == DominanceMode::Regularity ? reg(i) : pd(i);
    return out;
}

// Exact rational-function identity sum_i HS(M_i) = (1-t) HS(I_X),
// compared at the level of integer numerators.
template <class K>
bool pei_hilbert_additivity_holds(const ContextPtr<K>& ctx) {
    int stab = stabilization(ctx).index;
    ZPoly lhs;  // sum of t^i (N_{i-1} - N_i), N_{-1} = 1
    ZPoly prev{1};
    for (int i = 0; i <= stab; ++i) {
        const ZPoly& ni = partial_elimination_ideal(ctx, i).hilbert().numerator;
        lhs = zp_add(lhs, zp_shift(zp_sub(prev, ni), static_cast<std::size_t>(i)));
        prev = ni;
    }
    ZPoly rhs = zp_sub(ZPoly{1}, ctx->IX.hilbert().numerator);
    return lhs == rhs;
}

}  // namespace unprj
