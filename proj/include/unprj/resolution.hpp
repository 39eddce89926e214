#pragma once

#include <vector>

#include "unprj/betti.hpp"
#include "unprj/modpoly.hpp"

namespace unprj {

// Chain complex of free modules ... -> F_1 -> F_0 (-> coker), stored as
// matrices of polynomials.  mats[l] is the differential F_{l+1} -> F_l
// (rows indexed by F_l, columns by F_{l+1}).
template <class K>
struct Complex {
    RingPtr ring;
    MonomialOrder ord;
    std::vector<std::vector<int32_t>> twists;              // per level
    std::vector<std::vector<std::vector<Poly<K>>>> mats;   // mats[l][row][col]

    std::size_t length() const { return mats.size(); }
    std::size_t rank(std::size_t level) const { return twists[level].size(); }
};

namespace detail {

template <class K>
std::vector<std::vector<Poly<K>>> columns_to_matrix(const std::vector<ModPoly<K>>& cols,
                                                    std::size_t rows, const RingPtr& ring,
                                                    const MonomialOrder& ord) {
    std::vector<std::vector<Poly<K>>> m(rows,
                                        std::vector<Poly<K>>(cols.size(), Poly<K>::zero(ring, ord)));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) m[r][c] = cols[c].component(static_cast<int>(r));
    return m;
}

template <class K>
std::vector<ModPoly<K>> matrix_to_columns(const std::vector<std::vector<Poly<K>>>& m,
                                          std::size_t cols, const RingPtr& ring,
                                          const MonomialOrder& ord) {
    std::size_t rows = m.size();
    std::vector<ModPoly<K>> out;
    out.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        std::vector<MTerm<K>> ts;
        for (std::size_t r = 0; r < rows; ++r)
            for (const auto& t : m[r][c].terms()) ts.push_back({t.c, t.m, static_cast<int>(r)});
        out.push_back(ModPoly<K>::from_terms(ring, ord, std::move(ts)));
    }
    return out;
}

template <class K>
void erase_row(std::vector<std::vector<Poly<K>>>& m, std::size_t r) {
    m.erase(m.begin() + static_cast<std::ptrdiff_t>(r));
}
template <class K>
void erase_col(std::vector<std::vector<Poly<K>>>& m, std::size_t c) {
    for (auto& row : m) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
}

}  // namespace detail

// Removes every constant (degree-0) entry by splitting off the
// contractible summand it spans: the Schur complement on its matrix,
// plus deletion of the paired row/column in the neighbours.  Iterates
// to a fixpoint, so the resulting complex is minimal.
template <class K>
void minimalize(Complex<K>& cx) {
    const uint32_t p = cx.ring->characteristic();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t l = 0; l < cx.mats.size() && !changed; ++l) {
            auto& A = cx.mats[l];
            std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
            for (std::size_t r = 0; r < rows && !changed; ++r) {
                for (std::size_t c = 0; c < cols && !changed; ++c) {
                    const Poly<K>& e = A[r][c];
                    if (e.is_zero() || !e.is_constant()) continue;
                    guard_tick();
                    K u_inv = e.lead_coeff().inverse();
                    // Schur complement
                    for (std::size_t r2 = 0; r2 < rows; ++r2) {
                        if (r2 == r || A[r2][c].is_zero()) continue;
                        Poly<K> factor = A[r2][c].scaled(u_inv);
                        for (std::size_t c2 = 0; c2 < cols; ++c2) {
                            if (c2 == c || A[r][c2].is_zero()) continue;
                            A[r2][c2] = A[r2][c2] - factor * A[r][c2];
                        }
                    }
                    detail::erase_row(A, r);
                    detail::erase_col(A, c);
                    cx.twists[l].erase(cx.twists[l].begin() + static_cast<std::ptrdiff_t>(r));
                    cx.twists[l + 1].erase(cx.twists[l + 1].begin() +
                                           static_cast<std::ptrdiff_t>(c));
                    if (l + 1 < cx.mats.size()) detail::erase_row(cx.mats[l + 1], c);
                    if (l > 0) detail::erase_col(cx.mats[l - 1], r);
                    changed = true;
                }
            }
        }
    }
    (void)p;
}

// Minimal free resolution of the submodule generated by `gens` inside
// the free module F_0 with the given twists: F_0 is level 0 and the
// input generators (minimalized) become the level-1 matrix.  Iterated
// syzygies with constant pruning after every step.
template <class K>
Complex<K> resolve_submodule(const RingPtr& ring, const MonomialOrder& ord,
                             std::vector<int32_t> f0_twists, std::vector<ModPoly<K>> gens) {
    Complex<K> cx;
    cx.ring = ring;
    cx.ord = ord;
    cx.twists.push_back(std::move(f0_twists));

    std::vector<ModPoly<K>> cur = std::move(gens);
    // zero generators contribute nothing
    {
        std::vector<ModPoly<K>> nz;
        for (auto& g : cur)
            if (!g.is_zero()) nz.push_back(std::move(g));
        cur = std::move(nz);
    }
    std::size_t cap = ring->nvars() + 3;
    while (!cur.empty()) {
        UNPRJ_CHECK(cx.mats.size() <= cap, "resolution exceeded the Hilbert bound");
        const auto& tw = cx.twists.back();
        std::vector<int32_t> col_tw;
        col_tw.reserve(cur.size());
        for (const auto& g : cur) {
            UNPRJ_CHECK(g.is_homogeneous(tw), "resolution: inhomogeneous column");
            col_tw.push_back(g.degree(tw));
        }
        cx.mats.push_back(detail::columns_to_matrix(cur, tw.size(), ring, ord));
        cx.twists.push_back(std::move(col_tw));
        minimalize(cx);
        bool shrank = false;
        while (cx.twists.size() > 1 && cx.twists.back().empty()) {
            cx.mats.pop_back();
            cx.twists.pop_back();
            shrank = true;
        }
        if (shrank) break;  // tail of the resolution vanished under pruning
        std::vector<ModPoly<K>> cols = detail::matrix_to_columns(
            cx.mats.back(), cx.twists.back().size(), ring, ord);
        cur = syzygies(cols, cx.twists[cx.twists.size() - 2], ord);
    }
    while (cx.twists.size() > 1 && cx.twists.back().empty()) {
        cx.mats.pop_back();
        cx.twists.pop_back();
    }
    return cx;
}

// Resolution of a cyclic quotient R^1/<gens>; level 0 is R.
template <class K>
Complex<K> resolve_quotient_from_gens(const RingPtr& ring, const MonomialOrder& ord,
                                      const std::vector<Poly<K>>& gens) {
    std::vector<ModPoly<K>> cols;
    cols.reserve(gens.size());
    for (const auto& g : gens) {
        std::vector<MTerm<K>> ts;
        for (const auto& t : g.terms()) ts.push_back({t.c, t.m, 0});
        cols.push_back(ModPoly<K>::from_terms(ring, ord, std::move(ts)));
    }
    return resolve_submodule<K>(ring, ord, {0}, std::move(cols));
}

// Resolution of a presented module coker(relations -> F_0).
template <class K>
Complex<K> resolve_presented(const RingPtr& ring, const MonomialOrder& ord,
                             std::vector<int32_t> gen_twists,
                             std::vector<ModPoly<K>> relations) {
    return resolve_submodule<K>(ring, ord, std::move(gen_twists), std::move(relations));
}

// Betti table of the resolved object: level i twist t contributes to
// beta_{i, t-i}.
template <class K>
BettiTable betti_from_complex(const Complex<K>& cx) {
    BettiTable b;
    for (std::size_t l = 0; l < cx.twists.size(); ++l)
        for (int32_t t : cx.twists[l]) b.add(static_cast<int>(l), t - static_cast<int>(l), 1);
    return b;
}

// B(I) from B(S/I): the resolution of the ideal is the truncation
// shifted one step.
inline BettiTable ideal_table_from_quotient(const BettiTable& quotient) {
    BettiTable b;
    for (const auto& [k, v] : quotient.entries()) {
        if (k.first == 0) {
            UNPRJ_CHECK(k.second == 0 && v == 1, "quotient table: level 0 must be S itself");
            continue;
        }
        b.add(k.first - 1, k.second + 1, v);
    }
    return b;
}

// d_i o d_{i+1} = 0 for every consecutive pair.
template <class K>
bool complex_is_exactly_composable(const Complex<K>& cx) {
    for (std::size_t l = 0; l + 1 < cx.mats.size(); ++l) {
        const auto& A = cx.mats[l];
        const auto& B = cx.mats[l + 1];
        std::size_t rows = A.size();
        std::size_t mid = rows ? A[0].size() : 0;
        std::size_t cols = B.empty() ? 0 : B[0].size();
        UNPRJ_CHECK(B.size() == mid, "complex: dimension mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                Poly<K> s = Poly<K>::zero(cx.ring, cx.ord);
                for (std::size_t m = 0; m < mid; ++m) {
                    if (A[r][m].is_zero() || B[m][c].is_zero()) continue;
                    s = s + A[r][m] * B[m][c];
                }
                if (!s.is_zero()) return false;
            }
    }
    return true;
}

// Minimality: no unit (nonzero constant) entries anywhere.
template <class K>
bool complex_is_minimal(const Complex<K>& cx) {
    for (const auto& A : cx.mats)
        for (const auto& row : A)
            for (const auto& e : row)
                if (!e.is_zero() && e.is_constant()) return false;
    return true;
}

// Graded sanity: every entry homogeneous of degree tw_src - tw_dst.
template <class K>
bool complex_is_graded(const Complex<K>& cx) {
    for (std::size_t l = 0; l < cx.mats.size(); ++l) {
        const auto& A = cx.mats[l];
        for (std::size_t r = 0; r < A.size(); ++r)
            for (std::size_t c = 0; c < A[r].size(); ++c) {
                const Poly<K>& e = A[r][c];
                if (e.is_zero()) continue;
                int32_t want = cx.twists[l + 1][c] - cx.twists[l][r];
                if (!e.is_homogeneous() || e.degree() != want) return false;
            }
    }
    return true;
}

}  // namespace unprj
