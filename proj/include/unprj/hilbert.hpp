#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "unprj/guard.hpp"
#include "unprj/monomial.hpp"

namespace unprj {

// Integer polynomial in t, dense by exponent.
using ZPoly = std::vector<long long>;

inline void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    zp_trim(r);
    return r;
}
inline ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zp_trim(r);
    return r;
}
inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}
inline ZPoly zp_shift(const ZPoly& a, std::size_t k) {
    if (a.empty()) return {};
    ZPoly r(a.size() + k, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}
inline long long zp_eval1(const ZPoly& a) {
    long long s = 0;
    for (long long c : a) s += c;
    return s;
}

namespace detail {

// Numerator of the Hilbert series of R/M for a monomial ideal M, over
// (1-t)^nvars.  Pivot recursion with connected-component splitting;
// the pairwise-coprime base case is the product formula.
inline ZPoly monomial_quotient_numerator(std::vector<Monomial> gens, std::size_t nvars) {
    guard_tick();
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() < b.degree();
    });
    std::vector<Monomial> min_gens;
    for (auto& g : gens) {
        bool red = false;
        for (const auto& h : min_gens)
            if (h.divides(g)) {
                red = true;
                break;
            }
        if (!red) min_gens.push_back(std::move(g));
    }
    if (min_gens.empty()) return {1};
    if (min_gens[0].degree() == 0) return {};  // unit ideal
    // split into variable-disjoint groups
    std::vector<int> uf(nvars);
    for (std::size_t i = 0; i < nvars; ++i) uf[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (const auto& g : min_gens) {
        int first = -1;
        for (std::size_t v = 0; v < nvars; ++v) {
            if (g[v] == 0) continue;
            if (first < 0)
                first = static_cast<int>(v);
            else
                uf[find(static_cast<int>(v))] = find(first);
        }
    }
    std::map<int, std::vector<Monomial>> groups;
    for (const auto& g : min_gens) {
        int root = -1;
        for (std::size_t v = 0; v < nvars; ++v)
            if (g[v] > 0) {
                root = find(static_cast<int>(v));
                break;
            }
        groups[root].push_back(g);
    }
    if (groups.size() > 1) {
        ZPoly acc{1};
        for (auto& [root, gg] : groups) acc = zp_mul(acc, monomial_quotient_numerator(gg, nvars));
        return acc;
    }
    bool pairwise_coprime = true;
    for (std::size_t i = 0; i < min_gens.size() && pairwise_coprime; ++i)
        for (std::size_t j = i + 1; j < min_gens.size(); ++j)
            if (!Monomial::coprime(min_gens[i], min_gens[j])) {
                pairwise_coprime = false;
                break;
            }
    if (pairwise_coprime) {
        ZPoly acc{1};
        for (const auto& g : min_gens) {
            ZPoly f(static_cast<std::size_t>(g.degree()) + 1, 0);
            f[0] = 1;
            f[static_cast<std::size_t>(g.degree())] -= 1;
            acc = zp_mul(acc, f);
        }
        return acc;
    }
    // pivot on the most frequent variable:
    // 0 -> R/(M:x)(-1) -> R/M -> R/(M+(x)) -> 0
    std::vector<int> freq(nvars, 0);
    for (const auto& g : min_gens)
        for (std::size_t v = 0; v < nvars; ++v)
            if (g[v] > 0) ++freq[v];
    std::size_t pv = 0;
    for (std::size_t v = 1; v < nvars; ++v)
        if (freq[v] > freq[pv]) pv = v;
    std::vector<Monomial> plus, colon;
    for (const auto& g : min_gens) {
        if (g[pv] == 0) plus.push_back(g);
        std::vector<int32_t> e = g.exponents();
        if (e[pv] > 0) --e[pv];
        colon.push_back(Monomial(std::move(e)));
    }
    plus.push_back(Monomial::variable(nvars, pv));
    return zp_add(monomial_quotient_numerator(std::move(plus), nvars),
                  zp_shift(monomial_quotient_numerator(std::move(colon), nvars), 1));
}

}  // namespace detail

inline long long binomial_ll(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Hilbert data of a graded quotient R/I: series numerator over
// (1-t)^nvars, Krull dimension, degree (top-dimensional multiplicity;
// read from the reduced numerator, hence insensitive to saturation).
struct HilbertData {
    std::size_t nvars = 0;
    ZPoly numerator;          // over (1-t)^nvars
    ZPoly reduced_numerator;  // over (1-t)^krull_dim, nonzero at t=1
    int krull_dim = -1;       // -1 = zero ring
    long long degree = 0;

    // exact vector-space dimension of (R/I)_d
    long long hilbert_function(long long d) const {
        if (d < 0) return 0;
        long long s = 0;
        for (std::size_t j = 0; j < numerator.size(); ++j)
            s += numerator[j] *
                 binomial_ll(static_cast<long long>(nvars) - 1 + d - static_cast<long long>(j),
                             static_cast<long long>(nvars) - 1);
        return s;
    }

    // dimension of the projective scheme cut out (-1 when empty)
    int projective_dim() const { return krull_dim - 1; }
};

inline HilbertData hilbert_from_lead_monomials(std::vector<Monomial> leads, std::size_t nvars) {
    HilbertData h;
    h.nvars = nvars;
    h.numerator = detail::monomial_quotient_numerator(std::move(leads), nvars);
    ZPoly q = h.numerator;
    int cancelled = 0;
    while (!q.empty() && zp_eval1(q) == 0) {
        // exact division by (1-t) via prefix sums
        ZPoly d(q.size() - 1, 0);
        long long carry = 0;
        for (std::size_t i = 0; i + 1 < q.size(); ++i) {
            carry += q[i];
            d[i] = carry;
        }
        q = std::move(d);
        zp_trim(q);
        ++cancelled;
    }
    h.reduced_numerator = q;
    if (q.empty()) {
        h.krull_dim = -1;  // zero ring
        h.degree = 0;
    } else {
        h.krull_dim = static_cast<int>(nvars) - cancelled;
        h.degree = zp_eval1(q);
    }
    return h;
}

}  // namespace unprj
