#pragma once

#include <map>
#include <vector>

#include "unprj/ideal.hpp"

namespace unprj {

struct OracleLimits {
    std::size_t max_columns = 4200;
    std::size_t max_rows = 400000;
};

namespace detail {

inline void enumerate_monomials(std::size_t nvars, int32_t degree,
                                std::vector<int32_t>& scratch, std::size_t at,
                                std::vector<Monomial>& out) {
    if (at + 1 == nvars) {
        scratch[at] = degree;
        out.push_back(Monomial(scratch));
        return;
    }
    for (int32_t e = 0; e <= degree; ++e) {
        scratch[at] = e;
        enumerate_monomials(nvars, degree - e, scratch, at + 1, out);
    }
}

}  // namespace detail

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int32_t degree) {
    std::vector<Monomial> out;
    std::vector<int32_t> scratch(nvars, 0);
    detail::enumerate_monomials(nvars, degree, scratch, 0, out);
    return out;
}

// Brute-force Hilbert function of R/I in degree d: the rank of the
// Macaulay matrix of the degree-d slice of I, by Gaussian elimination
// only -- no Gröbner machinery anywhere on this path.
template <class K>
long long hilbert_function_oracle(const Ideal<K>& I, long long d, OracleLimits lim = {}) {
    const RingPtr& ring = I.ring();
    const std::size_t n = ring->nvars();
    const uint32_t p = ring->characteristic();
    UNPRJ_REQUIRE(d >= 0, "oracle: negative degree");
    for (const auto& g : I.gens())
        UNPRJ_REQUIRE(g.is_homogeneous(), "oracle: inhomogeneous generator");

    long long ncols_ll = binomial_ll(static_cast<long long>(n) - 1 + d,
                                     static_cast<long long>(n) - 1);
    if (ncols_ll > static_cast<long long>(lim.max_columns))
        throw resource_limit_error("oracle: degree slice too large");
    std::vector<Monomial> cols = monomials_of_degree(n, static_cast<int32_t>(d));
    std::map<std::vector<int32_t>, std::size_t> col_index;
    for (std::size_t c = 0; c < cols.size(); ++c) col_index[cols[c].exponents()] = c;

    const std::size_t N = cols.size();
    std::vector<std::vector<K>> pivot_rows;       // dense echelon rows
    std::vector<std::size_t> pivot_col;           // lead column per pivot row
    std::vector<long long> pivot_of_col(N, -1);   // col -> pivot row index

    std::size_t rows_seen = 0;
    auto insert_row = [&](std::vector<K> row) {
        for (std::size_t c = 0; c < N; ++c) {
            if (row[c].is_zero()) continue;
            long long pr = pivot_of_col[c];
            if (pr < 0) {
                K inv = row[c].inverse();
                for (std::size_t k = c; k < N; ++k)
                    if (!row[k].is_zero()) row[k] = row[k] * inv;
                pivot_of_col[c] = static_cast<long long>(pivot_rows.size());
                pivot_col.push_back(c);
                pivot_rows.push_back(std::move(row));
                return;
            }
            const std::vector<K>& pv = pivot_rows[static_cast<std::size_t>(pr)];
            K q = row[c];
            for (std::size_t k = c; k < N; ++k)
                if (!pv[k].is_zero()) row[k] = row[k] - q * pv[k];
        }
    };

    for (const auto& g : I.gens()) {
        if (g.is_zero()) continue;
        int32_t e = g.degree();
        if (e > d) continue;
        std::vector<Monomial> mults = monomials_of_degree(n, static_cast<int32_t>(d) - e);
        for (const auto& m : mults) {
            guard_tick();
            if (++rows_seen > lim.max_rows)
                throw resource_limit_error("oracle: row budget exhausted");
            std::vector<K> row(N, scalar_of_int<K>(0, p));
            for (const auto& t : g.terms())
                row[col_index.at((t.m * m).exponents())] = t.c;
            insert_row(std::move(row));
        }
    }
    return static_cast<long long>(N) - static_cast<long long>(pivot_rows.size());
}

}  // namespace unprj
