#pragma once

#include <random>

#include "unprj/oracle.hpp"
#include "unprj/poly.hpp"

namespace unprj {

// Seed-deterministic random homogeneous form.  Coefficients are uniform
// field elements (small integers over the rationals); optionally the
// coefficient of x0^d is dropped so the form vanishes at (1:0:...:0).
template <class K>
Poly<K> random_form(const RingPtr& ring, int32_t degree, std::mt19937_64& rng,
                    bool vanish_at_e0 = false) {
    const uint32_t p = ring->characteristic();
    std::uniform_int_distribution<long long> dc(p ? 0 : -20,
                                                p ? static_cast<long long>(p) - 1 : 20);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Term<K>> ts;
        for (const auto& m : monomials_of_degree(ring->nvars(), degree)) {
            if (vanish_at_e0 && m[0] == degree) continue;
            K c = scalar_of_int<K>(dc(rng), p);
            if (!c.is_zero()) ts.push_back({c, m});
        }
        Poly<K> f = Poly<K>::from_terms(ring, ring->order(), std::move(ts));
        if (!f.is_zero()) return f;
    }
    throw internal_error("random_form: could not sample a nonzero form");
}

}  // namespace unprj
