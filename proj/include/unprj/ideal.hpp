#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "unprj/betti.hpp"
#include "unprj/buchberger.hpp"
#include "unprj/hilbert.hpp"

namespace unprj {

// Ideal: generator list plus a cache of reduced Gröbner bases per
// monomial order.  Value type with shared immutable payload; the cache
// is write-once per key under a mutex, so concurrent readers are safe.
template <class K>
class Ideal {
  public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly<K>> gens) : rep_(std::make_shared<Rep>()) {
        rep_->ring = std::move(ring);
        rep_->gens = std::move(gens);
        for (const auto& g : rep_->gens)
            UNPRJ_CHECK(same_ring(g.ring(), rep_->ring), "Ideal: generator in wrong ring");
    }

    static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }

    bool valid() const { return static_cast<bool>(rep_); }
    const RingPtr& ring() const { return rep_->ring; }
    const std::vector<Poly<K>>& gens() const { return rep_->gens; }

    bool is_homogeneous() const {
        for (const auto& g : rep_->gens)
            if (!g.is_homogeneous()) return false;
        return true;
    }

    // canonical reduced GB, cached per order
    const std::vector<Poly<K>>& groebner(const MonomialOrder& ord) const {
        const std::string key = ord.key();
        {
            std::lock_guard<std::mutex> lock(rep_->mu);
            auto it = rep_->gb_cache.find(key);
            if (it != rep_->gb_cache.end()) return *it->second;
        }
        auto gb = std::make_shared<const std::vector<Poly<K>>>(
            reduced_groebner(rep_->gens, ord));
        std::lock_guard<std::mutex> lock(rep_->mu);
        auto [it, fresh] = rep_->gb_cache.emplace(key, gb);
        return *it->second;  // first writer wins
    }

    const std::vector<Poly<K>>& groebner() const { return groebner(rep_->ring->order()); }

    bool contains(const Poly<K>& f) const {
        if (f.is_zero()) return true;
        const MonomialOrder& ord = rep_->ring->order();
        Poly<K> g = f.order() == ord ? f : f.resorted(ord);
        return normal_form(g, groebner(ord)).is_zero();
    }

    Poly<K> reduce(const Poly<K>& f) const {
        const MonomialOrder& ord = rep_->ring->order();
        Poly<K> g = f.order() == ord ? f : f.resorted(ord);
        return normal_form(g, groebner(ord));
    }

    bool is_zero_ideal() const { return groebner().empty(); }
    bool is_unit_ideal() const {
        const auto& gb = groebner();
        return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
    }

    // Hilbert data of R/I (cached)
    const HilbertData& hilbert() const {
        {
            std::lock_guard<std::mutex> lock(rep_->mu);
            if (rep_->hilbert) return *rep_->hilbert;
        }
        const auto& gb = groebner();
        std::vector<Monomial> leads;
        leads.reserve(gb.size());
        for (const auto& g : gb) leads.push_back(g.lead_monomial());
        auto h = std::make_shared<const HilbertData>(
            hilbert_from_lead_monomials(std::move(leads), rep_->ring->nvars()));
        std::lock_guard<std::mutex> lock(rep_->mu);
        if (!rep_->hilbert) rep_->hilbert = h;
        return *rep_->hilbert;
    }

    // write-once Betti cache of the quotient S/I (filled by homalg)
    std::shared_ptr<const BettiTable> betti_cache_get() const {
        std::lock_guard<std::mutex> lock(rep_->mu);
        return rep_->betti;
    }
    const BettiTable& betti_cache_put(std::shared_ptr<const BettiTable> b) const {
        std::lock_guard<std::mutex> lock(rep_->mu);
        if (!rep_->betti) rep_->betti = std::move(b);
        return *rep_->betti;
    }

  private:
    struct Rep {
        RingPtr ring;
        std::vector<Poly<K>> gens;
        std::map<std::string, std::shared_ptr<const std::vector<Poly<K>>>> gb_cache;
        std::shared_ptr<const HilbertData> hilbert;
        std::shared_ptr<const BettiTable> betti;
        mutable std::mutex mu;
    };
    std::shared_ptr<Rep> rep_;
};

// Equality via canonical reduced bases under the ring's default order.
template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
    UNPRJ_CHECK(same_ring(a.ring(), b.ring()), "ideal_equal: ring mismatch");
    const auto& ga = a.groebner();
    const auto& gb = b.groebner();
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gb[i]) return false;
    return true;
}

template <class K>
bool ideal_contains(const Ideal<K>& outer, const Ideal<K>& inner) {
    for (const auto& g : inner.gens())
        if (!outer.contains(g)) return false;
    return true;
}

}  // namespace unprj
