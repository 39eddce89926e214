#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "unprj/check.hpp"
#include "unprj/order.hpp"

namespace unprj {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Polynomial ring descriptor: ordered variable names, characteristic
// (0 or an odd prime < 2^31), and the default monomial order.
class PolyRing {
  public:
    PolyRing(std::vector<std::string> vars, uint32_t characteristic,
             MonomialOrder order = MonomialOrder::grevlex())
        : vars_(std::move(vars)), char_(characteristic), order_(std::move(order)) {
        std::set<std::string> seen(vars_.begin(), vars_.end());
        UNPRJ_REQUIRE(seen.size() == vars_.size(), "PolyRing: duplicate variable names");
        UNPRJ_REQUIRE(char_ == 0 || (char_ % 2 == 1 && char_ > 2), "PolyRing: characteristic must be 0 or an odd prime");
    }

    static RingPtr make(std::vector<std::string> vars, uint32_t characteristic,
                        MonomialOrder order = MonomialOrder::grevlex()) {
        return std::make_shared<PolyRing>(std::move(vars), characteristic, std::move(order));
    }

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    uint32_t characteristic() const { return char_; }
    const MonomialOrder& order() const { return order_; }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool same_as(const PolyRing& o) const {
        return vars_ == o.vars_ && char_ == o.char_;
    }

  private:
    std::vector<std::string> vars_;
    uint32_t char_;
    MonomialOrder order_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

// Ring with the named variables removed (used by elimination /
// coefficient extraction to land in a genuine subring).
inline RingPtr subring_without(const RingPtr& ring, const std::vector<int>& drop) {
    std::vector<char> gone(ring->nvars(), 0);
    for (int v : drop) gone[static_cast<std::size_t>(v)] = 1;
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (!gone[i]) vars.push_back(ring->var_name(i));
    return PolyRing::make(std::move(vars), ring->characteristic(), ring->order());
}

// Ring with extra variables appended at the end.
inline RingPtr ring_with_extra_vars(const RingPtr& ring, const std::vector<std::string>& extra) {
    std::vector<std::string> vars = ring->vars();
    vars.insert(vars.end(), extra.begin(), extra.end());
    return PolyRing::make(std::move(vars), ring->characteristic(), ring->order());
}

// Ring with one new variable in front (unprojection convention: the new
// coordinate is the distinguished one).
inline RingPtr ring_with_front_var(const RingPtr& ring, const std::string& name) {
    std::vector<std::string> vars;
    vars.reserve(ring->nvars() + 1);
    vars.push_back(name);
    vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
    return PolyRing::make(std::move(vars), ring->characteristic(), ring->order());
}

}  // namespace unprj
