#include <gtest/gtest.h>

#include <random>

#include "unprj/idealops.hpp"
#include "unprj/parse.hpp"

using namespace unprj;

namespace {

template <class K>
Ideal<K> ideal_from(const RingPtr& R, std::initializer_list<const char*> gens) {
    std::vector<Poly<K>> gs;
    for (const char* s : gens) gs.push_back(parse_poly<K>(s, R));
    return Ideal<K>(R, std::move(gs));
}

}  // namespace

TEST(IdealOps, EliminateSimple) {
    auto R = PolyRing::make({"x", "y"}, 32003);
    auto I = ideal_from<Fp>(R, {"x", "y"});
    auto E = eliminate(I, {0});
    ASSERT_EQ(E.gens().size(), 1u);
    EXPECT_EQ(E.gens()[0], parse_poly<Fp>("y", R));
}

TEST(IdealOps, TwistedCubicFromGraph) {
    // eliminate {s,t} from the graph of the twisted cubic parametrization
    auto R = PolyRing::make({"s", "t", "x0", "x1", "x2", "x3"}, 32003);
    auto I = ideal_from<Fp>(R, {"x0 - s^3", "x1 - s^2*t", "x2 - s*t^2", "x3 - t^3"});
    auto E = eliminate(I, {0, 1});
    auto sub = subring_without(R, {0, 1});
    auto J = restrict_scalars(E, sub);
    auto expect = ideal_from<Fp>(sub, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
    EXPECT_TRUE(ideal_equal(J, expect));
}

TEST(IdealOps, KernelOfMonomialMap) {
    // kernel of k[x0..x3] -> k[s,t], the twisted cubic again
    auto src = PolyRing::make({"x0", "x1", "x2", "x3"}, 32003);
    auto tgt = PolyRing::make({"s", "t"}, 32003);
    RingMap<Fp> phi(src, tgt,
                    {parse_poly<Fp>("s^3", tgt), parse_poly<Fp>("s^2*t", tgt),
                     parse_poly<Fp>("s*t^2", tgt), parse_poly<Fp>("t^3", tgt)});
    auto ker = kernel(phi);
    auto expect = ideal_from<Fp>(src, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
    EXPECT_TRUE(ideal_equal(ker, expect));
}

TEST(IdealOps, ColonExamples) {
    auto R = PolyRing::make({"x", "y"}, 32003);
    // ((x^2) : x) = (x)
    auto I = ideal_from<Fp>(R, {"x^2"});
    EXPECT_TRUE(ideal_equal(ideal_colon(I, parse_poly<Fp>("x", R)), ideal_from<Fp>(R, {"x"})));
    // (I : (1)) = I
    auto J = ideal_from<Fp>(R, {"x^2 - y", "y^3"});
    EXPECT_TRUE(ideal_equal(ideal_colon(J, parse_poly<Fp>("1", R)), J));
}

TEST(IdealOps, ColonOnConicCoordinateRing) {
    // in S_Y for Y = V(x1*x2 - x3^2): ((x1) : x2^2) = (x1), computed in R
    // as ((I_Y + (x1)) : x2^2)
    auto R = PolyRing::make({"x1", "x2", "x3"}, 32003);
    auto IY = ideal_from<Fp>(R, {"x1*x2 - x3^2"});
    auto I = ideal_sum(IY, ideal_from<Fp>(R, {"x1"}));
    auto Q = ideal_colon(I, parse_poly<Fp>("x2^2", R));
    EXPECT_TRUE(ideal_equal(Q, I));
}

TEST(IdealOps, SaturationExamples) {
    auto R = PolyRing::make({"x", "y"}, 32003);
    // ((x*y) : y^inf) = (x)
    auto I = ideal_from<Fp>(R, {"x*y"});
    EXPECT_TRUE(ideal_equal(saturate(I, parse_poly<Fp>("y", R)), ideal_from<Fp>(R, {"x"})));
    // (x^2, x*y) = x*(x, y): saturating by y strips the embedded point
    auto J = ideal_from<Fp>(R, {"x^2", "x*y"});
    EXPECT_TRUE(ideal_equal(saturate(J, parse_poly<Fp>("y", R)), ideal_from<Fp>(R, {"x"})));
    // while saturating by x removes everything (x^2 is in the ideal)
    EXPECT_TRUE(saturate(J, parse_poly<Fp>("x", R)).is_unit_ideal());
}

TEST(IdealOps, SaturationFixpoint) {
    auto R = PolyRing::make({"x", "y", "z"}, 32003);
    auto I = ideal_from<Fp>(R, {"x^2*z - y^3", "x*y*z^2"});
    auto f = parse_poly<Fp>("z", R);
    auto S = saturate(I, f);
    EXPECT_TRUE(ideal_equal(ideal_colon(S, f), S));
    EXPECT_TRUE(ideal_equal(saturate(S, f), S));
}

TEST(IdealOps, ArithmeticExamples) {
    auto R = PolyRing::make({"x", "y"}, 32003);
    // (x) + (y) = (x, y)
    auto sum = ideal_sum(ideal_from<Fp>(R, {"x"}), ideal_from<Fp>(R, {"y"}));
    EXPECT_TRUE(ideal_equal(sum, ideal_from<Fp>(R, {"x", "y"})));
    // (x) ∩ (y) = (xy)
    auto cap = ideal_intersect(ideal_from<Fp>(R, {"x"}), ideal_from<Fp>(R, {"y"}));
    EXPECT_TRUE(ideal_equal(cap, ideal_from<Fp>(R, {"x*y"})));
}

TEST(IdealOps, MonomialPairPowers) {
    // (a,f)^2 for a = y0^4, f = z0^3
    auto R = PolyRing::make({"y0", "z0"}, 32003);
    auto I = ideal_from<Fp>(R, {"y0^4", "z0^3"});
    auto I2 = ideal_power(I, 2);
    EXPECT_TRUE(ideal_equal(I2, ideal_from<Fp>(R, {"y0^8", "y0^4*z0^3", "z0^6"})));
    auto I0 = ideal_power(I, 0);
    EXPECT_TRUE(I0.is_unit_ideal());
}

TEST(IdealOps, QuotientAdjunctionRandomized) {
    std::mt19937_64 rng(17);
    auto R = PolyRing::make({"x", "y", "z"}, 32003);
    std::uniform_int_distribution<int32_t> de(0, 2);
    std::uniform_int_distribution<long long> dc(-5, 5);
    auto rnd = [&](int terms) {
        std::vector<Term<Fp>> ts;
        for (int k = 0; k < terms; ++k) {
            std::vector<int32_t> e(3);
            for (auto& x : e) x = de(rng);
            ts.push_back({scalar_of_int<Fp>(dc(rng), 32003), Monomial(std::move(e))});
        }
        return Poly<Fp>::from_terms(R, R->order(), std::move(ts));
    };
    for (int t = 0; t < 10; ++t) {
        Ideal<Fp> I(R, {rnd(3), rnd(3)});
        Poly<Fp> f = rnd(2);
        if (f.is_zero()) continue;
        Ideal<Fp> Q = ideal_colon(I, f);
        // I ⊆ (I : f) and (I : f)·f ⊆ I
        EXPECT_TRUE(ideal_contains(Q, I));
        for (const auto& q : Q.gens()) EXPECT_TRUE(I.contains(q * f));
    }
}
