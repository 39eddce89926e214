#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "unprj/ideal.hpp"
#include "unprj/parse.hpp"

using namespace unprj;

namespace {

template <class K>
Ideal<K> ideal_from(const RingPtr& R, std::initializer_list<const char*> gens) {
    std::vector<Poly<K>> gs;
    for (const char* s : gens) gs.push_back(parse_poly<K>(s, R));
    return Ideal<K>(R, std::move(gs));
}

// Buchberger criterion: every S-pair of the basis reduces to zero.
template <class K>
bool passes_buchberger_criterion(const std::vector<Poly<K>>& gb, const MonomialOrder& ord) {
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            Monomial l = Monomial::lcm(gb[i].lead_monomial(), gb[j].lead_monomial());
            Poly<K> s =
                gb[i].mono_mul(l / gb[i].lead_monomial()).scaled(gb[i].lead_coeff().inverse()) -
                gb[j].mono_mul(l / gb[j].lead_monomial()).scaled(gb[j].lead_coeff().inverse());
            if (!normal_form(s, gb).is_zero()) return false;
        }
    (void)ord;
    return true;
}

}  // namespace

TEST(Groebner, MonomialIdealIsItsOwnBasis) {
    auto R = PolyRing::make({"x", "y"}, 32003);
    auto I = ideal_from<Fp>(R, {"x", "y"});
    const auto& gb = I.groebner();
    ASSERT_EQ(gb.size(), 2u);
    EXPECT_EQ(gb[0], parse_poly<Fp>("y", R));
    EXPECT_EQ(gb[1], parse_poly<Fp>("x", R));
}

TEST(Groebner, SPairReducesToZero) {
    auto R = PolyRing::make({"x", "y"}, 32003);
    auto I = ideal_from<Fp>(R, {"x^2", "x*y"});
    const auto& gb = I.groebner();
    ASSERT_EQ(gb.size(), 2u);
    EXPECT_TRUE(passes_buchberger_criterion(gb, R->order()));
}

TEST(Groebner, CavigliaD2HeadIdeal) {
    auto R = PolyRing::make({"y1", "z1", "y2", "z2"}, 32003);
    auto I = ideal_from<Fp>(R, {"z2*y1 - y2*z1", "y1^2", "z1^2"});
    const auto& gb = I.groebner();
    EXPECT_TRUE(passes_buchberger_criterion(gb, R->order()));
    // membership oracle: random combinations land in the ideal
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> dc(-9, 9);
    std::uniform_int_distribution<int32_t> de(0, 2);
    for (int t = 0; t < 20; ++t) {
        Poly<Fp> f = Poly<Fp>::zero(R);
        for (const auto& g : I.gens()) {
            std::vector<int32_t> e(R->nvars());
            for (auto& x : e) x = de(rng);
            f = f + g.mono_mul(Monomial(e)).scaled(scalar_of_int<Fp>(dc(rng), 32003));
        }
        EXPECT_TRUE(I.contains(f));
    }
}

TEST(Groebner, NormalFormContract) {
    auto R = PolyRing::make({"x", "y"}, 32003);
    auto I = ideal_from<Fp>(R, {"y"});
    EXPECT_EQ(I.reduce(parse_poly<Fp>("x", R)), parse_poly<Fp>("x", R));
    auto caviglia = PolyRing::make({"y1", "z1", "y2", "z2"}, 32003);
    auto I2 = ideal_from<Fp>(caviglia, {"z2*y1 - y2*z1", "y1^2", "z1^2"});
    EXPECT_TRUE(I2.reduce(parse_poly<Fp>("y1^2*z1^2", caviglia)).is_zero());
    // idempotence on random inputs
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int32_t> de(0, 3);
    std::uniform_int_distribution<long long> dc(-20, 20);
    for (int t = 0; t < 50; ++t) {
        std::vector<Term<Fp>> ts;
        for (int k = 0; k < 6; ++k) {
            std::vector<int32_t> e(4);
            for (auto& x : e) x = de(rng);
            ts.push_back({scalar_of_int<Fp>(dc(rng), 32003), Monomial(std::move(e))});
        }
        auto f = Poly<Fp>::from_terms(caviglia, caviglia->order(), std::move(ts));
        auto nf = I2.reduce(f);
        EXPECT_EQ(I2.reduce(nf), nf);
        EXPECT_TRUE(I2.contains(f - nf));
    }
}

TEST(Groebner, CanonicityUnderPermutationAndStrategy) {
    auto R = PolyRing::make({"y1", "z1", "y2", "z2"}, 32003);
    std::vector<const char*> gens = {"z2^2*y1 - y2^2*z1", "y1^3", "z1^3"};
    std::vector<Poly<Fp>> base;
    for (auto* s : gens) base.push_back(parse_poly<Fp>(s, R));
    std::sort(base.begin(), base.end(),
              [&](const Poly<Fp>& a, const Poly<Fp>& b) { return to_string(a) < to_string(b); });
    std::vector<std::vector<Poly<Fp>>> results;
    do {
        results.push_back(reduced_groebner(base, R->order()));
    } while (std::next_permutation(base.begin(), base.end(), [&](const Poly<Fp>& a,
                                                                 const Poly<Fp>& b) {
        return to_string(a) < to_string(b);
    }));
    ASSERT_GT(results.size(), 1u);
    for (std::size_t i = 1; i < results.size(); ++i) {
        ASSERT_EQ(results[i].size(), results[0].size());
        for (std::size_t k = 0; k < results[0].size(); ++k)
            EXPECT_EQ(results[i][k], results[0][k]);
    }
}

TEST(Groebner, ZeroIdealAndUnitIdeal) {
    auto R = PolyRing::make({"x", "y"}, 32003);
    Ideal<Fp> Z = Ideal<Fp>::zero(R);
    EXPECT_TRUE(Z.groebner().empty());
    EXPECT_TRUE(Z.is_zero_ideal());
    auto U = ideal_from<Fp>(R, {"3"});
    EXPECT_TRUE(U.is_unit_ideal());
}

TEST(Groebner, DegreeCapTruncates) {
    auto R = PolyRing::make({"y1", "z1", "y2", "z2"}, 32003);
    auto gens = std::vector<Poly<Fp>>{parse_poly<Fp>("z2^3*y1 - y2^3*z1", R),
                                      parse_poly<Fp>("y1^4", R), parse_poly<Fp>("z1^4", R)};
    GBOptions opt;
    opt.degree_cap = 5;
    auto truncated = buchberger(gens, R->order(), opt);
    auto full = buchberger(gens, R->order());
    EXPECT_LE(truncated.size(), full.size());
    for (const auto& g : truncated) EXPECT_LE(g.degree(), 8);  // inputs + one pair step
}
