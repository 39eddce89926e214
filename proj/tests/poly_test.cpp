#include <gtest/gtest.h>

#include <random>

#include "unprj/parse.hpp"
#include "unprj/poly.hpp"

using namespace unprj;

namespace {

RingPtr ring_xyz(uint32_t p) { return PolyRing::make({"x", "y", "z"}, p); }

template <class K>
Poly<K> random_poly(std::mt19937_64& rng, const RingPtr& ring, int terms, int32_t maxexp) {
    std::uniform_int_distribution<int32_t> de(0, maxexp);
    std::uniform_int_distribution<long long> dc(-50, 50);
    std::vector<Term<K>> ts;
    for (int t = 0; t < terms; ++t) {
        std::vector<int32_t> e(ring->nvars());
        for (auto& x : e) x = de(rng);
        ts.push_back({scalar_of_int<K>(dc(rng), ring->characteristic()), Monomial(std::move(e))});
    }
    return Poly<K>::from_terms(ring, ring->order(), std::move(ts));
}

}  // namespace

TEST(Parse, ZeroAndConstants) {
    auto R = ring_xyz(0);
    EXPECT_TRUE(parse_poly<Rat>("0", R).is_zero());
    EXPECT_TRUE(parse_poly<Rat>("x*(x+y) - x^2 - x*y", R).is_zero());
    EXPECT_EQ(to_string(parse_poly<Rat>("3 + 4", R)), "7");
}

TEST(Parse, RingLaws) {
    auto R = ring_xyz(0);
    // x*(x+y) - x^2 = x*y
    auto f = parse_poly<Rat>("x*(x+y) - x^2", R);
    EXPECT_EQ(f, parse_poly<Rat>("x*y", R));
}

TEST(Parse, PaperSextic) {
    auto R = PolyRing::make({"y0", "z0", "y1", "z1", "y2", "z2"}, 0);
    auto f = parse_poly<Rat>("y1^4*y0^2+(z2^3*y1-y2^3*z1)*y0*z0+z1^4*z0^2", R);
    EXPECT_EQ(f.nterms(), 4u);
    EXPECT_TRUE(f.is_homogeneous());
    EXPECT_EQ(f.degree(), 6);
}

TEST(Parse, ErrorsReportPosition) {
    auto R = ring_xyz(0);
    EXPECT_THROW(parse_poly<Rat>("x + w", R), parse_error);
    EXPECT_THROW(parse_poly<Rat>("x + ", R), parse_error);
    EXPECT_THROW(parse_poly<Rat>("x y", R), parse_error);
    try {
        parse_poly<Rat>("x + w", R);
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.position, 4u);
    }
}

TEST(Parse, NonInvertibleCoefficientModP) {
    auto R = ring_xyz(7);
    EXPECT_THROW(parse_poly<Fp>("1/7*x", R), parse_error);
    EXPECT_EQ(parse_poly<Fp>("1/2*x", R), parse_poly<Fp>("4*x", R));
}

TEST(Parse, PrintRoundTripRandomized) {
    std::mt19937_64 rng(7);
    auto R0 = ring_xyz(0);
    auto Rp = ring_xyz(32003);
    for (int t = 0; t < 300; ++t) {
        auto f = random_poly<Rat>(rng, R0, 6, 4);
        EXPECT_EQ(parse_poly<Rat>(to_string(f), R0), f) << to_string(f);
        auto g = random_poly<Fp>(rng, Rp, 6, 4);
        EXPECT_EQ(parse_poly<Fp>(to_string(g), Rp), g) << to_string(g);
    }
    // rational coefficients survive the round trip
    auto h = parse_poly<Rat>("1/2*x^2 - 7/3*y*z + 5", R0);
    EXPECT_EQ(parse_poly<Rat>(to_string(h), R0), h);
}

TEST(Poly, DistributivityRandomized) {
    std::mt19937_64 rng(99);
    auto R = ring_xyz(32003);
    for (int t = 0; t < 100; ++t) {
        auto f = random_poly<Fp>(rng, R, 5, 3);
        auto g = random_poly<Fp>(rng, R, 5, 3);
        auto h = random_poly<Fp>(rng, R, 5, 3);
        EXPECT_EQ((f + g) * h, f * h + g * h);
    }
}

TEST(Poly, CoefficientOfPower) {
    auto R = PolyRing::make({"x0", "y0", "z0"}, 0);
    auto f = parse_poly<Rat>("z0^3*x0 - y0^4", R);
    EXPECT_EQ(f.coefficient_of_power(0, 1), parse_poly<Rat>("z0^3", R));
    EXPECT_EQ(f.coefficient_of_power(0, 0), parse_poly<Rat>("-y0^4", R));
    EXPECT_TRUE(f.coefficient_of_power(0, 5).is_zero());
}

TEST(Poly, CoefficientOfPowerReconstructs) {
    std::mt19937_64 rng(3);
    auto R = ring_xyz(0);
    for (int t = 0; t < 50; ++t) {
        auto f = random_poly<Rat>(rng, R, 8, 5);
        Poly<Rat> rebuilt = Poly<Rat>::zero(R);
        for (int32_t i = 0; i <= f.degree_in(1); ++i) {
            Poly<Rat> yi = i == 0 ? Poly<Rat>::constant(R, Rat(1)) : Poly<Rat>::variable(R, 1, i);
            rebuilt = rebuilt + f.coefficient_of_power(1, i) * yi;
        }
        EXPECT_EQ(rebuilt, f);
    }
}

TEST(RingMap, SubstitutionExamples) {
    auto S = PolyRing::make({"x", "y", "s", "t"}, 0);
    RingMap<Rat> id = RingMap<Rat>::identity(S);
    auto f = parse_poly<Rat>("x*t - y*s", S);
    EXPECT_EQ(id.apply(f), f);
    // x -> s^3, y -> s^2*t applied to x*t - y*s
    RingMap<Rat> m(S, S,
                   {parse_poly<Rat>("s^3", S), parse_poly<Rat>("s^2*t", S),
                    parse_poly<Rat>("s", S), parse_poly<Rat>("t", S)});
    EXPECT_TRUE(m.apply(f).is_zero());
}

TEST(RingMap, Dehomogenization) {
    auto S = PolyRing::make({"x0", "f", "a"}, 0);
    RingMap<Rat> m(S, S,
                   {Poly<Rat>::constant(S, Rat(1)), Poly<Rat>::variable(S, 1),
                    Poly<Rat>::variable(S, 2)});
    auto g = parse_poly<Rat>("f*x0 - a", S);
    EXPECT_EQ(m.apply(g), parse_poly<Rat>("f - a", S));
}

TEST(Poly, MultidegreeSelect) {
    // monomials of k[y,z] with deg'(y)=deg'(z)=(1), target (2)
    auto R = PolyRing::make({"y", "z"}, 0);
    std::vector<std::vector<long long>> grading = {{1}, {1}};
    std::vector<Monomial> hits;
    for (int32_t a = 0; a <= 2; ++a)
        for (int32_t b = 0; b <= 2; ++b) {
            Monomial m(std::vector<int32_t>{a, b});
            if (multidegree(m, grading) == std::vector<long long>{2}) hits.push_back(m);
        }
    EXPECT_EQ(hits.size(), 3u);  // y^2, y*z, z^2
}
