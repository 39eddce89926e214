#include <gtest/gtest.h>

#include <random>

#include "unprj/order.hpp"

using namespace unprj;

namespace {

Monomial mono(std::vector<int32_t> e) { return Monomial(std::move(e)); }

Monomial random_mono(std::mt19937_64& rng, std::size_t n, int32_t maxexp) {
    std::uniform_int_distribution<int32_t> d(0, maxexp);
    std::vector<int32_t> e(n);
    for (auto& x : e) x = d(rng);
    return Monomial(std::move(e));
}

}  // namespace

TEST(Order, GrevlexKnownComparisons) {
    MonomialOrder o = MonomialOrder::grevlex();
    // x^2*y vs x*y*z in k[x,y,z]: equal degree, smaller last exponent wins
    EXPECT_GT(o.compare(mono({2, 1, 0}), mono({1, 1, 1})), 0);
    EXPECT_GT(o.compare(mono({0, 2, 0}), mono({0, 1, 1})), 0);
    EXPECT_GT(o.compare(mono({1, 1, 0}), mono({0, 0, 1})), 0);  // degree first
}

TEST(Order, LexKnownComparisons) {
    MonomialOrder o = MonomialOrder::lex();
    // x > y^5
    EXPECT_GT(o.compare(mono({1, 0}), mono({0, 5})), 0);
    EXPECT_LT(o.compare(mono({0, 3}), mono({1, 0})), 0);
}

TEST(Order, BlockIsolatesFrontVariable) {
    // block(1): x0 beats y^9
    MonomialOrder o = MonomialOrder::block(1);
    EXPECT_GT(o.compare(mono({1, 0}), mono({0, 9})), 0);
}

TEST(Order, EliminationOrderMovesChosenVariableFront) {
    // eliminate variable #2 of three
    MonomialOrder o = elimination_order(3, {2});
    EXPECT_GT(o.compare(mono({0, 0, 1}), mono({7, 7, 0})), 0);
}

// Randomized checks of the order axioms: totality, multiplicativity,
// globality, on 10^4 random triples per order.
TEST(Order, AxiomsRandomized) {
    std::vector<MonomialOrder> orders = {
        MonomialOrder::grevlex(), MonomialOrder::lex(),
        MonomialOrder::weighted_grevlex({2, 1, 3, 1}), MonomialOrder::block(2),
        elimination_order(4, {1, 3})};
    std::mt19937_64 rng(20240811);
    const std::size_t n = 4;
    for (const auto& o : orders) {
        for (int trial = 0; trial < 10000; ++trial) {
            Monomial a = random_mono(rng, n, 6), b = random_mono(rng, n, 6),
                     c = random_mono(rng, n, 6);
            int ab = o.compare(a, b);
            // antisymmetry / totality
            EXPECT_EQ(o.compare(b, a), -ab);
            EXPECT_EQ(ab == 0, a == b);
            // multiplicativity
            EXPECT_EQ(o.compare(a * c, b * c), ab);
            // globality: 1 is the minimum
            Monomial one(n);
            if (!(a == one)) {
                EXPECT_GT(o.compare(a, one), 0);
            }
            // transitivity spot check
            int bc = o.compare(b, c);
            if (ab > 0 && bc > 0) {
                EXPECT_GT(o.compare(a, c), 0);
            }
        }
    }
}
