#include <gtest/gtest.h>

#include "unprj/betti.hpp"

using namespace unprj;

TEST(Cancellation, TrivialDecomposition) {
    // single-table sequence equal to the target: empty move list
    BettiTable b;
    b.add(0, 2, 2);
    b.add(1, 3, 1);
    TableSequence seq;
    seq[0] = b;
    auto res = cancellation_check(seq, b);
    EXPECT_EQ(res.verdict, CancellationVerdict::Cancels);
    EXPECT_TRUE(res.moves.empty());
    EXPECT_TRUE(res.necessary_condition_holds);
}

TEST(Cancellation, AlternatingSumMismatchRefutes) {
    BettiTable b;
    b.add(0, 2, 1);
    TableSequence seq;
    seq[0] = b;
    BettiTable target;
    target.add(0, 3, 1);
    auto res = cancellation_check(seq, target);
    EXPECT_EQ(res.verdict, CancellationVerdict::Refuted);
    EXPECT_FALSE(res.necessary_condition_holds);
    EXPECT_NE(res.detail.find("alternating-sum"), std::string::npos);
}

TEST(Cancellation, SimplePairedDrop) {
    // B_1 has an extra (1,2) entry; B_0 an extra (0,3): one unit move
    BettiTable b0, b1, target;
    b0.add(0, 3, 1);
    b1.add(0, 2, 1);
    b1.add(1, 2, 1);
    target.add(0, 2, 1);
    TableSequence seq;
    seq[0] = b0;
    seq[1] = b1;
    auto res = cancellation_check(seq, target);
    ASSERT_EQ(res.verdict, CancellationVerdict::Cancels);
    ASSERT_EQ(res.moves.size(), 1u);
    EXPECT_EQ(res.moves[0].count, 1);
    EXPECT_TRUE(verify_cancellation(seq, target, res.moves));
}

TEST(Cancellation, DirectionMatters) {
    // the same drop with the tables swapped is illegal (l must be > 0)
    BettiTable b0, b1, target;
    b0.add(1, 2, 1);  // upper slot sits in table 0
    b0.add(0, 2, 1);
    b1.add(0, 3, 1);  // partner sits in a HIGHER table: not reachable
    target.add(0, 2, 1);
    TableSequence seq;
    seq[0] = b0;
    seq[1] = b1;
    auto res = cancellation_check(seq, target);
    EXPECT_EQ(res.verdict, CancellationVerdict::Refuted);
    EXPECT_TRUE(res.necessary_condition_holds);
}

TEST(Cancellation, ForcedFlowNegativeRefutes) {
    // surplus below a deficit on the same antidiagonal cannot be moved up
    BettiTable b, target;
    b.add(0, 3, 1);   // surplus at i=0
    b.add(1, 2, 1);
    b.add(2, 1, 2);   // deficit-producing shape
    target.add(1, 2, 1);
    target.add(2, 1, 2);
    target.add(0, 3, 0);
    TableSequence seq;
    seq[0] = b;
    auto res = cancellation_check(seq, target);
    // the lone surplus at (0,3) has no partner: forced flow fails
    EXPECT_EQ(res.verdict, CancellationVerdict::Refuted);
}

TEST(Cancellation, MultiUnitMove) {
    BettiTable b0, b1, target;
    b0.add(0, 4, 3);
    b1.add(1, 3, 3);
    b1.add(0, 1, 1);
    target.add(0, 1, 1);
    TableSequence seq;
    seq[0] = b0;
    seq[1] = b1;
    auto res = cancellation_check(seq, target);
    ASSERT_EQ(res.verdict, CancellationVerdict::Cancels);
    long long total = 0;
    for (const auto& mv : res.moves) total += mv.count;
    EXPECT_EQ(total, 3);
    EXPECT_TRUE(verify_cancellation(seq, target, res.moves));
}
