#include <gtest/gtest.h>

#include <numeric>

#include "binroute/chromosome.hpp"
#include "binroute/operators.hpp"
#include "binroute/rng.hpp"

using namespace binroute;

namespace {

bool valid_perm(const Perm& p, int n) { return is_permutation_of_points(p, n); }

}  // namespace

TEST(Pmx, HandWorkedTrace) {
    // Cuts after positions 3 and 6 (1-based), i.e. segment indices 3..5.
    const Perm a = {1, 2, 3, 4, 5, 6, 7, 8};
    const Perm b = {3, 7, 5, 1, 6, 8, 2, 4};
    const auto [c1, c2] = pmx_cross(a, b, 3, 5);
    EXPECT_EQ(c1, (Perm{3, 7, 8, 4, 5, 6, 2, 1}));
    EXPECT_EQ(c2, (Perm{4, 2, 3, 1, 6, 8, 7, 5}));
}

TEST(Ox, HandWorkedTrace) {
    const Perm a = {1, 2, 3, 4, 5, 6, 7, 8};
    const Perm b = {3, 7, 5, 1, 6, 8, 2, 4};
    const auto [c1, c2] = ox_cross(a, b, 3, 5);
    EXPECT_EQ(c1, (Perm{7, 1, 8, 4, 5, 6, 2, 3}));
    EXPECT_EQ(c2, (Perm{3, 4, 5, 1, 6, 8, 7, 2}));
}

TEST(Cx, SingleCycleReturnsParents) {
    const Perm a = {1, 2, 3, 4};
    const Perm b = {2, 3, 4, 1};  // one cycle covering every position
    const auto [c1, c2] = cx_cross(a, b);
    EXPECT_EQ(c1, a);
    EXPECT_EQ(c2, b);
}

TEST(Cx, AlternatesCycles) {
    const Perm a = {1, 2, 3, 4, 5};
    const Perm b = {2, 1, 4, 3, 5};  // cycles {0,1}, {2,3}, {4}
    const auto [c1, c2] = cx_cross(a, b);
    EXPECT_EQ(c1, (Perm{1, 2, 4, 3, 5}));
    EXPECT_EQ(c2, (Perm{2, 1, 3, 4, 5}));
}

TEST(Cx2, PublishedWorkedExample) {
    const Perm a = {3, 4, 8, 2, 7, 1, 6, 5};
    const Perm b = {4, 2, 5, 1, 6, 8, 3, 7};
    const auto [c1, c2] = cx2_cross(a, b);
    EXPECT_EQ(c1, (Perm{4, 8, 6, 2, 5, 3, 1, 7}));
    EXPECT_EQ(c2, (Perm{1, 7, 4, 8, 6, 2, 5, 3}));
}

TEST(Cx2, MultipleCycleCase) {
    const Perm a = {1, 2, 3, 4, 5, 6, 7, 8};
    const Perm b = {2, 7, 5, 8, 4, 1, 6, 3};
    const auto [c1, c2] = cx2_cross(a, b);
    EXPECT_TRUE(valid_perm(c1, 8));
    EXPECT_TRUE(valid_perm(c2, 8));
    // First cycle collects {2,1,6,7} in both offspring.
    EXPECT_EQ((Perm{c1.begin(), c1.begin() + 4}), (Perm{2, 1, 6, 7}));
    EXPECT_EQ((Perm{c2.begin(), c2.begin() + 4}), (Perm{6, 7, 2, 1}));
}

TEST(Crossover, IdenticalParentsGiveIdenticalChildren) {
    Rng rng(42);
    Perm p(9);
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng.engine());
    for (CrossoverOp op :
         {CrossoverOp::PMX, CrossoverOp::OX, CrossoverOp::CX, CrossoverOp::CX2}) {
        const auto [c1, c2] = crossover_perm(p, p, op, rng);
        EXPECT_EQ(c1, p) << to_string(op);
        EXPECT_EQ(c2, p) << to_string(op);
    }
}

TEST(Mutations, DefinitionTraces) {
    Perm em = {1, 2, 3, 4, 5};
    em_swap(em, 1, 1);
    EXPECT_EQ(em, (Perm{1, 2, 3, 4, 5}));  // equal positions leave it alone
    em_swap(em, 0, 4);
    EXPECT_EQ(em, (Perm{5, 2, 3, 4, 1}));

    Perm im = {1, 2, 3, 4, 5};
    im_move(im, 1, 3);
    EXPECT_EQ(im, (Perm{1, 3, 4, 2, 5}));

    Perm inm = {1, 2, 3, 4, 5};
    inm_reverse(inm, 1, 3);  // segment [2,4] in 1-based terms
    EXPECT_EQ(inm, (Perm{1, 4, 3, 2, 5}));
}

TEST(Operators, TenThousandRandomApplicationsKeepValidity) {
    Rng rng(7);
    const CrossoverOp xs[] = {CrossoverOp::PMX, CrossoverOp::OX, CrossoverOp::CX,
                              CrossoverOp::CX2};
    const MutationOp ms[] = {MutationOp::EM, MutationOp::IM, MutationOp::INM};
    Perm a(11), b(11);
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    std::shuffle(b.begin(), b.end(), rng.engine());
    for (int k = 0; k < 10000; ++k) {
        const auto [c1, c2] = crossover_perm(a, b, xs[k % 4], rng);
        ASSERT_TRUE(valid_perm(c1, 11)) << "iteration " << k;
        ASSERT_TRUE(valid_perm(c2, 11)) << "iteration " << k;
        a = c1;
        b = c2;
        mutate_perm(a, ms[k % 3], rng);
        mutate_perm(b, ms[(k + 1) % 3], rng);
        ASSERT_TRUE(valid_perm(a, 11));
        ASSERT_TRUE(valid_perm(b, 11));
    }
}

TEST(MaskOperators, CrossoverOfIdenticalMasksIsIdentity) {
    Rng rng(11);
    const std::vector<int> working = {0, 1, 2, 3, 4, 5};
    BoolMat m(12, 7);
    for (int i = 0; i < 12; ++i)
        for (int t : working) m(i, t) = rng.bernoulli(0.5);
    BoolMat a = m, b = m;
    crossover_mask(a, b, working, rng);
    EXPECT_TRUE(a == m);
    EXPECT_TRUE(b == m);
}

TEST(MaskOperators, ZeroRateMutationIsIdentityAndRestDaysStayClear) {
    Rng rng(12);
    const std::vector<int> working = {0, 1, 2, 3, 4, 5};
    BoolMat m(12, 7);
    for (int i = 0; i < 12; ++i)
        for (int t : working) m(i, t) = rng.bernoulli(0.5);
    BoolMat copy = m;
    mutate_mask(copy, working, 0.0, rng);
    EXPECT_TRUE(copy == m);

    for (int k = 0; k < 200; ++k) {
        mutate_mask(copy, working, 0.3, rng);
        BoolMat other = copy;
        crossover_mask(copy, other, working, rng);
        for (int i = 0; i < 12; ++i) EXPECT_FALSE(copy(i, 6));
    }
}

TEST(MaskOperators, FlipCountMatchesBinomialExpectation) {
    Rng rng(13);
    const std::vector<int> working = {0, 1, 2, 3, 4, 5};
    const double rate = 1.0 / 12.0;
    long flips = 0;
    const int trials = 10000;
    BoolMat zero(12, 7);
    for (int k = 0; k < trials; ++k) {
        BoolMat m = zero;
        mutate_mask(m, working, rate, rng);
        for (int i = 0; i < 12; ++i)
            for (int t : working) flips += m(i, t) ? 1 : 0;
    }
    const double bits = 12.0 * 6.0;
    const double mean = trials * bits * rate;  // 60000
    const double sigma = std::sqrt(trials * bits * rate * (1.0 - rate));
    EXPECT_NEAR(static_cast<double>(flips), mean, 3.0 * sigma);
}
