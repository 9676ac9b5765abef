#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "enttransfer/majorization.hpp"

using namespace enttransfer;

namespace {

SchmidtVector random_vector(std::mt19937_64& rng, std::size_t d, double zero_prob = 0.0)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(d);
    double total = 0.0;
    for (auto& x : v) {
        x = u(rng) < zero_prob ? 0.0 : -std::log(1.0 - u(rng));
        total += x;
    }
    if (total == 0.0) {
        v[0] = 1.0;
        total = 1.0;
    }
    for (auto& x : v)
        x /= total;
    return SchmidtVector(v);
}

} // namespace

TEST(SchmidtVector, SortsAndValidates)
{
    const SchmidtVector v({0.1, 0.6, 0.3});
    EXPECT_EQ(v[0], 0.6);
    EXPECT_EQ(v[1], 0.3);
    EXPECT_EQ(v[2], 0.1);
    EXPECT_THROW(SchmidtVector({0.5, 0.6}), DomainError);
    EXPECT_THROW(SchmidtVector({1.2, -0.2}), DomainError);
    EXPECT_THROW(SchmidtVector(std::vector<double>{}), DomainError);
}

TEST(SchmidtVector, SchmidtNumberIgnoresDust)
{
    EXPECT_EQ(SchmidtVector({1.0 - 1e-14, 1e-14}).schmidt_number(), 1u);
    EXPECT_EQ(SchmidtVector({0.5, 0.5, 0.0}).schmidt_number(), 2u);
    EXPECT_EQ(SchmidtVector({0.5, 0.25, 0.25}).schmidt_number(), 3u);
}

TEST(SchmidtVector, PrefixSumsEndAtOne)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const auto v = random_vector(rng, 1 + i % 9, 0.2);
        const auto sums = v.prefix_sums();
        for (std::size_t k = 1; k < sums.size(); ++k)
            ASSERT_GE(sums[k], sums[k - 1]);
        ASSERT_NEAR(sums.back(), 1.0, 1e-12);
    }
}

TEST(SchmidtVectorOfPair, TwoSinglets)
{
    const auto v = schmidt_vector_of_pair(SchmidtAngle(kQuarterPi), SchmidtAngle(kQuarterPi));
    for (double c : v.coeffs())
        EXPECT_NEAR(c, 0.25, 1e-15);
}

TEST(SchmidtVectorOfPair, ProductAcceptor)
{
    const double beta = 0.4;
    const auto v = schmidt_vector_of_pair(SchmidtAngle(0.0), SchmidtAngle(beta));
    EXPECT_NEAR(v[0], std::cos(beta) * std::cos(beta), 1e-15);
    EXPECT_NEAR(v[1], std::sin(beta) * std::sin(beta), 1e-15);
    EXPECT_EQ(v[2], 0.0);
    EXPECT_EQ(v[3], 0.0);
}

TEST(SchmidtVectorOfPair, MatchesHighPrecisionSpectrum)
{
    // 50-digit products for (0.3, 0.6), sorted.
    const auto v = schmidt_vector_of_pair(SchmidtAngle(0.3), SchmidtAngle(0.6));
    EXPECT_NEAR(v[0], 0.62169003237366187396, 1e-15);
    EXPECT_NEAR(v[1], 0.29097777508117727466, 1e-15);
    EXPECT_NEAR(v[2], 0.059488844864674914859, 1e-15);
    EXPECT_NEAR(v[3], 0.027843347680485936521, 1e-15);
}

TEST(Majorizes, IdentityIsFeasibleWithZeroSlack)
{
    const SchmidtVector v({0.4, 0.3, 0.2, 0.1});
    const auto r = majorizes(v, v);
    EXPECT_TRUE(r.feasible);
    ASSERT_EQ(r.slacks.size(), 3u);
    for (double s : r.slacks)
        EXPECT_EQ(s, 0.0);
}

TEST(Majorizes, UniformIsMajorizedByEverything)
{
    const SchmidtVector uniform({0.25, 0.25, 0.25, 0.25});
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i)
        EXPECT_TRUE(majorizes(uniform, random_vector(rng, 4, 0.3)).feasible);
}

TEST(Majorizes, PrefixSumCounterexample)
{
    const auto r = majorizes(SchmidtVector({0.5, 0.5, 0.0, 0.0}), SchmidtVector({0.4, 0.3, 0.3, 0.0}));
    EXPECT_FALSE(r.feasible);
    EXPECT_NEAR(r.slacks[0], -0.1, 1e-15);
    EXPECT_NEAR(r.slacks[1], -0.3, 1e-15);
    EXPECT_NEAR(r.slacks[2], 0.0, 1e-15);
}

TEST(Majorizes, ZeroPadsShorterVector)
{
    const auto r = majorizes(SchmidtVector({0.5, 0.5}), SchmidtVector({0.5, 0.25, 0.25}));
    EXPECT_EQ(r.slacks.size(), 2u);
    EXPECT_FALSE(r.feasible);
    EXPECT_TRUE(majorizes(SchmidtVector({0.5, 0.25, 0.25}), SchmidtVector({0.5, 0.5})).feasible);
}

TEST(Majorizes, SchmidtNumberNeverIncreases)
{
    std::mt19937_64 rng(9);
    int feasible = 0;
    for (int i = 0; i < 20000; ++i) {
        const auto before = random_vector(rng, 4, 0.3);
        const auto after = random_vector(rng, 4, 0.3);
        if (majorizes(before, after).feasible) {
            ++feasible;
            ASSERT_LE(after.schmidt_number(), before.schmidt_number());
        }
    }
    EXPECT_GT(feasible, 100);
}

TEST(TransferToProduct, PartialTransferIsForbidden)
{
    EXPECT_FALSE(transfer_to_product_possible(SchmidtVector({0.7, 0.3}), true));
    EXPECT_FALSE(transfer_to_product_possible(SchmidtVector({0.5, 0.5}), true));
    EXPECT_FALSE(transfer_to_product_possible(SchmidtVector({0.5, 0.3, 0.2}), true));
    EXPECT_FALSE(transfer_to_product_possible(SchmidtVector({0.25, 0.25, 0.25, 0.25}), true));
}

TEST(TransferToProduct, FullSwapIsAllowed)
{
    EXPECT_TRUE(transfer_to_product_possible(SchmidtVector({0.7, 0.3}), false));
    EXPECT_TRUE(transfer_to_product_possible(SchmidtVector({0.5, 0.3, 0.2}), false));
}

TEST(TransferToProduct, AgreesWithMajorization)
{
    // Donor keeps its spectrum while a product acceptor becomes entangled:
    // the target has more nonzero coefficients, so majorization must fail.
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.01, 0.5);
    for (int i = 0; i < 200; ++i) {
        const auto donor = random_vector(rng, 2 + i % 3);
        const double p = u(rng);
        const SchmidtVector product({1.0, 0.0});
        const SchmidtVector entangled({1.0 - p, p});
        EXPECT_FALSE(majorizes(tensor(donor, product), tensor(donor, entangled)).feasible);
        EXPECT_FALSE(transfer_to_product_possible(donor, true));
        // Full swap: same multiset of coefficients on the other systems.
        EXPECT_TRUE(majorizes(tensor(donor, product), tensor(product, donor)).feasible);
        EXPECT_TRUE(transfer_to_product_possible(donor, false));
    }
}

TEST(SchmidtNumbersAllow, ProductRule)
{
    EXPECT_TRUE(schmidt_numbers_allow(4, 2, 2));
    EXPECT_FALSE(schmidt_numbers_allow(3, 2, 2));
    EXPECT_FALSE(schmidt_numbers_allow(2, 2, 2));
    EXPECT_TRUE(schmidt_numbers_allow(3, 1, 3));
}
