#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "enttransfer/probabilistic.hpp"

using namespace enttransfer;

namespace {

constexpr double kPi = std::numbers::pi;

// The three d = 4 ratios written out term by term.
std::array<double, 3> explicit_ratios(const TransferProblem& p)
{
    const auto l = p.spectrum_before();
    const auto m = p.spectrum_after();
    return {(1.0 - l[0]) / (1.0 - m[0]), (1.0 - l[0] - l[1]) / (1.0 - m[0] - m[1]), l[3] / m[3]};
}

} // namespace

TEST(PMax, OneAtSwapPoint)
{
    for (double beta : {kPi / 10, 0.5, 0.7}) {
        const auto r = p_max(make_problem(beta - 0.01, beta, 0.01));
        EXPECT_NEAR(r.p_max, 1.0, 1e-10);
    }
}

TEST(PMax, BindingTermsAroundSwapPoint)
{
    const double beta = kPi / 10, dbeta = 0.01;
    EXPECT_EQ(p_max(make_problem(0.4, beta, dbeta)).binding_term, 1u);
    EXPECT_EQ(p_max(make_problem(0.2, beta, dbeta)).binding_term, 2u);
}

TEST(PMax, MatchesExplicitFormula)
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0;
    while (checked < 500) {
        const double beta = kQuarterPi * u(rng);
        const double dbeta = beta * u(rng);
        const double alpha = 1e-3 + (kQuarterPi - 1e-3) * u(rng);
        TransferProblem p;
        try {
            p = make_problem(alpha, beta, dbeta);
        } catch (const InfeasibleHeadroom&) {
            continue;
        }
        if (dbeta == 0.0 || beta - dbeta < 1e-3)
            continue;
        ++checked;
        const auto r = p_max(p);
        const auto e = explicit_ratios(p);
        const double expected = std::min({e[0], e[1], e[2], 1.0});
        ASSERT_NEAR(r.p_max, expected, 1e-10);
        for (int k = 0; k < 3; ++k)
            ASSERT_GE(r.ratios[k], r.p_max);
        ASSERT_EQ(r.ratios[r.binding_term - 1], *std::min_element(r.ratios.begin(), r.ratios.end()));
    }
}

TEST(PMax, AgreesWithMajorization)
{
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0, ones = 0;
    while (checked < 2000) {
        const double beta = kQuarterPi * u(rng);
        // Every tenth draw is the swap point, so both verdicts get exercised.
        const double dbeta = checked % 10 == 0 ? 0.0 : beta * u(rng);
        const double alpha = checked % 10 == 5 ? beta - dbeta : kQuarterPi * u(rng);
        TransferProblem p;
        try {
            p = make_problem(alpha, beta, dbeta);
        } catch (const InfeasibleHeadroom&) {
            continue;
        }
        ++checked;
        const bool one = std::abs(p_max(p).p_max - 1.0) <= 1e-10;
        ones += one;
        ASSERT_EQ(one, reliable_transfer_possible(p)) << alpha << " " << beta << " " << dbeta;
    }
    EXPECT_GT(ones, 100);
}

TEST(PMax, ProductAcceptorCannotBeEntangledFurther)
{
    // lambda4 = 0 before, lambda4' > 0 after.
    EXPECT_EQ(p_max(make_problem(0.0, 0.5, 0.05)).p_max, 0.0);
}

TEST(MaxConversionProbability, ZeroTailConventions)
{
    // 0/0 counts as 1; the target's tail is empty from k = 2 on.
    const auto r = max_conversion_probability(SchmidtVector({0.5, 0.5, 0.0, 0.0}), SchmidtVector({0.5, 0.5, 0.0, 0.0}));
    EXPECT_EQ(r.p_max, 1.0);
    EXPECT_EQ(r.ratios[2], 1.0);
    // x/0 with x > 0 is excluded.
    const auto s = max_conversion_probability(SchmidtVector({0.4, 0.3, 0.2, 0.1}), SchmidtVector({0.6, 0.4, 0.0, 0.0}));
    EXPECT_EQ(s.ratios[1], std::numeric_limits<double>::infinity());
    EXPECT_EQ(s.ratios[2], std::numeric_limits<double>::infinity());
    EXPECT_NEAR(s.p_max, 1.0, 1e-15);
}

TEST(MaxConversionProbability, GeneralDimension)
{
    // Target has more nonzero coefficients than the source.
    const auto r = max_conversion_probability(SchmidtVector({0.5, 0.5}), SchmidtVector({0.4, 0.3, 0.3}));
    EXPECT_EQ(r.p_max, 0.0);
    EXPECT_EQ(r.binding_term, 2u);
}

TEST(PMaxSweep, SingleMaximumAtSwapPoint)
{
    const double beta = kPi / 10, dbeta = 0.01, a_star = beta - dbeta;
    const auto rows = pmax_sweep(SchmidtAngle(beta), dbeta, 300);
    ASSERT_EQ(rows.size(), 301u);
    int ones = 0;
    for (const auto& row : rows) {
        ASSERT_TRUE(row.result) << row.error;
        if (std::abs(row.result->p_max - 1.0) <= 1e-10) {
            ++ones;
            EXPECT_EQ(row.alpha, a_star);
        }
    }
    EXPECT_EQ(ones, 1);
}

TEST(PMaxSweep, IdentityIsCertain)
{
    for (const auto& row : pmax_sweep(SchmidtAngle(0.4), 0.0, 50))
        EXPECT_NEAR(row.result->p_max, 1.0, 1e-12);
}

TEST(PMaxSweep, DegradesAwayFromSwapPoint)
{
    const double beta = kPi / 10, dbeta = 0.01, a_star = beta - dbeta;
    const SchmidtAngle b(beta);
    for (int side : {-1, 1}) {
        double prev = 1.0 + 1e-12;
        for (int i = 0; i <= 200; ++i) {
            const double alpha = a_star + side * 0.1 * i / 200.0;
            const double p = p_max(make_problem(alpha, beta, dbeta)).p_max;
            EXPECT_LE(p, prev + 1e-12) << alpha;
            if (i > 0)
                EXPECT_LT(p, 1.0);
            prev = p;
        }
    }
}
