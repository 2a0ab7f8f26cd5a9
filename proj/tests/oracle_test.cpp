#include "montesinos/crosscheck.hpp"
#include "montesinos/family.hpp"
#include "montesinos/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace montesinos;

namespace {

Fraction F(long long p, long long q) { return Fraction(Integer(p), Integer(q)); }
const Fraction inf = Fraction::infinity();

Skeleton sk(std::vector<Fraction> v) { return Skeleton{v.front(), std::move(v), false}; }
Skeleton constant(const Fraction& t) { return Skeleton{t, {t}, true}; }

bool has(const std::vector<oracle::WeightVector>& hits, std::int64_t m, std::vector<std::int64_t> k) {
    return std::any_of(hits.begin(), hits.end(), [&](const auto& w) { return w.m == m && w.k == k; });
}

}  // namespace

TEST(BruteForce, GammaWeights) {
    std::vector<Skeleton> c{sk({F(-1, 2), Fraction(-1)}), sk({F(2, 5), F(1, 2), Fraction(0)}),
                            sk({F(1, 11), Fraction(0)})};
    auto hits = oracle::brute_force_endpoints(c, 22);
    EXPECT_TRUE(has(hits, 11, {1, 1, 10}));
    EXPECT_TRUE(has(hits, 22, {2, 2, 20}));
    for (const auto& w : hits) {
        if (w.m == 11 && w.k == std::vector<std::int64_t>{1, 1, 10}) {
            EXPECT_EQ(w.scaled_den, 21);
        }
    }
    auto normalized = normalized_oracle_solutions(c, 22);
    ASSERT_EQ(normalized.size(), 1u);
    EXPECT_EQ(normalized.begin()->first, (std::vector<Fraction>{F(1, 11), F(1, 11), F(10, 11)}));
    EXPECT_EQ(normalized.begin()->second, F(21, 11));
}

TEST(BruteForce, GammaPrimeWeights) {
    std::vector<Skeleton> c{constant(F(-1, 2)), sk({F(2, 5), F(1, 2)}), sk({F(1, 11), Fraction(0)})};
    auto hits = oracle::brute_force_endpoints(c, 8);
    EXPECT_TRUE(has(hits, 4, {2, 3}));
    EXPECT_FALSE(has(hits, 3, {1, 2}));
}

TEST(BruteForce, NoSolutionWhenAllVPositive) {
    std::vector<Skeleton> c{sk({F(1, 3), F(1, 2)}), sk({F(2, 5), F(1, 2)}), sk({F(1, 5), F(1, 4)})};
    EXPECT_TRUE(oracle::brute_force_endpoints(c, 40).empty());
}

TEST(BruteForce, HitsClosedUnderScaling) {
    std::vector<Skeleton> c{sk({F(-1, 2), Fraction(-1)}), sk({F(2, 5), F(1, 2), Fraction(0)}),
                            sk({F(1, 13), Fraction(0)})};
    auto hits = oracle::brute_force_endpoints(c, 60);
    for (const auto& w : hits) {
        if (w.m * 3 > 60) continue;
        std::vector<std::int64_t> k3;
        for (auto k : w.k) k3.push_back(3 * k);
        EXPECT_TRUE(has(hits, 3 * w.m, k3));
    }
}

TEST(ExhaustivePaths, SmallDepths) {
    auto zero = oracle::exhaustive_paths(F(1, 2), 0);
    EXPECT_EQ(zero.size(), 2u);  // constant marker and the bare vertex
    auto two = oracle::exhaustive_paths(F(1, 2), 2);
    std::set<std::vector<Fraction>> got;
    for (const auto& s : two)
        if (!s.constant) got.insert(s.vertices);
    std::set<std::vector<Fraction>> want{{F(1, 2)},
                                         {F(1, 2), Fraction(0)},
                                         {F(1, 2), Fraction(1)},
                                         {F(1, 2), Fraction(0), inf},
                                         {F(1, 2), Fraction(1), inf}};
    EXPECT_EQ(got, want);
}

TEST(ExhaustivePaths, MatchesSkeletonGenerator) {
    for (long long q = 2; q <= 13; ++q)
        for (long long p = -q; p <= 2 * q; ++p) {
            Fraction t = F(p, q);
            if (t.den() != q) continue;
            auto generated = enumerate_skeletons(t);
            std::set<Skeleton> a(generated.begin(), generated.end());
            EXPECT_EQ(a, oracle::exhaustive_paths(t, 16)) << t;
        }
}

TEST(CrossCheck, SolverMatchesOracleOnFamily) {
    for (long long n : {11, 13}) {
        auto report = cross_check_type_one(family::knot(n), 64);
        EXPECT_GT(report.solved, 0u);
        EXPECT_TRUE(report.mismatches.empty()) << report.mismatches.front();
    }
}

TEST(CrossCheck, SolverMatchesOracleOnOtherKnots) {
    for (const char* spec : {"1/3,1/3,-1/3", "2/3,-1/3,1/5", "-1/2,1/3,1/7"}) {
        auto report = cross_check_type_one(MontesinosKnot::parse(spec), 48);
        EXPECT_TRUE(report.mismatches.empty()) << spec << ": " << report.mismatches.front();
    }
}
