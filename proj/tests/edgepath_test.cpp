#include "montesinos/edgepath.hpp"
#include "montesinos/oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace montesinos;

namespace {

Fraction F(long long p, long long q) { return Fraction(Integer(p), Integer(q)); }
const Fraction inf = Fraction::infinity();

std::set<std::vector<Fraction>> maximal_paths(const std::set<Skeleton>& all) {
    std::set<std::vector<Fraction>> out;
    for (const auto& a : all) {
        if (a.constant) continue;
        bool extended = false;
        for (const auto& b : all)
            if (!b.constant && b.vertices.size() > a.vertices.size() &&
                std::equal(a.vertices.begin(), a.vertices.end(), b.vertices.begin()))
                extended = true;
        if (!extended) out.insert(a.vertices);
    }
    return out;
}

bool contains(const std::vector<Skeleton>& skeletons, const std::vector<Fraction>& vertices) {
    for (const auto& s : skeletons)
        if (!s.constant && s.vertices == vertices) return true;
    return false;
}

std::vector<Fraction> chain_to_one(long long n) {
    std::vector<Fraction> v;
    for (long long k = n; k >= 1; --k) v.push_back(F(1, k));
    return v;
}

}  // namespace

TEST(Skeletons, OneThirdHasExactlyTwoMaximalPaths) {
    // Exhaustive search is the oracle for the maximal set.
    auto expected = maximal_paths(oracle::exhaustive_paths(F(1, 3), 10));
    std::set<std::vector<Fraction>> want{{F(1, 3), F(1, 2), Fraction(1), inf}, {F(1, 3), Fraction(0), inf}};
    EXPECT_EQ(expected, want);

    auto skeletons = enumerate_skeletons(F(1, 3));
    std::set<Skeleton> got(skeletons.begin(), skeletons.end());
    EXPECT_EQ(maximal_paths(got), want);
}

TEST(Skeletons, TwoFifthsContainsSeifertPath) {
    auto sk = enumerate_skeletons(F(2, 5));
    EXPECT_TRUE(contains(sk, {F(2, 5), F(1, 2), Fraction(0), inf}));
    EXPECT_FALSE(contains(sk, {F(2, 5), F(1, 2), F(1, 3)}));  // would move right
    EXPECT_FALSE(contains(sk, {F(2, 5), F(1, 3), F(1, 2)}));
}

TEST(Skeletons, OneOverNContainsLongAndShortPaths) {
    for (long long n : {11, 13, 21}) {
        auto sk = enumerate_skeletons(F(1, n));
        auto long_path = chain_to_one(n);
        long_path.push_back(inf);
        EXPECT_TRUE(contains(sk, long_path)) << n;
        EXPECT_EQ(long_path.size() - 1, static_cast<std::size_t>(n));
        EXPECT_TRUE(contains(sk, {F(1, n), Fraction(0), inf})) << n;
        // Leaving the chain for <0> would use two sides of a triangle.
        EXPECT_FALSE(contains(sk, {F(1, n), F(1, n - 1), Fraction(0)})) << n;
    }
}

TEST(Skeletons, ConstantMarkerComesFirstAndIntegerTangleRejected) {
    auto sk = enumerate_skeletons(F(-1, 2));
    ASSERT_FALSE(sk.empty());
    EXPECT_TRUE(sk.front().constant);
    EXPECT_EQ(sk.front().tangle, F(-1, 2));
    EXPECT_THROW(enumerate_skeletons(Fraction(3)), std::invalid_argument);
}

TEST(Skeletons, SortedDuplicateFreeAndPrefixClosed) {
    for (long long q = 2; q <= 17; ++q)
        for (long long p = -q; p <= q; ++p) {
            Fraction t = F(p, q);
            if (t.den() != q) continue;
            auto sk = enumerate_skeletons(t);
            EXPECT_TRUE(std::is_sorted(sk.begin(), sk.end()));
            EXPECT_EQ(std::adjacent_find(sk.begin(), sk.end()), sk.end());
            std::set<std::vector<Fraction>> seen;
            for (const auto& s : sk)
                if (!s.constant) seen.insert(s.vertices);
            for (const auto& v : seen) {
                if (v.size() > 1) {
                    EXPECT_TRUE(seen.count(std::vector<Fraction>(v.begin(), v.end() - 1))) << t;
                }
            }
        }
}

TEST(Skeletons, PassIndependentValidatorAndDenominatorBound) {
    for (long long q = 2; q <= 25; ++q)
        for (long long p = -2 * q; p <= 2 * q; ++p) {
            Fraction t = F(p, q);
            if (t.den() != q) continue;
            for (const auto& s : enumerate_skeletons(t)) {
                if (s.constant) continue;
                auto path = Edgepath::along(s.vertices);
                auto violation = check_path(path, t);
                EXPECT_FALSE(violation) << s.str() << ": " << violation->message;
                std::size_t before_axis = 0;
                for (std::size_t i = 1; i < s.vertices.size(); ++i)
                    if (!s.vertices[i - 1].is_integer() && !s.vertices[i - 1].is_infinite()) ++before_axis;
                EXPECT_LE(before_axis, static_cast<std::size_t>(q));
                for (std::size_t i = 1; i < s.vertices.size(); ++i)
                    EXPECT_LT(s.vertices[i].den(), s.vertices[i - 1].den()) << s.str();
            }
        }
}

TEST(EdgeSign, Examples) {
    EXPECT_EQ(edge_sign(traversal_edge(F(2, 5), F(1, 2))), Sign::plus);
    EXPECT_EQ(edge_sign(traversal_edge(F(-1, 2), Fraction(-1))), Sign::minus);
    EXPECT_EQ(edge_sign(traversal_edge(Fraction(0), inf)), Sign::none);
    EXPECT_EQ(edge_sign(traversal_edge(Fraction(0), Fraction(1))), Sign::none);
    EXPECT_EQ(edge_sign(horizontal_edge(F(1, 2))), Sign::none);
}

TEST(EdgeTwist, Examples) {
    auto full = traversal_edge(F(2, 5), F(1, 2));
    EXPECT_EQ(edge_twist({full, edge_sign(full), Fraction(1)}), Fraction(-2));
    auto partial = traversal_edge(F(1, 2), Fraction(0));
    EXPECT_EQ(edge_twist({partial, edge_sign(partial), F(1, 11)}), F(2, 11));
    auto vertical = traversal_edge(Fraction(0), Fraction(1));
    EXPECT_EQ(edge_twist({vertical, edge_sign(vertical), Fraction(1)}), Fraction(0));
    auto to_inf = traversal_edge(Fraction(1), inf);
    EXPECT_EQ(edge_twist({to_inf, edge_sign(to_inf), Fraction(1)}), Fraction(0));
}

TEST(Edgepath, ClassifyType) {
    auto gamma1 = Edgepath::along({F(-1, 2), Fraction(-1)}, F(1, 11));
    EXPECT_EQ(gamma1.endpoint(), (UV{F(10, 21), F(-11, 21)}));
    EXPECT_EQ(classify_type(gamma1), PathType::I);
    auto delta1 = Edgepath::along({F(-1, 2), Fraction(-1), inf});
    EXPECT_EQ(classify_type(delta1), PathType::III);
    auto at_zero = Edgepath::along({F(1, 2), Fraction(0)});
    EXPECT_EQ(classify_type(at_zero), PathType::II);
    auto constant = Edgepath::constant(F(-1, 2), F(4, 7));
    EXPECT_EQ(classify_type(constant), PathType::I);
    EXPECT_EQ(constant.endpoint(), (UV{F(5, 7), F(-1, 2)}));
}

TEST(Edgepath, RendersEndpointFirst) {
    EXPECT_EQ(Edgepath::along({F(-1, 2), Fraction(-1)}, F(1, 11)).str(), "(1/11)<-1> + (10/11)<-1/2> - <-1/2>");
    EXPECT_EQ(Edgepath::along({F(2, 5), F(1, 2), Fraction(0), inf}).str(), "<inf> - <0> - <1/2> - <2/5>");
    EXPECT_EQ(Edgepath::constant(F(-1, 2), F(4, 7)).str(), "(4/7)<-1/2> + (3/7)<-1/2>o");
}

TEST(Edgepath, LengthAndTwist) {
    auto gamma2 = Edgepath::along({F(2, 5), F(1, 2), Fraction(0)}, F(1, 11));
    EXPECT_EQ(gamma2.length(), F(12, 11));
    // -2 * (+1 - 1/11)
    EXPECT_EQ(path_twist(gamma2), F(-20, 11));
    EXPECT_EQ(last_edge_sign(gamma2), Sign::minus);
    EXPECT_EQ(path_twist(Edgepath::constant(F(2, 5), F(1, 2))), Fraction(0));
}

TEST(Edgepath, TwistIsSignedLengthSumAndOddUnderNegation) {
    for (long long q = 2; q <= 15; ++q)
        for (long long p = 1; p < q; ++p) {
            Fraction t = F(p, q);
            if (t.den() != q) continue;
            auto pos = enumerate_skeletons(t);
            auto neg = enumerate_skeletons(-t);
            std::set<std::vector<Fraction>> neg_set;
            for (const auto& s : neg)
                if (!s.constant) neg_set.insert(s.vertices);
            for (const auto& s : pos) {
                if (s.constant || s.edge_count() == 0) continue;
                std::vector<Fraction> mirrored;
                for (const auto& v : s.vertices) mirrored.push_back(-v);
                ASSERT_TRUE(neg_set.count(mirrored)) << s.str();
                for (Fraction w : {Fraction(1), F(1, 3), F(5, 7)}) {
                    auto a = Edgepath::along(s.vertices, w);
                    auto b = Edgepath::along(mirrored, w);
                    EXPECT_EQ(path_twist(a), -path_twist(b));
                    // Independent route: v-differences along the path.
                    Fraction expected;
                    for (std::size_t i = 0; i + 1 < s.vertices.size(); ++i) {
                        const Fraction& from = s.vertices[i];
                        const Fraction& to = s.vertices[i + 1];
                        if (to.is_infinite() || (from.is_integer() && to.is_integer())) continue;
                        Fraction len = (i + 2 == s.vertices.size()) ? w : Fraction(1);
                        expected += Fraction(to > from ? -2 : 2) * len;
                    }
                    EXPECT_EQ(path_twist(a), expected) << a.str();
                }
            }
        }
}

TEST(CheckPath, ReportsViolations) {
    Fraction t = F(2, 5);
    EXPECT_FALSE(check_path(Edgepath::along({t, F(1, 2), Fraction(0)}, F(1, 3)), t));
    EXPECT_EQ(check_path(Edgepath::along({F(1, 2), Fraction(0)}), t)->condition, "E1");
    EXPECT_EQ(check_path(Edgepath::along({t, F(1, 2), t}), t)->condition, "E2");            // retrace
    EXPECT_EQ(check_path(Edgepath::along({t, F(1, 2), F(1, 3)}), t)->condition, "E2");      // triangle
    EXPECT_EQ(check_path(Edgepath::along({t, F(1, 4)}), t)->condition, "E2");               // not an edge
    EXPECT_EQ(check_path(Edgepath::along({F(1, 3), F(2, 5)}), F(1, 3))->condition, "E4");   // rightward
    EXPECT_EQ(check_path(Edgepath::constant(F(1, 3), F(1, 2)), t)->condition, "E1");
    EXPECT_FALSE(check_path(Edgepath::along({F(1, 3), Fraction(0), Fraction(1), Fraction(2)}), F(1, 3)));
    EXPECT_EQ(check_path(Edgepath::along({F(1, 2), Fraction(0), Fraction(1)}), F(1, 2))->condition, "E2");
}
