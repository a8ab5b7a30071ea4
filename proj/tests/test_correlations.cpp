#include <gtest/gtest.h>

#include <numeric>

#include "mtasep/correlations.hpp"
#include "mtasep/mlq.hpp"
#include "mtasep/tasep.hpp"

using namespace mtasep;
using namespace mtasep::correlations;

namespace {

// n * C(n,2) * E_{w1,w2} for n = 5.
constexpr int kTable[5][5] = {
    {0, 4, 2, 2, 2},
    {1, 0, 5, 2, 2},
    {2, 1, 0, 5, 2},
    {3, 2, 1, 0, 4},
    {4, 3, 2, 1, 0},
};

const ExactDist& fullLaw(int n) {
    static std::map<int, ExactDist> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, mlq::stationaryFromQueues(Sector::distinct(n))).first;
    return it->second;
}

// Brute-force sum over the full distinct-species law.
Rational direct(int n, const PatternQuery& q) {
    const auto& d = fullLaw(n);
    BigInt hit = 0;
    for (const auto& [w, c] : d.entries()) {
        if (q.matches(w)) hit += c;
    }
    return Rational(hit, d.total());
}

}  // namespace

TEST(Marginal, SingleSite) {
    for (int n = 2; n <= 6; ++n) {
        for (int i = 1; i <= n; ++i) EXPECT_EQ(marginal(fullLaw(n), PatternQuery::parse("w1=" + std::to_string(i))), Rational(1, n));
    }
}

TEST(Marginal, TableEntry) {
    EXPECT_EQ(marginal(fullLaw(5), PatternQuery::parse("w1=4,w2=1")), Rational(3, 50));
}

TEST(Marginal, RejectsAbsentSpecies) {
    EXPECT_THROW(marginal(fullLaw(3), PatternQuery::parse("w1=4")), InvalidArgument);
    EXPECT_THROW(marginal(fullLaw(3), PatternQuery::parse("w5=1")), InvalidArgument);
}

TEST(TwoPoint, PrintedTable) {
    const auto& d = fullLaw(5);
    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; b <= 5; ++b) {
            if (a == b) continue;
            const Rational printed(kTable[a - 1][b - 1], 50);
            EXPECT_EQ(marginal(d, PatternQuery::consecutive({a, b})), printed) << a << "," << b;
            EXPECT_EQ(eAdjacent(5, a, b), printed) << a << "," << b;
        }
    }
    EXPECT_EQ(eAdjacent(5, 2, 1), Rational(1, 50));
    EXPECT_EQ(eAdjacent(5, 1, 2), Rational(4, 50));
    EXPECT_EQ(eAdjacent(5, 1, 3), Rational(1, 25));
}

TEST(Projection, Shapes) {
    const auto two = projectSector(7, {3, 5});
    EXPECT_EQ(two.sector, Sector({2, 1, 1, 1, 2}));
    EXPECT_EQ(two.project(3), 2);
    EXPECT_EQ(two.project(5), 4);
    EXPECT_EQ(two.project(1), 1);
    EXPECT_EQ(two.project(7), 5);
    EXPECT_EQ(projectSector(6, {1, 2, 3, 4, 5, 6}).sector, Sector::distinct(6));
    EXPECT_EQ(projectSector(6, {1, 2}).sector, Sector({1, 1, 4}));
    EXPECT_THROW(projectSector(5, {3, 2}), InvalidArgument);
}

TEST(Projection, CutPointSumsMatchClosedForm) {
    // P(w1 = 3, w2 = 2) in the sector (s, t, n-s-t) is a block sum of the
    // distinct-species two-point table.
    for (int n = 3; n <= 6; ++n) {
        for (int s = 0; s < n; ++s) {
            for (int t = 1; s + t < n; ++t) {
                std::vector<int> counts;
                if (s) counts.push_back(s);
                counts.push_back(t);
                counts.push_back(n - s - t);
                const auto d = mlq::stationaryFromQueues(Sector(counts));
                const int two = s ? 2 : 1;
                const int three = two + 1;
                const Rational cut = marginal(d, PatternQuery::consecutive({three, two}));
                Rational block;
                for (int j = s + t + 1; j <= n; ++j) {
                    for (int i = s + 1; i <= s + t; ++i) block += direct(n, PatternQuery::consecutive({j, i}));
                }
                EXPECT_EQ(cut, block);
                EXPECT_EQ(cut, Rational(static_cast<long>(t) * (n - s) * (n - s - t), static_cast<long>(n) * n * (n - 1)));
            }
        }
    }
}

TEST(Oracle, ProjectedMarginalsEqualDirectSums) {
    for (int n : {5, 6}) {
        MarginalOracle oracle(n);
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                if (a == b) continue;
                for (int pos = 2; pos <= n; ++pos) {
                    const PatternQuery q{{{1, a}, {pos, b}}};
                    EXPECT_EQ(oracle.probability(q), direct(n, q));
                }
                for (int c = 1; c <= n; ++c) {
                    if (c == a || c == b) continue;
                    const auto q = PatternQuery::consecutive({a, b, c});
                    EXPECT_EQ(oracle.probability(q), direct(n, q));
                }
            }
        }
        EXPECT_EQ(oracle.probability(PatternQuery::parse("w1=2,w3=2")), Rational(0));
    }
}

TEST(Oracle, ParallelAndSerialEnumerationAgree) {
    MarginalOracle one(6, {mlq::kDefaultQueueBudget, 1});
    MarginalOracle four(6, {mlq::kDefaultQueueBudget, 4});
    const auto q = PatternQuery::consecutive({5, 2, 4});
    EXPECT_EQ(one.probability(q), four.probability(q));
}

TEST(Oracle, BudgetPropagates) {
    MarginalOracle tight(7, {1000, 0});
    EXPECT_THROW(tight.probability(PatternQuery::consecutive({5, 2, 4})), BudgetExceeded);
}

TEST(TwoPoint, AdjacentMatchesEnumerationUpToSeven) {
    for (int n = 2; n <= 7; ++n) {
        MarginalOracle oracle(n);
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                if (a != b) {
                    EXPECT_EQ(eAdjacent(n, a, b), oracle.nearest({a, b})) << n << ":" << a << "," << b;
                }
            }
        }
    }
}

TEST(Distance, Examples) {
    EXPECT_EQ(eDistance(5, 4, 1, 2), eAdjacent(5, 4, 1));
    EXPECT_EQ(eDistance(5, 4, 1, 2), Rational(3, 50));
    for (int n = 3; n <= 9; ++n) {
        for (int i = 1; i < n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                for (int a = 2; a <= std::min(n, j - i); ++a) EXPECT_EQ(eDistance(n, i, j, a), Rational(1, n * n));
            }
        }
    }
    for (int a = 2; a <= 5; ++a) EXPECT_EQ(eDistance(5, 5, 4, a), Rational(a - 1, 50));
}

TEST(Distance, MatchesEnumeration) {
    for (int n = 3; n <= 6; ++n) {
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                if (a == b) continue;
                for (int pos = 2; pos <= n; ++pos) {
                    EXPECT_EQ(eDistance(n, a, b, pos), direct(n, PatternQuery{{{1, a}, {pos, b}}}));
                }
            }
        }
    }
}

TEST(TwoPoint, Aggregates) {
    EXPECT_EQ(aggregateTwoPoint(3).descent, Rational(4, 9));
    for (int n = 2; n <= 12; ++n) {
        const auto g = aggregateTwoPoint(n);
        EXPECT_EQ(g.descent + g.stepUp + g.jumpUp, Rational(1));
        EXPECT_EQ(g.descent, Rational(1, 3) + Rational(1, 3 * n));
    }
    Rational descent, step, jump;
    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; b <= 5; ++b) {
            if (a == b) continue;
            const Rational e(kTable[a - 1][b - 1], 50);
            (a > b ? descent : (a == b - 1 ? step : jump)) += e;
        }
    }
    const auto g5 = aggregateTwoPoint(5);
    EXPECT_EQ(g5.descent, descent);
    EXPECT_EQ(g5.stepUp, step);
    EXPECT_EQ(g5.jumpUp, jump);
}

TEST(ThreePoint, SmallestCase) {
    EXPECT_EQ(eThree(3, Pattern3::P321, 1, 2, 3).value, Rational(1, 9));
    EXPECT_FALSE(eThree(3, Pattern3::P321, 1, 2, 3).conjectural);
    const auto inc = eThree(3, Pattern3::P123, 1, 2, 3);
    EXPECT_TRUE(inc.conjectural);
    EXPECT_EQ(inc.value, Rational(2, 9));
    EXPECT_EQ(inc.value, fullLaw(3).probability(Word::parse("1,2,3")));
}

TEST(ThreePoint, GappedIncreasingIsUniform) {
    for (int n = 6; n <= 9; ++n) {
        const auto v = eThree(n, Pattern3::P123, 1, 3, 5);
        EXPECT_TRUE(v.conjectural);
        EXPECT_EQ(v.value, Rational(1, n * n * n));
    }
}

TEST(ThreePoint, MatchesEnumeration) {
    for (int n = 4; n <= 6; ++n) {
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                for (int c = 1; c <= n; ++c) {
                    if (a == b || b == c || a == c) continue;
                    const auto v = eThreeAt(n, a, b, c);
                    EXPECT_EQ(v.value, direct(n, PatternQuery::consecutive({a, b, c}))) << n << ":" << a << b << c;
                }
            }
        }
    }
}

TEST(ThreePoint, PatternNames) {
    EXPECT_EQ(patternOf(3, 1, 2), Pattern3::P312);
    EXPECT_EQ(patternOf(1, 2, 3), Pattern3::P123);
    EXPECT_EQ(parsePattern3("231"), Pattern3::P231);
    EXPECT_EQ(toString(Pattern3::P213), "213");
    EXPECT_THROW(parsePattern3("221"), InvalidArgument);
}

TEST(Decreasing, Examples) {
    EXPECT_EQ(eDecreasing(3, {3, 2, 1}), Rational(1, 9));
    for (int n = 2; n <= 7; ++n) {
        for (int i = 1; i <= n; ++i) EXPECT_EQ(eDecreasing(n, {i}), Rational(1, n));
        for (int j = 2; j <= n; ++j) {
            for (int i = 1; i < j; ++i) EXPECT_EQ(eDecreasing(n, {j, i}), eAdjacent(n, j, i));
        }
    }
    EXPECT_THROW(eDecreasing(5, {2, 3}), InvalidArgument);
}

TEST(Decreasing, MatchesEnumeration) {
    for (int n = 4; n <= 6; ++n) {
        const auto& d = fullLaw(n);
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> labels;
            for (int l = n; l >= 1; --l) {
                if (mask & (1 << (l - 1))) labels.push_back(l);
            }
            EXPECT_EQ(eDecreasing(n, labels), marginal(d, PatternQuery::consecutive(labels)));
        }
    }
}

TEST(ThreePoint, AggregateRows) {
    for (int n = 5; n <= 9; ++n) {
        const auto rows = aggregateThreePoint(n);
        ASSERT_EQ(rows.size(), 13u);
        EXPECT_EQ(rows[0].value, Rational((n + 1) * (n + 2), 30 * n * (n - 1)));
        EXPECT_FALSE(rows[0].conjectural);
        EXPECT_EQ(rows[9].value, Rational((n - 2) * (n - 3) * (n - 4), 6 * n * n * n));
        EXPECT_TRUE(rows[9].conjectural);
        Rational sum;
        for (const auto& r : rows) sum += r.value;
        EXPECT_EQ(sum, Rational(1));
    }
}

TEST(ThreePoint, AggregateRowsAgainstEnumeratedSums) {
    const int n = 6;
    const auto rows = aggregateThreePoint(n);
    std::vector<Rational> sums(rows.size());
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            for (int c = 1; c <= n; ++c) {
                if (a == b || b == c || a == c) continue;
                sums[static_cast<std::size_t>(aggregateRowOf(n, a, b, c))] += direct(n, PatternQuery::consecutive({a, b, c}));
            }
        }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) EXPECT_EQ(rows[r].value, sums[r]) << rows[r].pattern;
}

TEST(Trend, ApproachesContinuumValues) {
    const auto points = densityTrend();
    ASSERT_EQ(points.size(), 3u);
    for (const auto& p : points) {
        EXPECT_EQ(p.ns, (std::vector<int>{20, 40, 80}));
        EXPECT_TRUE(p.monotone) << p.quantity;
    }
}
