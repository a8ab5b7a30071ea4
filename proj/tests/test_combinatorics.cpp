#include <gtest/gtest.h>

#include <functional>

#include "mtasep/combinatorics.hpp"

using namespace mtasep;

namespace {

// Dyck paths of semilength e with exactly `peaks` peaks, by walking them all.
long dyckPaths(int e, int peaks) {
    long count = 0;
    std::function<void(int, int, int, bool)> walk = [&](int up, int down, int seen, bool lastUp) {
        if (up == e && down == e) {
            count += seen == peaks;
            return;
        }
        if (up < e) walk(up + 1, down, seen, true);
        if (down < up) walk(up, down + 1, seen + (lastUp ? 1 : 0), false);
    };
    walk(0, 0, 0, false);
    return count;
}

BigInt pascal(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<BigInt> row{1};
    for (long r = 1; r <= n; ++r) {
        std::vector<BigInt> next(static_cast<std::size_t>(r + 1), 1);
        for (long c = 1; c < r; ++c) next[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c - 1)] + row[static_cast<std::size_t>(c)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace

TEST(Binom, SmallValues) {
    EXPECT_EQ(binom(5, 2), 10);
    EXPECT_EQ(binom(7, -1), 0);
    EXPECT_EQ(binom(3, 5), 0);
    EXPECT_EQ(binom(0, 0), 1);
    EXPECT_EQ(binom(-2, 1), 0);
}

TEST(Binom, MatchesPascalTriangle) {
    for (long n = 0; n <= 40; ++n) {
        for (long k = -2; k <= n + 2; ++k) EXPECT_EQ(binom(n, k), pascal(n, k)) << n << " " << k;
    }
}

TEST(Narayana, Examples) {
    EXPECT_EQ(narayana(1, 0), 1);
    EXPECT_EQ(narayana(3, 1), 3);
    EXPECT_EQ(narayana(4, 0), 1);
    EXPECT_THROW(narayana(0, 0), InvalidArgument);
}

TEST(Narayana, CountsDyckPathsByPeaks) {
    for (int e = 1; e <= 9; ++e) {
        for (int f = 0; f < e; ++f) EXPECT_EQ(narayana(e, f), dyckPaths(e, f + 1)) << e << " " << f;
    }
}

TEST(Narayana, RowSumsAreCatalan) {
    for (int e = 1; e <= 25; ++e) {
        BigInt sum = 0;
        for (int f = 0; f < e; ++f) sum += narayana(e, f);
        EXPECT_EQ(sum, catalan(e));
    }
    EXPECT_EQ(catalan(10), 16796);
}

TEST(Rational, LowestTermsAndArithmetic) {
    const Rational a(6, 8);
    EXPECT_EQ(a.numerator(), 3);
    EXPECT_EQ(a.denominator(), 4);
    EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(1, 3) * Rational(3, 5), Rational(1, 5));
    EXPECT_EQ(Rational(1, 3) / Rational(2, 3), Rational(1, 2));
    EXPECT_EQ((Rational(1, 3) - Rational(1, 2)).toString(), "-1/6");
    EXPECT_EQ(Rational(4, 2).toString(), "2");
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_THROW(Rational(1, 0), InvalidArgument);
}

TEST(ExactDivide, RejectsInexactQuotients) {
    EXPECT_EQ(exactDivide(BigInt(12), BigInt(4), "test"), 3);
    EXPECT_THROW(exactDivide(BigInt(13), BigInt(4), "test"), InternalError);
}
