#include <gtest/gtest.h>

#include <cmath>

#include "mtasep/correlations.hpp"
#include "mtasep/mlq.hpp"
#include "mtasep/modular.hpp"
#include "mtasep/rng.hpp"
#include "mtasep/tasep.hpp"

using namespace mtasep;
using namespace mtasep::tasep;

namespace {

// Outgoing transitions of a word, straight from the rule: every cyclic pair
// whose left letter is larger.
int descents(const Word& w) {
    int d = 0;
    for (int c = 0; c < w.size(); ++c) d += w[c] > w[(c + 1) % w.size()];
    return d;
}

}  // namespace

TEST(Generator, TwoSites) {
    const auto g = buildGenerator(Sector({1, 1}));
    ASSERT_EQ(g.size(), 2u);
    for (std::size_t s = 0; s < 2; ++s) {
        EXPECT_EQ(g.diagonal(s), -1);
        EXPECT_EQ(g.rate(1 - s, s), 1);
    }
}

TEST(Generator, DescentCountsAndColumnSums) {
    const auto g = buildGenerator(Sector::distinct(3));
    EXPECT_EQ(g.size(), 6u);
    EXPECT_EQ(g.diagonal(g.index.at(Word::parse("3,2,1"))), -2);
    for (const auto& counts : std::vector<std::vector<int>>{{1, 1, 1}, {2, 1, 2}, {1, 1, 1, 1, 1}, {1, 2, 1, 1}}) {
        const auto gen = buildGenerator(Sector(counts));
        for (std::size_t tau = 0; tau < gen.size(); ++tau) {
            EXPECT_EQ(gen.diagonal(tau), -descents(gen.states[tau]));
            int column = 0;
            for (std::size_t sigma = 0; sigma < gen.size(); ++sigma) {
                const int r = gen.rate(sigma, tau);
                if (sigma != tau) {
                    EXPECT_TRUE(r == 0 || r == 1);
                }
                column += r;
            }
            EXPECT_EQ(column, 0);
        }
    }
}

TEST(Generator, StateBudget) {
    EXPECT_THROW(buildGenerator(Sector::distinct(7), 1000), BudgetExceeded);
}

TEST(Solve, SmallSectors) {
    const auto two = solveStationary(buildGenerator(Sector({1, 1})));
    EXPECT_EQ(two.probability(Word::parse("1,2")), Rational(1, 2));
    EXPECT_EQ(two.probability(Word::parse("2,1")), Rational(1, 2));
    const auto three = solveStationary(buildGenerator(Sector::distinct(3)));
    EXPECT_EQ(three.probability(Word::parse("3,2,1")), Rational(1, 9));
}

TEST(Solve, QuotientMatchesFullChain) {
    for (const auto& counts : std::vector<std::vector<int>>{{1, 1, 1, 1}, {2, 1, 2}, {1, 1, 1, 1, 1}, {2, 2, 1, 1}}) {
        const auto g = buildGenerator(Sector(counts));
        SolveOptions full;
        full.quotientByRotation = false;
        EXPECT_TRUE(solveStationary(g).sameLaw(solveStationary(g, full)));
    }
}

TEST(Solve, SerialKernelMatchesParallel) {
    const auto g = buildGenerator(Sector({2, 1, 1, 2}));
    SolveOptions serial;
    serial.serial = true;
    SolveOptions parallel;
    parallel.threads = 3;
    EXPECT_TRUE(solveStationary(g, serial).sameLaw(solveStationary(g, parallel)));
}

TEST(Solve, AgreesWithQueueCounting) {
    for (const auto& counts : std::vector<std::vector<int>>{{1, 1, 1, 1, 1}, {1, 2, 1, 2}, {1, 1, 1, 1, 1, 1}}) {
        const Sector s(counts);
        EXPECT_TRUE(solveStationary(buildGenerator(s)).sameLaw(mlq::stationaryFromQueues(s)));
    }
}

TEST(Solve, DenseBudget) {
    SolveOptions tiny;
    tiny.maxDenseSize = 5;
    EXPECT_THROW(solveStationary(buildGenerator(Sector::distinct(5)), tiny), BudgetExceeded);
}

TEST(Modular, SerialAndParallelEliminationAgree) {
    const modular::Modulus mod(modular::primeAt(0));
    Rng rng(7);
    const std::size_t n = 60;
    modular::DenseMatrix a(n);
    std::vector<std::uint64_t> b(n);
    for (std::size_t r = 0; r < n; ++r) {
        b[r] = rng.below(mod.value());
        for (std::size_t c = 0; c < n; ++c) a.at(r, c) = rng.below(mod.value());
    }
    const auto x = modular::solveSerial(a, b, mod);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(modular::solve(a, b, mod, 4), x);
    for (std::size_t r = 0; r < n; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < n; ++c) acc = mod.add(acc, mod.mul(a.at(r, c), (*x)[c]));
        EXPECT_EQ(acc, b[r]);
    }
}

TEST(Modular, Reconstruction) {
    const BigInt p(static_cast<unsigned long>(modular::primeAt(0)));
    const Rational v(-37, 1024);
    BigInt inv;
    const BigInt den = v.denominator();
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    BigInt residue = (v.numerator() * inv) % p;
    if (residue < 0) residue += p;
    EXPECT_EQ(modular::reconstruct(residue, p), v);
}

TEST(Simulate, TwoSitesIsFair) {
    SimulationOptions o;
    o.horizon = 2e4;
    o.seed = 11;
    const auto s = simulate(Sector({1, 1}), o, {PatternQuery::parse("w1=1,w2=2")});
    ASSERT_EQ(s.estimates.size(), 1u);
    EXPECT_LE(std::abs(s.estimates[0].estimate - 0.5), 3 * s.estimates[0].standardError);
    EXPECT_GT(s.events, 0u);
}

TEST(Simulate, ReproducibleFromSeed) {
    SimulationOptions o;
    o.horizon = 5e3;
    o.seed = 99;
    const std::vector<SimPattern> p{OrderQuery{1, 2}, PatternQuery::parse("w1=2,w2=1")};
    const auto a = simulate(Sector::distinct(6), o, p);
    const auto b = simulate(Sector::distinct(6), o, p);
    EXPECT_EQ(a.eventHash, b.eventHash);
    EXPECT_EQ(a.events, b.events);
    EXPECT_EQ(a.estimates[0].estimate, b.estimates[0].estimate);
    o.seed = 100;
    EXPECT_NE(simulate(Sector::distinct(6), o, p).eventHash, a.eventHash);
}

TEST(Simulate, ParallelTrajectoriesMatchSequentialRuns) {
    SimulationOptions o;
    o.horizon = 2e3;
    o.seed = 5;
    const std::vector<SimPattern> p{OrderQuery{1, 2}};
    const auto many = simulateMany(Sector::distinct(5), o, p, 4, 4);
    ASSERT_EQ(many.size(), 4u);
    for (std::uint64_t k = 0; k < 4; ++k) {
        SimulationOptions one = o;
        one.seed = Rng::split(o.seed, k);
        const auto single = simulate(Sector::distinct(5), one, p);
        EXPECT_EQ(single.eventHash, many[k].eventHash);
        EXPECT_EQ(single.estimates[0].estimate, many[k].estimates[0].estimate);
    }
}

TEST(Simulate, AdjacentPairsAgainstExactLaw) {
    const int n = 4;
    const auto exact = mlq::stationaryFromQueues(Sector::distinct(n));
    std::vector<SimPattern> patterns;
    std::vector<double> truth;
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            const auto q = PatternQuery::consecutive({a, b});
            patterns.push_back(q);
            truth.push_back(correlations::marginal(exact, q).toDouble());
        }
    }
    SimulationOptions o;
    o.horizon = 1e5;
    o.seed = 3;
    const auto s = simulate(Sector::distinct(n), o, patterns);
    int outside = 0;
    for (std::size_t k = 0; k < truth.size(); ++k) {
        outside += std::abs(s.estimates[k].estimate - truth[k]) > 3 * s.estimates[k].standardError;
    }
    EXPECT_LE(outside, 1);
}

TEST(Simulate, RejectsBadArguments) {
    SimulationOptions o;
    EXPECT_THROW(simulate(Sector::distinct(3), o, {}), InvalidArgument);
    o.burnIn = o.horizon;
    EXPECT_THROW(simulate(Sector::distinct(3), o, {OrderQuery{}}), InvalidArgument);
    EXPECT_THROW(PatternQuery::parse("w1=9").validate(Sector::distinct(3)), InvalidArgument);
    EXPECT_THROW(parseSimPattern("w1<w2"), InvalidArgument);
}
