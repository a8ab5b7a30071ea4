#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "mtasep/mlq.hpp"
#include "mtasep/rng.hpp"
#include "mtasep/tasep.hpp"

using namespace mtasep;
using namespace mtasep::mlq;

namespace {

MultilineQueue figureQueue() {
    // Occupied sites of the figure, shifted to 0-based columns.
    return MultilineQueue::fromColumns(9, {{2, 6}, {5, 6, 7}, {0, 1, 3, 5, 8}, {0, 1, 3, 4, 5, 6, 7}});
}

std::uint64_t countQueues(const Sector& s) {
    std::uint64_t n = 0;
    auto stream = enumerateQueues(s);
    MultilineQueue q;
    while (stream.next(q)) {
        EXPECT_TRUE(q.fits(s));
        ++n;
    }
    return n;
}

MultilineQueue randomQueue(const Sector& s, Rng& rng) {
    std::vector<std::vector<int>> rows;
    for (int i = 1; i < s.species(); ++i) {
        std::vector<int> cols(static_cast<std::size_t>(s.ringSize()));
        for (int c = 0; c < s.ringSize(); ++c) cols[static_cast<std::size_t>(c)] = c;
        for (int k = s.ringSize() - 1; k > 0; --k) {
            std::swap(cols[static_cast<std::size_t>(k)], cols[rng.below(static_cast<std::uint64_t>(k) + 1)]);
        }
        cols.resize(static_cast<std::size_t>(s.prefix(i)));
        std::sort(cols.begin(), cols.end());
        rows.push_back(cols);
    }
    return MultilineQueue::fromColumns(s.ringSize(), rows);
}

}  // namespace

TEST(Queues, CountsMatchBinomialProducts) {
    EXPECT_EQ(countQueues(Sector({1, 1})), 2u);
    EXPECT_EQ(countQueues(Sector({1, 1, 1})), 9u);
    for (const auto& counts : std::vector<std::vector<int>>{{2, 1, 2}, {1, 1, 1, 1}, {1, 2, 1, 2}, {3, 1, 1}}) {
        const Sector s(counts);
        EXPECT_EQ(BigInt(countQueues(s)), s.queueCount());
    }
    EXPECT_EQ(Sector({2, 1, 2, 2, 2}).queueCount(), BigInt(36) * 84 * 126 * 36);
}

TEST(Queues, BudgetIsEnforced) {
    EXPECT_THROW(enumerateQueues(Sector::distinct(5), 100), BudgetExceeded);
    EXPECT_THROW(stationaryFromQueues(Sector::distinct(6), {1000, 0}), BudgetExceeded);
}

TEST(BullyPath, FigureExample) {
    const Sector s({2, 1, 2, 2, 2});
    EXPECT_EQ(bullyProject(figureQueue(), s), Word::parse("1,2,5,3,3,1,4,4,5"));
}

TEST(BullyPath, SinglePath) {
    const auto q = MultilineQueue::fromColumns(2, {{0}});
    EXPECT_EQ(bullyProject(q, Sector({1, 1})), Word::parse("1,2"));
}

TEST(BullyPath, OrderOfSameRowPathsDoesNotMatter) {
    const Sector s({2, 1, 2, 2, 2});
    const auto q = figureQueue();
    auto starts = pathStarts(q, s);
    ASSERT_EQ(starts[0].size(), 2u);
    std::vector<PathStart> order;
    for (const auto& row : starts) order.insert(order.end(), row.begin(), row.end());
    const Word expected = bullyProject(q, s);
    EXPECT_EQ(bullyProjectOrdered(q, s, order), expected);
    std::swap(order[0], order[1]);
    EXPECT_EQ(bullyProjectOrdered(q, s, order), expected);
}

TEST(BullyPath, RejectsInterleavedRows) {
    const Sector s({2, 1, 2, 2, 2});
    const auto q = figureQueue();
    auto starts = pathStarts(q, s);
    std::vector<PathStart> order;
    for (const auto& row : starts) order.insert(order.end(), row.begin(), row.end());
    std::swap(order[1], order[2]);  // a row-2 start before the last row-1 start
    EXPECT_THROW(bullyProjectOrdered(q, s, order), InvalidArgument);
}

TEST(BullyPath, RandomSameRowOrders) {
    Rng rng(2024);
    for (const auto& counts : std::vector<std::vector<int>>{{2, 2, 1}, {1, 2, 1, 2}, {2, 1, 1, 1, 2}, {1, 1, 1, 1, 1}}) {
        const Sector s(counts);
        for (int trial = 0; trial < 500; ++trial) {
            const auto q = randomQueue(s, rng);
            ASSERT_TRUE(q.fits(s));
            const Word expected = bullyProject(q, s);
            EXPECT_TRUE(expected.belongsTo(s));
            auto starts = pathStarts(q, s);
            std::vector<PathStart> order;
            for (auto& row : starts) {
                for (std::size_t k = row.size(); k > 1; --k) std::swap(row[k - 1], row[rng.below(k)]);
                order.insert(order.end(), row.begin(), row.end());
            }
            EXPECT_EQ(bullyProjectOrdered(q, s, order), expected);
        }
    }
}

TEST(Stationary, ReverseWordHasOneQueue) {
    const auto d = stationaryFromQueues(Sector::distinct(3));
    EXPECT_EQ(d.probability(Word::parse("3,2,1")), Rational(1, 9));
    EXPECT_EQ(d.weight(Word::parse("3,2,1")), 1);
    for (const auto& counts : std::vector<std::vector<int>>{{2, 1, 2}, {1, 1, 1, 1, 1}, {1, 3, 2}}) {
        const Sector s(counts);
        std::vector<int> letters;
        for (int sp = s.species(); sp >= 1; --sp) letters.insert(letters.end(), static_cast<std::size_t>(s.count(sp)), sp);
        EXPECT_EQ(stationaryFromQueues(s).weight(Word::fromLetters(letters)), 1);
    }
}

TEST(Stationary, SumsToOne) {
    for (const auto& counts : std::vector<std::vector<int>>{{1, 1}, {2, 1, 2}, {1, 1, 1, 1, 1}, {2, 2, 1, 1}}) {
        const auto d = stationaryFromQueues(Sector(counts));
        Rational sum;
        for (const auto& [w, c] : d.entries()) sum += d.probability(w);
        EXPECT_EQ(sum, Rational(1));
        EXPECT_EQ(d.total(), Sector(counts).queueCount());
    }
}

TEST(Stationary, ParallelMatchesSerialReference) {
    for (const auto& counts : std::vector<std::vector<int>>{{1, 1, 1, 1, 1}, {2, 1, 2, 1}, {1, 1, 1, 1, 1, 1}}) {
        const Sector s(counts);
        const auto serial = stationaryFromQueuesSerial(s);
        for (int threads : {1, 2, 4}) {
            const auto parallel = stationaryFromQueues(s, {kDefaultQueueBudget, threads});
            EXPECT_TRUE(parallel.sameLaw(serial));
            EXPECT_EQ(parallel.total(), serial.total());
        }
    }
}

TEST(Stationary, AgreesWithGeneratorKernel) {
    const Sector s = Sector::distinct(4);
    const auto byQueues = stationaryFromQueues(s);
    const auto byKernel = tasep::solveStationary(tasep::buildGenerator(s));
    EXPECT_EQ(byQueues.size(), 24u);
    EXPECT_TRUE(byQueues.sameLaw(byKernel));
}
