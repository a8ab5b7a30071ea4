#pragma once

// Multiline queues: enumeration, the bully-path projection onto ring words,
// and stationary laws obtained by counting queues per projected word.
//
// Columns are 0-based and cyclic. Row i (1-based, from the top) of a queue in
// sector m has exactly M_i occupied sites and is stored as a bit mask.

#include <cstdint>
#include <span>
#include <vector>

#include "mtasep/exact_dist.hpp"
#include "mtasep/sector.hpp"

namespace mtasep::mlq {

inline constexpr std::uint64_t kDefaultQueueBudget = 200'000'000;

struct MultilineQueue {
    int ringSize = 0;
    std::vector<std::uint32_t> rows;  // n-1 rows, top first

    /// Builds a queue from 0-based occupied columns per row.
    static MultilineQueue fromColumns(int ringSize, const std::vector<std::vector<int>>& occupied);

    [[nodiscard]] bool occupied(int row, int column) const { return (rows[static_cast<std::size_t>(row)] >> column) & 1u; }
    [[nodiscard]] bool fits(const Sector& sector) const;

    friend bool operator==(const MultilineQueue&, const MultilineQueue&) = default;
};

/// Streams every queue of a sector exactly once. Each row runs through its
/// configurations in colexicographic order; the top row varies slowest.
class QueueStream {
public:
    QueueStream(const Sector& sector, std::uint64_t budget = kDefaultQueueBudget);

    bool next(MultilineQueue& out);

private:
    int ringSize_;
    std::vector<int> rowCounts_;
    std::vector<std::uint32_t> current_;
    bool started_ = false;
    bool exhausted_ = false;
};

/// Requires n >= 2; throws BudgetExceeded when the queue count is above budget.
QueueStream enumerateQueues(const Sector& sector, std::uint64_t budget = kDefaultQueueBudget);

/// The bully-path projection. Rows are processed top to bottom; within a row
/// lower classes route first and same-class paths route left to right.
Word bullyProject(const MultilineQueue& queue, const Sector& sector);

/// A bully path start: 1-based row and 0-based column.
struct PathStart {
    int row = 0;
    int column = 0;
};

/// Runs whole bully paths one at a time in the given order. The order must
/// list every path start of row 1, then every start of row 2, and so on; the
/// starts within a row may be permuted freely. Orderings that interleave rows
/// or name a site that is not a path start are rejected.
Word bullyProjectOrdered(const MultilineQueue& queue, const Sector& sector, std::span<const PathStart> order);

/// Path starts of each row (row 1 first), as produced by left-to-right routing.
std::vector<std::vector<PathStart>> pathStarts(const MultilineQueue& queue, const Sector& sector);

struct EnumerationOptions {
    std::uint64_t budget = kDefaultQueueBudget;
    /// 0 leaves the OpenMP default.
    int threads = 0;
};

/// P(w) = #{q : B(q) = w} / prod C(N, M_i). Sharded over the leading rows'
/// configurations, each shard counting into a private table.
ExactDist stationaryFromQueues(const Sector& sector, const EnumerationOptions& options = {});

/// Single-threaded reference: streams every queue and projects it with whole
/// bully paths. Used by tests and the benchmark.
ExactDist stationaryFromQueuesSerial(const Sector& sector, std::uint64_t budget = kDefaultQueueBudget);

}  // namespace mtasep::mlq
