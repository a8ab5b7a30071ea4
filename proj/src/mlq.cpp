#include "mtasep/mlq.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>

#include <omp.h>

namespace mtasep::mlq {

namespace {

constexpr std::uint32_t lowMask(int bits) { return bits >= 32 ? ~0u : ((1u << bits) - 1u); }

/// Next integer with the same popcount (Gosper). Returns 0 past the last
/// configuration of `ringSize` bits.
std::uint32_t nextCombination(std::uint32_t x, int ringSize) {
    if (x == 0) return 0;
    const std::uint32_t c = x & (~x + 1u);
    const std::uint32_t r = x + c;
    if (r == 0) return 0;
    const std::uint32_t next = (((r ^ x) >> 2) / c) | r;
    return (next & ~lowMask(ringSize)) ? 0 : next;
}

std::vector<int> rowCounts(const Sector& sector) {
    std::vector<int> counts;
    for (int i = 1; i < sector.species(); ++i) counts.push_back(sector.prefix(i));
    return counts;
}

void checkBudget(const Sector& sector, std::uint64_t budget) {
    if (sector.queueCount() > BigInt(static_cast<unsigned long>(budget))) {
        throw BudgetExceeded("sector (" + sector.toString() + ") has " + toString(sector.queueCount()) +
                             " multiline queues, above the budget of " + std::to_string(budget));
    }
}

/// Cyclically first available site at or to the right of `column`.
inline int claimFrom(std::uint32_t& available, int column) {
    const std::uint32_t right = available & (~0u << column);
    const std::uint32_t pick = right ? (right & (~right + 1u)) : (available & (~available + 1u));
    if (pick == 0) {
        throw InternalError("bully path found no free occupied site in the next row");
    }
    available &= ~pick;
    return std::countr_zero(pick);
}

/// Column masks of the bully paths, by class, after some row.
struct PathFrame {
    std::array<std::uint32_t, kMaxSpecies + 1> byClass{};
};

/// Routes all paths of classes 1..classes from the current row into `nextRow`;
/// the unclaimed occupied sites of `nextRow` start class classes+1.
inline void advance(const PathFrame& in, int classes, std::uint32_t nextRow, PathFrame& out) {
    std::uint32_t available = nextRow;
    for (int k = 1; k <= classes; ++k) {
        std::uint32_t paths = in.byClass[static_cast<std::size_t>(k)];
        std::uint32_t landed = 0;
        while (paths) {
            const int column = std::countr_zero(paths);
            paths &= paths - 1;
            landed |= 1u << claimFrom(available, column);
        }
        out.byClass[static_cast<std::size_t>(k)] = landed;
    }
    out.byClass[static_cast<std::size_t>(classes + 1)] = available;
}

inline std::uint64_t packFrame(const PathFrame& frame, int species, int ringSize) {
    std::uint64_t key = 0;
    std::uint32_t covered = 0;
    for (int k = 1; k < species; ++k) {
        std::uint32_t cols = frame.byClass[static_cast<std::size_t>(k)];
        covered |= cols;
        while (cols) {
            const int c = std::countr_zero(cols);
            cols &= cols - 1;
            key |= static_cast<std::uint64_t>(k) << (4 * c);
        }
    }
    std::uint32_t rest = lowMask(ringSize) & ~covered;
    while (rest) {
        const int c = std::countr_zero(rest);
        rest &= rest - 1;
        key |= static_cast<std::uint64_t>(species) << (4 * c);
    }
    return key;
}

using CountTable = std::unordered_map<std::uint64_t, std::uint64_t>;

struct ShardWalker {
    const std::vector<int>& counts;
    int species;
    int ringSize;
    CountTable& table;
    std::vector<PathFrame> frames;

    // frames[d] describes the paths after row d+1 has been placed.
    void walk(int depth) {
        const int rows = species - 1;
        if (depth == rows) {
            ++table[packFrame(frames[static_cast<std::size_t>(rows - 1)], species, ringSize)];
            return;
        }
        const int k = counts[static_cast<std::size_t>(depth)];
        for (std::uint32_t row = lowMask(k); row != 0; row = nextCombination(row, ringSize)) {
            place(depth, row);
            walk(depth + 1);
        }
    }

    void place(int depth, std::uint32_t row) {
        if (depth == 0) {
            frames[0] = PathFrame{};
            frames[0].byClass[1] = row;
        } else {
            advance(frames[static_cast<std::size_t>(depth - 1)], depth, row, frames[static_cast<std::size_t>(depth)]);
        }
    }
};

ExactDist toDist(const Sector& sector, const CountTable& table) {
    std::vector<ExactDist::Entry> entries;
    entries.reserve(table.size());
    for (const auto& [key, count] : table) {
        entries.emplace_back(Word::fromPacked(key, sector.ringSize()), BigInt(static_cast<unsigned long>(count)));
    }
    return ExactDist(sector, std::move(entries));
}

ExactDist singleSpecies(const Sector& sector) {
    std::vector<int> letters(static_cast<std::size_t>(sector.ringSize()), 1);
    return ExactDist(sector, {{Word::fromLetters(letters), BigInt(1)}});
}

}  // namespace

MultilineQueue MultilineQueue::fromColumns(int ringSize, const std::vector<std::vector<int>>& occupied) {
    MultilineQueue q;
    q.ringSize = ringSize;
    for (const auto& row : occupied) {
        std::uint32_t mask = 0;
        for (const int c : row) {
            if (c < 0 || c >= ringSize) throw InvalidArgument("MultilineQueue: column out of range");
            mask |= 1u << c;
        }
        q.rows.push_back(mask);
    }
    return q;
}

bool MultilineQueue::fits(const Sector& sector) const {
    if (ringSize != sector.ringSize() || static_cast<int>(rows.size()) != sector.species() - 1) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] & ~lowMask(ringSize)) return false;
        if (std::popcount(rows[i]) != sector.prefix(static_cast<int>(i) + 1)) return false;
    }
    return true;
}

QueueStream::QueueStream(const Sector& sector, std::uint64_t budget)
    : ringSize_(sector.ringSize()), rowCounts_(rowCounts(sector)) {
    if (sector.species() < 2) throw InvalidArgument("enumerateQueues: at least two species required");
    checkBudget(sector, budget);
}

bool QueueStream::next(MultilineQueue& out) {
    if (exhausted_) return false;
    if (!started_) {
        started_ = true;
        current_.clear();
        for (const int k : rowCounts_) current_.push_back(lowMask(k));
    } else {
        std::size_t i = current_.size();
        while (i-- > 0) {
            const std::uint32_t next = nextCombination(current_[i], ringSize_);
            if (next != 0) {
                current_[i] = next;
                break;
            }
            current_[i] = lowMask(rowCounts_[i]);
            if (i == 0) {
                exhausted_ = true;
                return false;
            }
        }
    }
    out.ringSize = ringSize_;
    out.rows = current_;
    return true;
}

QueueStream enumerateQueues(const Sector& sector, std::uint64_t budget) { return QueueStream(sector, budget); }

Word bullyProject(const MultilineQueue& queue, const Sector& sector) {
    if (!queue.fits(sector)) throw InvalidArgument("bullyProject: queue does not match sector " + sector.toString());
    const int n = sector.species();
    if (n == 1) return singleSpecies(sector).entries().front().first;
    PathFrame frame;
    frame.byClass[1] = queue.rows[0];
    for (int depth = 1; depth < n - 1; ++depth) {
        PathFrame next;
        advance(frame, depth, queue.rows[static_cast<std::size_t>(depth)], next);
        frame = next;
    }
    return Word::fromPacked(packFrame(frame, n, sector.ringSize()), sector.ringSize());
}

namespace {

// Whole-path router shared by the ordered projection and the serial reference.
class PathRouter {
public:
    PathRouter(const MultilineQueue& queue, const Sector& sector)
        : queue_(queue), sector_(sector), available_(queue.rows), label_(static_cast<std::size_t>(sector.ringSize()), 0) {}

    /// Unclaimed occupied sites of `row` (1-based), left to right.
    [[nodiscard]] std::vector<PathStart> startsOf(int row) const {
        std::vector<PathStart> out;
        std::uint32_t bits = available_[static_cast<std::size_t>(row - 1)];
        while (bits) {
            out.push_back({row, std::countr_zero(bits)});
            bits &= bits - 1;
        }
        return out;
    }

    void run(const PathStart& start) {
        const int rows = sector_.species() - 1;
        auto& top = available_[static_cast<std::size_t>(start.row - 1)];
        top &= ~(1u << start.column);
        int column = start.column;
        for (int r = start.row + 1; r <= rows; ++r) {
            column = claimFrom(available_[static_cast<std::size_t>(r - 1)], column);
        }
        label_[static_cast<std::size_t>(column)] = start.row;
    }

    [[nodiscard]] Word result() const {
        std::vector<int> letters = label_;
        for (auto& l : letters) {
            if (l == 0) l = sector_.species();
        }
        return Word::fromLetters(letters);
    }

private:
    const MultilineQueue& queue_;
    const Sector& sector_;
    std::vector<std::uint32_t> available_;
    std::vector<int> label_;
};

}  // namespace

Word bullyProjectOrdered(const MultilineQueue& queue, const Sector& sector, std::span<const PathStart> order) {
    if (!queue.fits(sector)) throw InvalidArgument("bullyProjectOrdered: queue does not match sector");
    PathRouter router(queue, sector);
    const int rows = sector.species() - 1;
    std::size_t pos = 0;
    for (int row = 1; row <= rows; ++row) {
        auto expected = router.startsOf(row);
        std::vector<int> expectedCols;
        for (const auto& s : expected) expectedCols.push_back(s.column);
        std::vector<int> givenCols;
        const std::size_t begin = pos;
        while (pos < order.size() && order[pos].row == row) {
            givenCols.push_back(order[pos].column);
            ++pos;
        }
        if (pos < order.size() && order[pos].row < row) {
            throw InvalidArgument("bullyProjectOrdered: ordering interleaves rows");
        }
        std::ranges::sort(givenCols);
        if (givenCols != expectedCols) {
            throw InvalidArgument("bullyProjectOrdered: ordering for row " + std::to_string(row) +
                                  " is not a permutation of its path starts");
        }
        for (std::size_t i = begin; i < pos; ++i) router.run(order[i]);
    }
    if (pos != order.size()) throw InvalidArgument("bullyProjectOrdered: ordering interleaves rows");
    return router.result();
}

std::vector<std::vector<PathStart>> pathStarts(const MultilineQueue& queue, const Sector& sector) {
    if (!queue.fits(sector)) throw InvalidArgument("pathStarts: queue does not match sector");
    PathRouter router(queue, sector);
    std::vector<std::vector<PathStart>> starts;
    for (int row = 1; row < sector.species(); ++row) {
        starts.push_back(router.startsOf(row));
        for (const auto& s : starts.back()) router.run(s);
    }
    return starts;
}

ExactDist stationaryFromQueues(const Sector& sector, const EnumerationOptions& options) {
    if (sector.species() == 1) return singleSpecies(sector);
    checkBudget(sector, options.budget);

    const auto counts = rowCounts(sector);
    const int n = sector.species();
    const int ringSize = sector.ringSize();

    // Shards fix the top row, and the second row too when the top row alone
    // offers too few configurations to spread over the workers.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> shards;
    const bool splitSecond = n >= 3 && binom(ringSize, counts[0]) < 64;
    for (std::uint32_t r0 = lowMask(counts[0]); r0 != 0; r0 = nextCombination(r0, ringSize)) {
        if (!splitSecond) {
            shards.emplace_back(r0, 0u);
            continue;
        }
        for (std::uint32_t r1 = lowMask(counts[1]); r1 != 0; r1 = nextCombination(r1, ringSize)) {
            shards.emplace_back(r0, r1);
        }
    }

    std::vector<CountTable> partial(shards.size());
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t s = 0; s < shards.size(); ++s) {
        try {
            ShardWalker walker{counts, n, ringSize, partial[s], std::vector<PathFrame>(static_cast<std::size_t>(n))};
            walker.place(0, shards[s].first);
            if (splitSecond) {
                walker.place(1, shards[s].second);
                walker.walk(2);
            } else {
                walker.walk(1);
            }
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    CountTable merged;
    for (const auto& table : partial) {
        for (const auto& [key, count] : table) merged[key] += count;
    }
    return toDist(sector, merged);
}

ExactDist stationaryFromQueuesSerial(const Sector& sector, std::uint64_t budget) {
    if (sector.species() == 1) return singleSpecies(sector);
    QueueStream stream(sector, budget);
    MultilineQueue q;
    std::unordered_map<Word, std::uint64_t> counts;
    while (stream.next(q)) {
        PathRouter router(q, sector);
        for (int row = 1; row < sector.species(); ++row) {
            for (const auto& s : router.startsOf(row)) router.run(s);
        }
        ++counts[router.result()];
    }
    std::vector<ExactDist::Entry> entries;
    for (const auto& [word, c] : counts) entries.emplace_back(word, BigInt(static_cast<unsigned long>(c)));
    return ExactDist(sector, std::move(entries));
}

}  // namespace mtasep::mlq
