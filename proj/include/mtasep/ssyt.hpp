#pragma once

// Counting semistandard Young tableaux with two or three columns.
//
// The closed forms (hook-content for two and three columns, the constrained
// counts X, Z and Y) live next to a brute-force generator that walks every
// tableau of a given shape. The generator shares no code with the formulas and
// is the oracle they are tested against.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mtasep/combinatorics.hpp"

namespace mtasep::ssyt {

/// A tableau stored column by column. Columns strictly increase downwards,
/// rows weakly increase to the right, all entries lie in [1, maxEntry].
struct Tableau {
    std::vector<std::vector<int>> columns;
    int maxEntry = 0;

    [[nodiscard]] bool isValid() const;
    /// True when `value` occurs in column `column` (0-based).
    [[nodiscard]] bool columnContains(std::size_t column, int value) const;
    /// Row `row` (0-based) read left to right, over the columns long enough to reach it.
    [[nodiscard]] std::vector<int> row(std::size_t row) const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Streams every SSYT of a shape (given as column lengths, weakly decreasing)
/// with entries bounded by `maxEntry`, each exactly once, in column-major
/// lexicographic order. Single consumer.
class TableauStream {
public:
    TableauStream(std::vector<int> columnLengths, int maxEntry);

    /// Advances to the next tableau; returns false once the stream is exhausted.
    bool next(Tableau& out);

private:
    bool fillFrom(std::size_t flatIndex);
    [[nodiscard]] int lowerBound(std::size_t column, std::size_t row) const;
    [[nodiscard]] int upperBound(std::size_t column, std::size_t row) const;

    std::vector<int> lengths_;
    int maxEntry_;
    std::vector<std::vector<int>> entries_;
    std::vector<std::pair<std::size_t, std::size_t>> cells_;  // column-major order
    bool started_ = false;
    bool exhausted_ = false;
};

/// Rejects shapes that are not weakly decreasing or a bound below 1.
TableauStream enumerateTableaux(std::vector<int> columnLengths, int maxEntry);

/// Number of tableaux produced by the stream that satisfy `keep`.
BigInt countTableaux(const std::vector<int>& columnLengths, int maxEntry,
                     const std::function<bool(const Tableau&)>& keep = {});

// Closed forms. All of them are total: arguments outside the formula's
// domain give 0, matching the convention for vanishing binomials.

/// Two columns of lengths r >= l, entries <= m.
BigInt ssyt2(long r, long l, long m);

/// Three columns of lengths a >= b >= c, entries <= m. ssyt3(0,0,0,m) == 1.
BigInt ssyt3(long a, long b, long c, long m);

/// Tableaux of shape (r, r) whose last row is (alpha, beta). Requires r >= 1
/// and alpha <= beta.
BigInt countX(long r, long alpha, long beta);

/// Tableaux with columns (r, l), entries <= m and first row (alpha, beta).
/// Requires 1 <= alpha <= beta <= m, 1 <= l <= r <= m.
BigInt countZ(long r, long l, long alpha, long beta, long m);

/// Tableaux with columns (r, l), entries <= m, with beta somewhere in the
/// second column. Uses the Narayana-weighted sum for beta < m and the
/// last-row closed form for beta == m. Zero when the shape is empty in its
/// second column or beta lies outside [1, m].
BigInt countY(long r, long l, long beta, long m);

}  // namespace mtasep::ssyt
