#include "mtasep/ssyt.hpp"

#include <algorithm>
#include <utility>

namespace mtasep::ssyt {

bool Tableau::isValid() const {
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c > 0 && columns[c].size() > columns[c - 1].size()) return false;
        for (std::size_t r = 0; r < columns[c].size(); ++r) {
            const int v = columns[c][r];
            if (v < 1 || v > maxEntry) return false;
            if (r > 0 && columns[c][r - 1] >= v) return false;
            if (c > 0 && columns[c - 1][r] > v) return false;
        }
    }
    return true;
}

bool Tableau::columnContains(std::size_t column, int value) const {
    if (column >= columns.size()) return false;
    return std::ranges::find(columns[column], value) != columns[column].end();
}

std::vector<int> Tableau::row(std::size_t row) const {
    std::vector<int> out;
    for (const auto& col : columns) {
        if (row < col.size()) out.push_back(col[row]);
    }
    return out;
}

TableauStream::TableauStream(std::vector<int> columnLengths, int maxEntry)
    : lengths_(std::move(columnLengths)), maxEntry_(maxEntry) {
    for (std::size_t c = 0; c < lengths_.size(); ++c) {
        if (lengths_[c] < 0 || (c > 0 && lengths_[c] > lengths_[c - 1])) {
            throw InvalidArgument("enumerateTableaux: column lengths must be weakly decreasing and >= 0");
        }
    }
    if (maxEntry_ < 1) {
        throw InvalidArgument("enumerateTableaux: entry bound must be >= 1");
    }
    entries_.resize(lengths_.size());
    for (std::size_t c = 0; c < lengths_.size(); ++c) {
        entries_[c].assign(static_cast<std::size_t>(lengths_[c]), 0);
        for (std::size_t r = 0; r < entries_[c].size(); ++r) cells_.emplace_back(c, r);
    }
}

int TableauStream::lowerBound(std::size_t column, std::size_t row) const {
    int lo = 1;
    if (row > 0) lo = std::max(lo, entries_[column][row - 1] + 1);
    if (column > 0) lo = std::max(lo, entries_[column - 1][row]);
    return lo;
}

int TableauStream::upperBound(std::size_t column, std::size_t row) const {
    return maxEntry_ - (lengths_[column] - 1 - static_cast<int>(row));
}

bool TableauStream::fillFrom(std::size_t flatIndex) {
    for (std::size_t k = flatIndex; k < cells_.size(); ++k) {
        const auto [c, r] = cells_[k];
        const int lo = lowerBound(c, r);
        if (lo > upperBound(c, r)) return false;
        entries_[c][r] = lo;
    }
    return true;
}

bool TableauStream::next(Tableau& out) {
    if (exhausted_) return false;
    if (!started_) {
        started_ = true;
        if (!fillFrom(0)) {
            exhausted_ = true;
            return false;
        }
    } else {
        bool advanced = false;
        for (std::size_t k = cells_.size(); k-- > 0;) {
            const auto [c, r] = cells_[k];
            if (entries_[c][r] < upperBound(c, r)) {
                ++entries_[c][r];
                if (fillFrom(k + 1)) {
                    advanced = true;
                    break;
                }
            }
        }
        if (!advanced) {
            exhausted_ = true;
            return false;
        }
    }
    out.columns = entries_;
    out.maxEntry = maxEntry_;
    return true;
}

TableauStream enumerateTableaux(std::vector<int> columnLengths, int maxEntry) {
    return TableauStream(std::move(columnLengths), maxEntry);
}

BigInt countTableaux(const std::vector<int>& columnLengths, int maxEntry,
                     const std::function<bool(const Tableau&)>& keep) {
    TableauStream stream(columnLengths, maxEntry);
    Tableau t;
    BigInt count = 0;
    while (stream.next(t)) {
        if (!keep || keep(t)) ++count;
    }
    return count;
}

BigInt ssyt2(long r, long l, long m) {
    if (!(m >= r && r >= l && l >= 0)) return 0;
    const BigInt numerator = BigInt(r - l + 1) * binom(m, r) * binom(m + 1, l);
    return exactDivide(numerator, BigInt(r + 1), "ssyt2");
}

BigInt ssyt3(long a, long b, long c, long m) {
    if (!(m >= a && a >= b && b >= c && c >= 0)) return 0;
    const BigInt numerator = BigInt(a - b + 1) * BigInt(a - c + 2) * BigInt(b - c + 1) * binom(m, a) *
                             binom(m + 1, b) * binom(m + 2, c);
    const BigInt denominator = BigInt(a + 1) * BigInt(a + 2) * BigInt(b + 1);
    return exactDivide(numerator, denominator, "ssyt3");
}

BigInt countX(long r, long alpha, long beta) {
    if (r < 1 || alpha > beta) {
        throw InvalidArgument("countX: requires r >= 1 and alpha <= beta");
    }
    return binom(beta, r - 1) * binom(alpha - 1, r - 1) - binom(beta - 1, r - 2) * binom(alpha, r);
}

namespace {

// First row pinned to (1, beta): inclusion-exclusion over the rows that would
// break the second column's strict increase.
BigInt countZFromOne(long r, long l, long beta, long m) {
    BigInt total = ssyt2(r - 1, l - 1, m - 1);
    for (long i = 2; i <= beta; ++i) {
        for (long j = i; j <= beta; ++j) {
            const BigInt coeff = binom(j - 2, i - 2) * binom(beta - j + i - 1, i - 1);
            if (coeff == 0) continue;
            const BigInt term = coeff * ssyt2(r - i, l - i, m - j);
            if (i % 2 == 0) {
                total -= term;
            } else {
                total += term;
            }
        }
    }
    return total;
}

// N_{e-1, f-1}, with N_{0,0} = 1.
BigInt shiftedNarayana(long e, long f) {
    if (e == 1) return f == 1 ? BigInt(1) : BigInt(0);
    return narayana(e - 1, f - 1);
}

}  // namespace

BigInt countZ(long r, long l, long alpha, long beta, long m) {
    if (!(1 <= alpha && alpha <= beta && beta <= m) || !(1 <= l && l <= r && r <= m)) {
        throw InvalidArgument("countZ: requires 1 <= alpha <= beta <= m and 1 <= l <= r <= m");
    }
    return countZFromOne(r, l, beta - alpha + 1, m - alpha + 1);
}

BigInt countY(long r, long l, long beta, long m) {
    if (l < 1 || r < l || m < r || beta < 1 || beta > m) return 0;
    if (beta == m) {
        return binom(m, l - 1) * binom(m, r) - binom(m - 1, l - 2) * binom(m + 1, r + 1);
    }
    BigInt total = 0;
    for (long e = 1; e <= beta; ++e) {
        for (long f = 1; f <= e; ++f) {
            const BigInt s = ssyt2(r - f, l - f, m - e);
            if (s == 0) continue;
            total += shiftedNarayana(e, f) * s;
        }
    }
    return total;
}

}  // namespace mtasep::ssyt
