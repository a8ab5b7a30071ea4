#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mtasep/combinatorics.hpp"
#include "mtasep/sector.hpp"

namespace mtasep {

/// An exact probability law on the words of a sector, stored as positive
/// integer weights over a common total. P(w) = weight(w) / total.
class ExactDist {
public:
    using Entry = std::pair<Word, BigInt>;

    ExactDist() = default;
    /// Entries are sorted by word; every weight must be positive and every word
    /// must belong to the sector.
    ExactDist(Sector sector, std::vector<Entry> entries);

    [[nodiscard]] const Sector& sector() const { return sector_; }
    [[nodiscard]] const BigInt& total() const { return total_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] std::span<const Entry> entries() const { return entries_; }

    [[nodiscard]] BigInt weight(const Word& word) const;
    [[nodiscard]] Rational probability(const Word& word) const;

    /// Same sector and identical probabilities (weights may differ by scale).
    [[nodiscard]] bool sameLaw(const ExactDist& other) const;

private:
    Sector sector_;
    std::vector<Entry> entries_;
    std::unordered_map<Word, std::size_t> index_;
    BigInt total_ = 0;
};

}  // namespace mtasep
