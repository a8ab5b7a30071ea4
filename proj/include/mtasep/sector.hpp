#pragma once

// Sectors (species counts) and ring configurations (multipermutations).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mtasep/combinatorics.hpp"

namespace mtasep {

inline constexpr int kMaxRingSize = 16;
inline constexpr int kMaxSpecies = 15;

/// Composition m = (m_1, ..., m_n) of the ring size N into positive parts.
class Sector {
public:
    Sector() = default;
    explicit Sector(std::vector<int> counts);

    /// n copies of 1: the distinct-species chain on n sites.
    static Sector distinct(int n);

    /// Parses "2,1,2".
    static Sector parse(const std::string& text);

    [[nodiscard]] int species() const { return static_cast<int>(counts_.size()); }
    [[nodiscard]] int ringSize() const { return ringSize_; }
    [[nodiscard]] int count(int label) const { return counts_.at(static_cast<std::size_t>(label - 1)); }
    [[nodiscard]] const std::vector<int>& counts() const { return counts_; }
    /// M_i = m_1 + ... + m_i, for i = 1..n.
    [[nodiscard]] int prefix(int i) const { return prefix_.at(static_cast<std::size_t>(i - 1)); }

    /// (m_n, ..., m_1).
    [[nodiscard]] Sector reversed() const;

    /// prod_{i=1}^{n-1} C(N, M_i): number of multiline queues.
    [[nodiscard]] BigInt queueCount() const;
    /// N! / prod m_i!: number of ring configurations.
    [[nodiscard]] BigInt stateCount() const;

    [[nodiscard]] std::string toString() const;

    friend bool operator==(const Sector&, const Sector&) = default;
    friend auto operator<=>(const Sector&, const Sector&) = default;

private:
    std::vector<int> counts_;
    std::vector<int> prefix_;
    int ringSize_ = 0;
};

/// A ring configuration: N letters over {1..n}, packed four bits per letter.
/// Position arguments are 0-based.
class Word {
public:
    Word() = default;
    static Word fromLetters(std::span<const int> letters);
    static Word fromPacked(std::uint64_t packed, int length) { return Word(packed, length); }
    /// Parses "1,2,5,3".
    static Word parse(const std::string& text);

    [[nodiscard]] int size() const { return length_; }
    [[nodiscard]] int operator[](int position) const {
        return static_cast<int>((packed_ >> (4 * position)) & 0xFu);
    }
    [[nodiscard]] std::uint64_t packed() const { return packed_; }
    [[nodiscard]] std::vector<int> letters() const;

    /// (w_2, ..., w_N, w_1).
    [[nodiscard]] Word rotatedLeft() const;
    /// (n+1-w_N, ..., n+1-w_1).
    [[nodiscard]] Word particleHole(int species) const;
    /// Letter multiplicities match the sector.
    [[nodiscard]] bool belongsTo(const Sector& sector) const;

    [[nodiscard]] std::string toString() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    Word(std::uint64_t packed, int length) : packed_(packed), length_(length) {}

    std::uint64_t packed_ = 0;
    int length_ = 0;
};

/// Every word of the sector, in lexicographic order.
std::vector<Word> allWords(const Sector& sector);

}  // namespace mtasep

template <>
struct std::hash<mtasep::Word> {
    std::size_t operator()(const mtasep::Word& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.packed() ^ (static_cast<std::uint64_t>(w.size()) << 60));
    }
};
