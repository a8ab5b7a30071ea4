#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mtasep/sector.hpp"

namespace mtasep {

/// The event {w_p = label for every (p, label)}; positions are 1-based.
struct PatternQuery {
    std::vector<std::pair<int, int>> assignments;

    /// labels[0] at position `first`, labels[1] at first+1, and so on.
    static PatternQuery consecutive(const std::vector<int>& labels, int first = 1);
    /// Parses "w1=4,w2=1".
    static PatternQuery parse(const std::string& text);

    /// Throws InvalidArgument unless positions are distinct and within 1..N
    /// and labels are species of the sector.
    void validate(const Sector& sector) const;
    [[nodiscard]] bool matches(const Word& word) const;
    [[nodiscard]] std::string toString() const;
};

/// The event {w_left > w_right}.
struct OrderQuery {
    int left = 1;
    int right = 2;

    void validate(const Sector& sector) const;
    [[nodiscard]] bool matches(const Word& word) const { return word[left - 1] > word[right - 1]; }
    [[nodiscard]] std::string toString() const;
};

using SimPattern = std::variant<PatternQuery, OrderQuery>;

/// Parses either "w1>w2" or an assignment list such as "w1=4,w2=1".
SimPattern parseSimPattern(const std::string& text);
std::string describe(const SimPattern& pattern);

}  // namespace mtasep
