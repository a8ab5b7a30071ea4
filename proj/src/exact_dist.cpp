#include "mtasep/exact_dist.hpp"

#include <algorithm>

namespace mtasep {

ExactDist::ExactDist(Sector sector, std::vector<Entry> entries)
    : sector_(std::move(sector)), entries_(std::move(entries)) {
    std::ranges::sort(entries_, [](const Entry& a, const Entry& b) { return a.first.packed() < b.first.packed(); });
    index_.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& [word, w] = entries_[i];
        if (w <= 0) throw InternalError("ExactDist: non-positive weight for " + word.toString());
        if (!word.belongsTo(sector_)) throw InternalError("ExactDist: word " + word.toString() + " outside sector");
        if (!index_.emplace(word, i).second) throw InternalError("ExactDist: duplicate word " + word.toString());
        total_ += w;
    }
    if (entries_.empty()) throw InternalError("ExactDist: empty distribution");
}

BigInt ExactDist::weight(const Word& word) const {
    const auto it = index_.find(word);
    return it == index_.end() ? BigInt(0) : entries_[it->second].second;
}

Rational ExactDist::probability(const Word& word) const { return Rational(weight(word), total_); }

bool ExactDist::sameLaw(const ExactDist& other) const {
    if (sector_ != other.sector_ || entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& [w1, a] = entries_[i];
        const auto& [w2, b] = other.entries_[i];
        if (w1 != w2 || a * other.total_ != b * total_) return false;
    }
    return true;
}

}  // namespace mtasep
