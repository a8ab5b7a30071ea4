#include "mtasep/sector.hpp"

#include <algorithm>
#include <sstream>

namespace mtasep {

namespace {

std::vector<int> parseIntList(const std::string& text, const char* what) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw InvalidArgument(std::string(what) + ": cannot parse '" + text + "'");
        }
    }
    return values;
}

}  // namespace

Sector::Sector(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) {
        throw InvalidArgument("Sector: at least one species required");
    }
    if (static_cast<int>(counts_.size()) > kMaxSpecies) {
        throw InvalidArgument("Sector: at most 15 species supported");
    }
    int sum = 0;
    for (const int m : counts_) {
        if (m < 1) throw InvalidArgument("Sector: species counts must be positive");
        sum += m;
        prefix_.push_back(sum);
    }
    if (sum > kMaxRingSize) {
        throw InvalidArgument("Sector: ring size above 16 not supported");
    }
    ringSize_ = sum;
}

Sector Sector::distinct(int n) {
    if (n < 1) throw InvalidArgument("Sector::distinct: n must be >= 1");
    return Sector(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Sector Sector::parse(const std::string& text) { return Sector(parseIntList(text, "Sector")); }

Sector Sector::reversed() const {
    std::vector<int> rev(counts_.rbegin(), counts_.rend());
    return Sector(std::move(rev));
}

BigInt Sector::queueCount() const {
    BigInt total = 1;
    for (int i = 1; i < species(); ++i) total *= binom(ringSize_, prefix(i));
    return total;
}

BigInt Sector::stateCount() const {
    BigInt total = 1;
    int remaining = ringSize_;
    for (const int m : counts_) {
        total *= binom(remaining, m);
        remaining -= m;
    }
    return total;
}

std::string Sector::toString() const {
    std::string out;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(counts_[i]);
    }
    return out;
}

Word Word::fromLetters(std::span<const int> letters) {
    if (letters.size() > static_cast<std::size_t>(kMaxRingSize)) {
        throw InvalidArgument("Word: at most 16 letters");
    }
    std::uint64_t packed = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i] < 1 || letters[i] > kMaxSpecies) {
            throw InvalidArgument("Word: letters must lie in 1..15");
        }
        packed |= static_cast<std::uint64_t>(letters[i]) << (4 * i);
    }
    return Word(packed, static_cast<int>(letters.size()));
}

Word Word::parse(const std::string& text) {
    const auto letters = parseIntList(text, "Word");
    return fromLetters(letters);
}

std::vector<int> Word::letters() const {
    std::vector<int> out(static_cast<std::size_t>(length_));
    for (int i = 0; i < length_; ++i) out[static_cast<std::size_t>(i)] = (*this)[i];
    return out;
}

Word Word::rotatedLeft() const {
    if (length_ == 0) return *this;
    const std::uint64_t first = packed_ & 0xFu;
    std::uint64_t rest = packed_ >> 4;
    rest |= first << (4 * (length_ - 1));
    return Word(rest, length_);
}

Word Word::particleHole(int species) const {
    std::vector<int> out(static_cast<std::size_t>(length_));
    for (int i = 0; i < length_; ++i) {
        out[static_cast<std::size_t>(i)] = species + 1 - (*this)[length_ - 1 - i];
    }
    return fromLetters(out);
}

bool Word::belongsTo(const Sector& sector) const {
    if (length_ != sector.ringSize()) return false;
    std::vector<int> seen(static_cast<std::size_t>(sector.species()) + 1, 0);
    for (int i = 0; i < length_; ++i) {
        const int letter = (*this)[i];
        if (letter < 1 || letter > sector.species()) return false;
        ++seen[static_cast<std::size_t>(letter)];
    }
    for (int label = 1; label <= sector.species(); ++label) {
        if (seen[static_cast<std::size_t>(label)] != sector.count(label)) return false;
    }
    return true;
}

std::string Word::toString() const {
    std::string out;
    for (int i = 0; i < length_; ++i) {
        if (i) out += ',';
        out += std::to_string((*this)[i]);
    }
    return out;
}

std::vector<Word> allWords(const Sector& sector) {
    std::vector<int> letters;
    for (int label = 1; label <= sector.species(); ++label) {
        letters.insert(letters.end(), static_cast<std::size_t>(sector.count(label)), label);
    }
    std::vector<Word> words;
    do {
        words.push_back(Word::fromLetters(letters));
    } while (std::ranges::next_permutation(letters).found);
    return words;
}

}  // namespace mtasep
