#include "mtasep/pattern.hpp"

#include "mtasep/error.hpp"

#include <regex>
#include <set>
#include <sstream>

namespace mtasep {

PatternQuery PatternQuery::consecutive(const std::vector<int>& labels, int first) {
    PatternQuery q;
    for (std::size_t i = 0; i < labels.size(); ++i) q.assignments.emplace_back(first + static_cast<int>(i), labels[i]);
    return q;
}

PatternQuery PatternQuery::parse(const std::string& text) {
    static const std::regex item(R"(\s*w(\d+)\s*=\s*(\d+)\s*)");
    PatternQuery q;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::smatch m;
        if (!std::regex_match(part, m, item)) {
            throw InvalidArgument("pattern: cannot parse '" + part + "' (expected wP=L)");
        }
        q.assignments.emplace_back(std::stoi(m[1]), std::stoi(m[2]));
    }
    if (q.assignments.empty()) throw InvalidArgument("pattern: empty assignment list");
    return q;
}

void PatternQuery::validate(const Sector& sector) const {
    std::set<int> positions;
    for (const auto& [pos, label] : assignments) {
        if (pos < 1 || pos > sector.ringSize()) {
            throw InvalidArgument("pattern: position " + std::to_string(pos) + " outside the ring");
        }
        if (label < 1 || label > sector.species()) {
            throw InvalidArgument("pattern: species " + std::to_string(label) + " absent from sector " +
                                  sector.toString());
        }
        if (!positions.insert(pos).second) {
            throw InvalidArgument("pattern: position " + std::to_string(pos) + " assigned twice");
        }
    }
}

bool PatternQuery::matches(const Word& word) const {
    for (const auto& [pos, label] : assignments) {
        if (word[pos - 1] != label) return false;
    }
    return true;
}

std::string PatternQuery::toString() const {
    std::string out;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        if (i) out += ',';
        out += "w" + std::to_string(assignments[i].first) + "=" + std::to_string(assignments[i].second);
    }
    return out;
}

void OrderQuery::validate(const Sector& sector) const {
    if (left < 1 || right < 1 || left > sector.ringSize() || right > sector.ringSize() || left == right) {
        throw InvalidArgument("order pattern: positions must be distinct and within the ring");
    }
}

std::string OrderQuery::toString() const { return "w" + std::to_string(left) + ">w" + std::to_string(right); }

SimPattern parseSimPattern(const std::string& text) {
    static const std::regex order(R"(\s*w(\d+)\s*>\s*w(\d+)\s*)");
    std::smatch m;
    if (std::regex_match(text, m, order)) {
        return OrderQuery{std::stoi(m[1]), std::stoi(m[2])};
    }
    return PatternQuery::parse(text);
}

std::string describe(const SimPattern& pattern) {
    return std::visit([](const auto& p) { return p.toString(); }, pattern);
}

}  // namespace mtasep
