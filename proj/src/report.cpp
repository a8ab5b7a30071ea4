#include "mtasep/report.hpp"

#include <iomanip>
#include <sstream>

namespace mtasep::report {

namespace {

std::string csvField(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string exact(const std::optional<Rational>& r) { return r ? r->toString() : std::string(); }

}  // namespace

Json toJson(const ExactDist& dist) {
    Json j;
    j["sector"] = dist.sector().counts();
    j["total"] = toString(dist.total());
    Json entries = Json::array();
    for (const auto& [word, weight] : dist.entries()) {
        const Rational p(weight, dist.total());
        entries.push_back({{"word", word.letters()},
                           {"count", toString(weight)},
                           {"numerator", toString(p.numerator())},
                           {"denominator", toString(p.denominator())}});
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string toCsv(const ExactDist& dist) {
    std::ostringstream out;
    out << "word,count,numerator,denominator\n";
    for (const auto& [word, weight] : dist.entries()) {
        const Rational p(weight, dist.total());
        out << csvField(word.toString()) << ',' << toString(weight) << ',' << toString(p.numerator()) << ','
            << toString(p.denominator()) << '\n';
    }
    return out.str();
}

Json toJson(const tasep::TrajectoryStats& stats) {
    Json j;
    j["sector"] = stats.sector.counts();
    j["seed"] = stats.seed;
    j["horizon"] = stats.horizon;
    j["burnIn"] = stats.burnIn;
    j["events"] = stats.events;
    j["eventHash"] = stats.eventHash;
    Json patterns = Json::array();
    for (const auto& e : stats.estimates) {
        patterns.push_back({{"pattern", e.pattern}, {"estimate", e.estimate}, {"standardError", e.standardError}});
    }
    j["patterns"] = std::move(patterns);
    return j;
}

std::string toCsv(const tasep::TrajectoryStats& stats) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "pattern,estimate,standard_error\n";
    for (const auto& e : stats.estimates) out << csvField(e.pattern) << ',' << e.estimate << ',' << e.standardError << '\n';
    return out.str();
}

Json toJson(const verify::FormulaReport& report, bool withInstances) {
    using verify::Status;
    Json j;
    j["id"] = report.id;
    j["title"] = report.title;
    j["range"] = report.range;
    j["conjectural"] = report.conjectural;
    j["verdict"] = verify::toString(report.verdict());
    j["matched"] = report.count(Status::Match);
    j["mismatched"] = report.count(Status::Mismatch);
    j["skipped"] = report.count(Status::Skipped);
    j["informational"] = report.instances.size() - report.count(Status::Match) - report.count(Status::Mismatch) -
                         report.count(Status::Skipped);
    j["seconds"] = report.seconds;
    if (withInstances) {
        Json list = Json::array();
        for (const auto& inst : report.instances) {
            Json i;
            i["label"] = inst.label;
            if (inst.expected) i["expected"] = inst.expected->toString();
            if (inst.observed) i["observed"] = inst.observed->toString();
            i["status"] = verify::toString(inst.status);
            if (!inst.band.empty()) i["band"] = inst.band;
            if (!inst.gating) i["gating"] = false;
            if (!inst.note.empty()) i["note"] = inst.note;
            list.push_back(std::move(i));
        }
        j["instances"] = std::move(list);
    }
    return j;
}

std::string toCsv(const verify::FormulaReport& report) {
    std::ostringstream out;
    out << "id,label,band,gating,expected,observed,status,note\n";
    for (const auto& inst : report.instances) {
        out << csvField(report.id) << ',' << csvField(inst.label) << ',' << csvField(inst.band) << ','
            << (inst.gating ? "yes" : "no") << ',' << exact(inst.expected) << ',' << exact(inst.observed) << ','
            << verify::toString(inst.status) << ',' << csvField(inst.note) << '\n';
    }
    return out.str();
}

std::string toTable(const verify::FormulaReport& report, bool verbose) {
    using verify::Status;
    std::ostringstream out;
    out << std::left << std::setw(11) << verify::toString(report.verdict()) << report.id << " [" << report.range << "] "
        << report.count(Status::Match) << " matched, " << report.count(Status::Mismatch) << " mismatched, "
        << report.count(Status::Skipped) << " skipped";
    const std::size_t extra = report.instances.size() - report.count(Status::Match) - report.count(Status::Mismatch) -
                              report.count(Status::Skipped);
    if (extra) out << ", " << extra << " informational";
    out << std::fixed << std::setprecision(2) << " (" << report.seconds << " s)\n";
    for (const auto& inst : report.instances) {
        if (!verbose && (inst.status == Status::Match || !inst.gating)) continue;
        out << "  " << std::setw(9) << verify::toString(inst.status) << inst.label;
        if (!inst.band.empty()) out << " [" << inst.band << (inst.gating ? "" : ", informational") << "]";
        if (inst.expected) out << " expected " << inst.expected->toString();
        if (inst.observed) out << " observed " << inst.observed->toString();
        if (!inst.note.empty()) out << " (" << inst.note << ")";
        out << '\n';
    }
    return out.str();
}

Json toJson(const limits::DirectionVector& v) {
    Json j;
    Json comps = Json::array();
    for (const auto& c : v.components) comps.push_back(c.toString());
    j["components"] = std::move(comps);
    j["unit"] = v.unit;
    return j;
}

}  // namespace mtasep::report
