// mtasep: command-line driver for the exact and Monte Carlo checks.
//
// Exit codes: 0 pass, 1 mismatch, 2 budget exceeded, 3 invalid arguments.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "mtasep/correlations.hpp"
#include "mtasep/error.hpp"
#include "mtasep/limits.hpp"
#include "mtasep/mlq.hpp"
#include "mtasep/report.hpp"
#include "mtasep/rng.hpp"
#include "mtasep/tasep.hpp"
#include "mtasep/verify.hpp"

namespace {

using namespace mtasep;
using report::Json;

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kBudget = 2;
constexpr int kInvalid = 3;

struct Global {
    std::string format = "table";
    std::string out;
    double budget = 2e8;
    std::size_t stateBudget = tasep::kDefaultStateBudget;
    std::uint64_t seed = 1;
    int threads = 0;
    bool longRuns = false;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw InvalidArgument("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::vector<int> nRange(int n, int lo, int hi) {
    if (n > 0) return {n};
    std::vector<int> ns;
    for (int k = lo; k <= hi; ++k) ns.push_back(k);
    return ns;
}

std::vector<int> parseInts(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw InvalidArgument("expected a comma-separated integer list, got '" + text + "'");
        }
    }
    return out;
}

int exitFor(const std::vector<verify::FormulaReport>& reports) {
    int code = kPass;
    for (const auto& r : reports) {
        if (r.verdict() == verify::Verdict::Fail) return kMismatch;
        if (r.verdict() == verify::Verdict::Incomplete) code = kBudget;
    }
    return code;
}

void emitReports(const Global& g, const std::vector<verify::FormulaReport>& reports, bool verbose) {
    Output out(g.out);
    if (g.format == "json") {
        Json all = Json::array();
        for (const auto& r : reports) all.push_back(report::toJson(r));
        out.stream() << all.dump(2) << '\n';
    } else if (g.format == "csv") {
        bool header = true;
        for (const auto& r : reports) {
            std::string csv = report::toCsv(r);
            if (!header) csv.erase(0, csv.find('\n') + 1);
            out.stream() << csv;
            header = false;
        }
    } else {
        for (const auto& r : reports) out.stream() << report::toTable(r, verbose);
    }
}

correlations::OracleOptions oracleOptions(const Global& g) {
    return {static_cast<std::uint64_t>(g.budget), g.threads};
}

int cmdVerify(const Global& g, const std::string& target, int n, int maxTwo, int maxThree, bool verbose) {
    static const std::vector<std::string> targets{"ssyt",     "two-point",  "distance", "three-point",
                                                  "decreasing", "symmetries", "lumping", "all"};
    if (std::find(targets.begin(), targets.end(), target) == targets.end()) {
        throw InvalidArgument("unknown verify target '" + target + "'");
    }
    if (n != 0 && (n < 2 || n > kMaxRingSize)) throw InvalidArgument("--n must lie in 2.." + std::to_string(kMaxRingSize));
    const bool all = target == "all";
    verify::OraclePool pool(oracleOptions(g));
    std::vector<verify::FormulaReport> reports;
    using verify::FormulaId;
    if (all || target == "ssyt") reports.push_back(verify::verifySsyt(maxTwo, maxThree));
    if (all || target == "two-point") {
        reports.push_back(verify::verifyFormula(FormulaId::AdjacentTwoPoint, nRange(n, 3, 7), pool));
        reports.push_back(verify::verifyFormula(FormulaId::TwoPointAggregate, nRange(n, 3, 7), pool));
    }
    if (all || target == "distance") reports.push_back(verify::verifyFormula(FormulaId::DistanceTwoPoint, nRange(n, 4, 6), pool));
    if (all || target == "three-point") {
        const auto ns = nRange(n, 5, 6);
        reports.push_back(verify::verifyFormula(FormulaId::ThreePoint, ns, pool));
        std::vector<int> big;
        std::copy_if(ns.begin(), ns.end(), std::back_inserter(big), [](int k) { return k >= 5; });
        if (!big.empty()) reports.push_back(verify::verifyFormula(FormulaId::ThreePointAggregate, big, pool));
    }
    if (all || target == "decreasing") reports.push_back(verify::verifyFormula(FormulaId::Decreasing, nRange(n, 4, 7), pool));
    if (all || target == "lumping") {
        verify::LumpingOptions lo;
        if (n != 0) {
            lo.maxRing = n;
            lo.distinctUpTo = std::min(n, 5);
        }
        lo.queueBudget = static_cast<std::uint64_t>(g.budget);
        lo.stateBudget = g.stateBudget;
        lo.threads = g.threads;
        reports.push_back(verify::verifyLumping(lo, [&](const ExactDist& d) {
            pool.at(d.sector().ringSize()).distribution(d.sector());
        }));
    }
    if (all || target == "symmetries") {
        if (!all) {
            // The laws behind the lumping sweep.
            for (int ring = 2; ring <= (n ? n : 7); ++ring) {
                for (int s = 1; s <= std::min(4, ring); ++s) {
                    for (const auto& sec : verify::sectorsOf(ring, s)) pool.at(ring).distribution(sec);
                }
            }
        }
        reports.push_back(verify::verifySymmetries(pool.distributions(), [&](const Sector& s) -> const ExactDist& {
            return pool.at(s.ringSize()).distribution(s);
        }));
    }
    emitReports(g, reports, verbose);
    return exitFor(reports);
}

int cmdConjecture(const Global& g, const std::string& id, int n, int r, bool verbose) {
    const auto cid = verify::parseConjectureId(id);
    if (n < 2) throw InvalidArgument("--n must be at least 2");
    if (n >= 8 && !g.longRuns) throw InvalidArgument("n >= 8 is a long run; pass --long to allow it");
    verify::OraclePool pool(oracleOptions(g));
    std::vector<verify::FormulaReport> reports{verify::verifyConjecture(cid, n, pool, {r})};
    emitReports(g, reports, verbose);
    return exitFor(reports);
}

int cmdSimulate(const Global& g, const std::string& sectorText, int n, double horizon, double burnIn,
                const std::vector<std::string>& patternTexts, int trajectories) {
    if (sectorText.empty() == (n == 0)) throw InvalidArgument("give exactly one of --sector and --n");
    const Sector sector = n ? Sector::distinct(n) : Sector::parse(sectorText);
    std::vector<SimPattern> patterns;
    for (const auto& p : patternTexts) patterns.push_back(parseSimPattern(p));
    tasep::SimulationOptions opts{horizon, burnIn, g.seed, 50};
    std::vector<tasep::TrajectoryStats> runs;
    if (trajectories <= 1) runs.push_back(tasep::simulate(sector, opts, patterns));
    else runs = tasep::simulateMany(sector, opts, patterns, trajectories, g.threads);
    Output out(g.out);
    if (g.format == "csv") {
        for (const auto& s : runs) out.stream() << report::toCsv(s);
    } else if (g.format == "json" || runs.size() > 1) {
        Json all = Json::array();
        for (const auto& s : runs) all.push_back(report::toJson(s));
        out.stream() << (runs.size() == 1 ? report::toJson(runs.front()) : all).dump(2) << '\n';
    } else {
        const auto& s = runs.front();
        out.stream() << "sector (" << s.sector.toString() << ") seed " << s.seed << " horizon " << s.horizon
                     << " burn-in " << s.burnIn << " events " << s.events << '\n';
        for (const auto& e : s.estimates) {
            out.stream() << "  " << e.pattern << " = " << e.estimate << " +- " << e.standardError << '\n';
        }
    }
    return kPass;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

int cmdNcore(const Global& g, int n, bool curve, const std::string& replay, std::int64_t steps, int seeds,
             const std::string& boundaryPath) {
    if (n < 2) throw InvalidArgument("--n must be at least 2");
    Output out(g.out);
    if (curve) {
        out.stream() << limits::toCsv(limits::limitCurve(n).vertices);
        return kPass;
    }
    if (!replay.empty()) {
        const auto residues = parseInts(replay);
        for (int t : residues) {
            if (t < 0 || t >= n) throw InvalidArgument("replay residues must lie in 0..n-1");
        }
        const limits::NCore core = limits::replayGrowth(n, residues);
        const auto p = core.partition();
        if (g.format == "json") {
            Json j{{"n", n}, {"residues", residues}, {"partition", p.rows}, {"boxes", core.boxes()}};
            out.stream() << j.dump(2) << '\n';
        } else {
            out.stream() << p.toString() << '\n';
        }
        if (!boundaryPath.empty()) std::ofstream(boundaryPath, std::ios::binary) << limits::toCsv(limits::staircase(core));
        return kPass;
    }
    if (steps < 1 || seeds < 1) throw InvalidArgument("--steps and --seeds must be positive");
    std::vector<double> dist(static_cast<std::size_t>(seeds));
    std::vector<std::int64_t> boxes(static_cast<std::size_t>(seeds));
    std::vector<std::uint64_t> seedList(static_cast<std::size_t>(seeds));
    for (int k = 0; k < seeds; ++k) seedList[static_cast<std::size_t>(k)] = Rng::split(g.seed, static_cast<std::uint64_t>(k));
    const int threads = g.threads > 0 ? g.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int k = 0; k < seeds; ++k) {
        const auto core = limits::randomGrowth(n, steps, seedList[static_cast<std::size_t>(k)]);
        boxes[static_cast<std::size_t>(k)] = core.boxes();
        dist[static_cast<std::size_t>(k)] = core.boxes() > 0 ? limits::shapeDistance(core) : 0.0;
    }
    if (!boundaryPath.empty()) {
        std::ofstream(boundaryPath, std::ios::binary)
            << limits::toCsv(limits::staircase(limits::randomGrowth(n, steps, seedList.front())));
    }
    if (g.format == "json") {
        Json runs = Json::array();
        for (int k = 0; k < seeds; ++k) {
            const auto s = static_cast<std::size_t>(k);
            runs.push_back({{"n", n}, {"steps", steps}, {"seed", seedList[s]}, {"boxes", boxes[s]}, {"distance", dist[s]}});
        }
        out.stream() << Json{{"runs", runs}, {"medianDistance", median(dist)}}.dump(2) << '\n';
    } else if (g.format == "csv") {
        out.stream() << "n,steps,seed,boxes,distance\n";
        for (int k = 0; k < seeds; ++k) {
            const auto s = static_cast<std::size_t>(k);
            out.stream() << n << ',' << steps << ',' << seedList[s] << ',' << boxes[s] << ',' << dist[s] << '\n';
        }
    } else {
        out.stream() << "n=" << n << " steps=" << steps << " seeds=" << seeds << " median distance " << median(dist)
                     << '\n';
    }
    return kPass;
}

int cmdPsi(const Global& g, int n) {
    if (n < 2) throw InvalidArgument("psi needs n >= 2");
    const auto closed = limits::psiClosed(n);
    const auto fromE = limits::psiFromCorrelations(n);
    const auto ratio = limits::positiveRatio(closed, fromE);
    Output out(g.out);
    if (g.format == "json") {
        Json j{{"n", n}, {"closed", report::toJson(closed)}, {"fromCorrelations", report::toJson(fromE)},
               {"collinear", ratio.has_value()}};
        if (ratio) j["ratio"] = ratio->toString();
        out.stream() << j.dump(2) << '\n';
    } else {
        out.stream() << "n=" << n << "\n  closed     ";
        for (const auto& c : closed.components) out.stream() << ' ' << c;
        out.stream() << "\n  unit       ";
        for (double c : closed.unit) out.stream() << ' ' << c;
        out.stream() << "\n  from E     ";
        for (const auto& c : fromE.components) out.stream() << ' ' << c;
        out.stream() << "\n  " << (ratio ? "collinear, ratio " + ratio->toString() : std::string("NOT collinear")) << '\n';
    }
    return ratio ? kPass : kMismatch;
}

int cmdStationary(const Global& g, const std::string& sectorText, const std::string& method) {
    const Sector sector = Sector::parse(sectorText);
    ExactDist dist;
    if (method == "queues") {
        dist = mlq::stationaryFromQueues(sector, {static_cast<std::uint64_t>(g.budget), g.threads});
    } else if (method == "generator") {
        tasep::SolveOptions so;
        so.threads = g.threads;
        dist = tasep::solveStationary(tasep::buildGenerator(sector, g.stateBudget), so);
    } else {
        throw InvalidArgument("--method must be queues or generator");
    }
    Output out(g.out);
    if (g.format == "json") out.stream() << report::toJson(dist).dump(2) << '\n';
    else out.stream() << report::toCsv(dist);
    return kPass;
}

int cmdTrend(const Global& g) {
    Output out(g.out);
    const auto points = correlations::densityTrend();
    if (g.format == "json") {
        Json all = Json::array();
        for (const auto& p : points) {
            all.push_back({{"quantity", p.quantity}, {"n", p.ns}, {"scaled", p.scaled}, {"limit", p.limit},
                           {"monotone", p.monotone}});
        }
        out.stream() << all.dump(2) << '\n';
    } else {
        for (const auto& p : points) {
            out.stream() << p.quantity << " -> " << p.limit << ":";
            for (std::size_t k = 0; k < p.ns.size(); ++k) out.stream() << "  n=" << p.ns[k] << " " << p.scaled[k];
            out.stream() << (p.monotone ? "  (monotone)" : "  (not monotone)") << '\n';
        }
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and simulation for the multispecies TASEP on a ring"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_option("--budget", g.budget, "Maximum multiline queues per enumerated sector")->check(CLI::PositiveNumber);
    app.add_option("--state-budget", g.stateBudget, "Maximum generator states")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for stochastic subcommands");
    app.add_option("--threads", g.threads, "Worker threads (default: MTASEP_THREADS or all cores)");
    app.add_flag("--long", g.longRuns, "Allow long-running n >= 8 conjecture checks");

    auto* verifyCmd = app.add_subcommand("verify", "Check closed forms against exact enumeration");
    std::string target;
    int vn = 0;
    int maxTwo = 8;
    int maxThree = 7;
    bool verbose = false;
    verifyCmd->add_option("target", target, "ssyt | two-point | distance | three-point | decreasing | symmetries | lumping | all")
        ->required();
    verifyCmd->add_option("--n", vn, "Single n (default: the standard range of the target)");
    verifyCmd->add_option("--max", maxTwo, "Largest two-column tableau parameter");
    verifyCmd->add_option("--max-three", maxThree, "Largest three-column tableau parameter");
    verifyCmd->add_flag("--verbose", verbose, "List matching instances too");

    auto* conjCmd = app.add_subcommand("conjecture", "Search for counterexamples to a conjecture");
    std::string cid;
    int cn = 0;
    int cr = 0;
    conjCmd->add_option("id", cid, "7.4 | 8.2 | 8.3 | 8.4 | 8.5")->required();
    conjCmd->add_option("--n", cn, "Number of species")->required();
    conjCmd->add_option("--r", cr, "Restrict to words of this length");
    conjCmd->add_flag("--verbose", verbose, "List matching instances too");

    auto* simCmd = app.add_subcommand("simulate", "Continuous-time Monte Carlo");
    std::string sector;
    int sn = 0;
    double horizon = 1e5;
    double burnIn = 1e2;
    std::vector<std::string> patterns;
    int trajectories = 1;
    simCmd->add_option("--sector", sector, "Species counts, e.g. 2,1,2");
    simCmd->add_option("--n", sn, "Distinct species on n sites");
    simCmd->add_option("--horizon", horizon, "Total simulated time");
    simCmd->add_option("--burn-in", burnIn, "Time discarded before averaging");
    simCmd->add_option("--pattern", patterns, "w1>w2 or w1=4,w2=1 (repeatable)")->required();
    simCmd->add_option("--trajectories", trajectories, "Independent trajectories");

    auto* ncoreCmd = app.add_subcommand("ncore", "n-core growth and the limit curve");
    int nn = 0;
    bool curve = false;
    std::string replay;
    std::int64_t steps = 10000;
    int seeds = 1;
    std::string boundary;
    ncoreCmd->add_option("--n", nn, "Core parameter")->required();
    ncoreCmd->add_flag("--curve", curve, "Emit the vertices of C_n as CSV");
    ncoreCmd->add_option("--replay", replay, "Comma-separated residues to apply from the empty core");
    ncoreCmd->add_option("--steps", steps, "Growth steps per seed");
    ncoreCmd->add_option("--seeds", seeds, "Number of independent runs");
    ncoreCmd->add_option("--boundary", boundary, "Write the (first) core boundary as CSV to this file");

    auto* psiCmd = app.add_subcommand("psi", "Limiting direction, closed form against correlations");
    int pn = 0;
    psiCmd->add_option("--n", pn, "Rank")->required();

    auto* statCmd = app.add_subcommand("stationary", "Exact stationary law of a sector");
    std::string statSector;
    std::string method = "queues";
    statCmd->add_option("--sector", statSector, "Species counts")->required();
    statCmd->add_option("--method", method, "queues | generator");

    auto* trendCmd = app.add_subcommand("trend", "Finite-n correlations rescaled toward the continuum densities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInvalid;
    }

    if (g.threads <= 0) {
        if (const char* env = std::getenv("MTASEP_THREADS")) g.threads = std::atoi(env);
    }
    if (g.threads > 0) omp_set_num_threads(g.threads);

    try {
        if (*verifyCmd) return cmdVerify(g, target, vn, maxTwo, maxThree, verbose);
        if (*conjCmd) return cmdConjecture(g, cid, cn, cr, verbose);
        if (*simCmd) return cmdSimulate(g, sector, sn, horizon, burnIn, patterns, trajectories);
        if (*ncoreCmd) return cmdNcore(g, nn, curve, replay, steps, seeds, boundary);
        if (*psiCmd) return cmdPsi(g, pn);
        if (*statCmd) return cmdStationary(g, statSector, method);
        if (*trendCmd) return cmdTrend(g);
    } catch (const InvalidArgument& e) {
        std::cerr << "mtasep: " << e.what() << '\n';
        return kInvalid;
    } catch (const BudgetExceeded& e) {
        std::cerr << "mtasep: budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "mtasep: error: " << e.what() << '\n';
        return kMismatch;
    }
    return kInvalid;
}
