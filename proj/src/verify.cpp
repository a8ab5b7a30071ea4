#include "mtasep/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "mtasep/error.hpp"
#include "mtasep/mlq.hpp"
#include "mtasep/ssyt.hpp"

namespace mtasep::verify {

namespace {

using correlations::MarginalOracle;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string joined(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (a) out += sep;
        out += std::to_string(v[a]);
    }
    return out;
}

std::string nearestLabel(int n, const std::vector<int>& labels) {
    return "n=" + std::to_string(n) + " E(" + joined(labels) + ")";
}

std::string rangeOf(const std::vector<int>& ns) { return "n in {" + joined(ns) + "}"; }

// Every ordered tuple of r distinct labels from 1..n accepted by `keep`.
void tuples(int n, int r, const std::function<bool(const std::vector<int>&)>& keep,
            const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::function<void()> rec = [&] {
        if (static_cast<int>(cur.size()) == r) {
            if (!keep || keep(cur)) visit(cur);
            return;
        }
        for (int l = 1; l <= n; ++l) {
            if (used[static_cast<std::size_t>(l)]) continue;
            used[static_cast<std::size_t>(l)] = 1;
            cur.push_back(l);
            rec();
            cur.pop_back();
            used[static_cast<std::size_t>(l)] = 0;
        }
    };
    rec();
}

int maxOf(const std::vector<int>& v) { return *std::max_element(v.begin(), v.end()); }
int minOf(const std::vector<int>& v) { return *std::min_element(v.begin(), v.end()); }

// Runs `observe` and records the comparison, or a skip when the oracle's
// sector is over budget.
void against(FormulaReport& report, const std::string& label, const Rational& expected,
             const std::function<Rational()>& observe, const std::string& band = {}, bool gating = true) {
    try {
        report.compare(label, expected, observe(), band, gating);
    } catch (const BudgetExceeded& e) {
        report.skip(label, e.what(), band);
        report.instances.back().gating = gating;
    }
}

}  // namespace

std::string toString(Status s) {
    switch (s) {
        case Status::Match: return "match";
        case Status::Mismatch: return "mismatch";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

std::string toString(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Incomplete: return "incomplete";
    }
    return "?";
}

Verdict FormulaReport::verdict() const {
    if (count(Status::Mismatch) > 0) return Verdict::Fail;
    if (count(Status::Skipped) > 0 || count(Status::Match) == 0) return Verdict::Incomplete;
    return Verdict::Pass;
}

std::size_t FormulaReport::count(Status s, bool gatingOnly) const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(), [&](const Instance& i) {
        return i.status == s && (!gatingOnly || i.gating);
    }));
}

void FormulaReport::compare(std::string label, const Rational& expected, const Rational& observed, std::string band,
                            bool gating) {
    Instance inst;
    inst.label = std::move(label);
    inst.expected = expected;
    inst.observed = observed;
    inst.status = expected == observed ? Status::Match : Status::Mismatch;
    inst.band = std::move(band);
    inst.gating = gating;
    instances.push_back(std::move(inst));
}

void FormulaReport::check(std::string label, bool ok, std::string note, std::string band, bool gating) {
    Instance inst;
    inst.label = std::move(label);
    inst.status = ok ? Status::Match : Status::Mismatch;
    inst.note = std::move(note);
    inst.band = std::move(band);
    inst.gating = gating;
    instances.push_back(std::move(inst));
}

void FormulaReport::skip(std::string label, std::string why, std::string band) {
    Instance inst;
    inst.label = std::move(label);
    inst.status = Status::Skipped;
    inst.note = std::move(why);
    inst.band = std::move(band);
    instances.push_back(std::move(inst));
}

FormulaId parseFormulaId(const std::string& text) {
    static const std::map<std::string, FormulaId> names{
        {"two-point", FormulaId::AdjacentTwoPoint},      {"distance", FormulaId::DistanceTwoPoint},
        {"three-point", FormulaId::ThreePoint},          {"decreasing", FormulaId::Decreasing},
        {"two-point-sums", FormulaId::TwoPointAggregate}, {"three-point-sums", FormulaId::ThreePointAggregate}};
    const auto it = names.find(text);
    if (it == names.end()) throw InvalidArgument("unknown formula '" + text + "'");
    return it->second;
}

std::string toString(FormulaId id) {
    switch (id) {
        case FormulaId::AdjacentTwoPoint: return "two-point";
        case FormulaId::DistanceTwoPoint: return "distance";
        case FormulaId::ThreePoint: return "three-point";
        case FormulaId::Decreasing: return "decreasing";
        case FormulaId::TwoPointAggregate: return "two-point-sums";
        case FormulaId::ThreePointAggregate: return "three-point-sums";
    }
    return "?";
}

MarginalOracle& OraclePool::at(int n) {
    auto& slot = oracles_[n];
    if (!slot) slot = std::make_unique<MarginalOracle>(n, options_);
    return *slot;
}

std::vector<const ExactDist*> OraclePool::distributions() const {
    std::vector<const ExactDist*> out;
    for (const auto& [n, oracle] : oracles_) {
        auto d = oracle->cached();
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

FormulaReport verifyFormula(FormulaId id, const std::vector<int>& ns, OraclePool& pool) {
    const auto start = Clock::now();
    FormulaReport report;
    report.id = toString(id);
    report.range = rangeOf(ns);
    for (int n : ns) {
        MarginalOracle& oracle = pool.at(n);
        switch (id) {
            case FormulaId::AdjacentTwoPoint:
                report.title = "adjacent two-point correlations E_{w1,w2}";
                for (int w1 = 1; w1 <= n; ++w1) {
                    for (int w2 = 1; w2 <= n; ++w2) {
                        if (w1 == w2) continue;
                        against(report, nearestLabel(n, {w1, w2}), correlations::eAdjacent(n, w1, w2),
                                [&] { return oracle.nearest({w1, w2}); });
                    }
                }
                break;
            case FormulaId::DistanceTwoPoint: {
                report.title = "two-point correlations at distance: E_{j,i}(1,a), rotation, uniform window, top label";
                const auto at = [&](int w1, int wa, int a) {
                    return [&oracle, w1, wa, a] { return oracle.probability(PatternQuery{{{1, w1}, {a, wa}}}); };
                };
                const auto lbl = [&](int w1, int wa, int a) {
                    return "n=" + std::to_string(n) + " P(w1=" + std::to_string(w1) + ",w" + std::to_string(a) +
                           "=" + std::to_string(wa) + ")";
                };
                const Rational uniform(1, static_cast<long>(n) * n);
                for (int i = 1; i <= n; ++i) {
                    for (int j = i + 1; j <= n; ++j) {
                        for (int a = 2; a <= n; ++a) {
                            against(report, lbl(j, i, a), correlations::eDistanceQuotient(n, j, i, a), at(j, i, a),
                                    "quotient");
                            against(report, lbl(i, j, a), correlations::eDistanceQuotient(n, j, i, n - a + 2),
                                    at(i, j, a), "rotated quotient");
                            if (a <= j - i) against(report, lbl(i, j, a), uniform, at(i, j, a), "uniform window");
                            if (j == n) {
                                against(report, lbl(j, i, a), correlations::eDistanceTop(n, i, a), at(j, i, a),
                                        "top label");
                            }
                        }
                    }
                }
                break;
            }
            case FormulaId::ThreePoint: {
                report.title = "three-point correlations, proved patterns and their mirrors";
                using correlations::Pattern3;
                for (int i = 1; i <= n; ++i) {
                    for (int j = i + 1; j <= n; ++j) {
                        for (int k = j + 1; k <= n; ++k) {
                            const std::pair<Pattern3, std::vector<int>> cases[] = {
                                {Pattern3::P321, {k, j, i}}, {Pattern3::P213, {j, i, k}}, {Pattern3::P231, {j, k, i}},
                                {Pattern3::P132, {i, k, j}}, {Pattern3::P312, {k, i, j}}};
                            for (const auto& [p, w] : cases) {
                                against(report, nearestLabel(n, w), correlations::eThree(n, p, i, j, k).value,
                                        [&oracle, w = w] { return oracle.nearest(w); }, correlations::toString(p));
                            }
                        }
                    }
                }
                break;
            }
            case FormulaId::Decreasing:
                report.title = "decreasing nearest-neighbour correlations (Vandermonde product)";
                for (int r = 2; r <= std::min(4, n); ++r) {
                    tuples(n, r, [](const std::vector<int>& w) { return std::is_sorted(w.rbegin(), w.rend()); },
                           [&](const std::vector<int>& w) {
                               against(report, nearestLabel(n, w), correlations::eDecreasing(n, w),
                                       [&] { return oracle.nearest(w); }, "r=" + std::to_string(r));
                           });
                }
                break;
            case FormulaId::TwoPointAggregate: {
                report.title = "aggregated adjacent two-point probabilities";
                const auto agg = correlations::aggregateTwoPoint(n);
                const auto sum = [&](const std::function<bool(int, int)>& in) {
                    return [&oracle, n, in] {
                        Rational s(0);
                        for (int w1 = 1; w1 <= n; ++w1) {
                            for (int w2 = 1; w2 <= n; ++w2) {
                                if (w1 != w2 && in(w1, w2)) s += oracle.nearest({w1, w2});
                            }
                        }
                        return s;
                    };
                };
                const std::string p = "n=" + std::to_string(n);
                against(report, p + " P(w1>w2)", agg.descent, sum([](int a, int b) { return a > b; }));
                against(report, p + " P(w1=w2-1)", agg.stepUp, sum([](int a, int b) { return a == b - 1; }));
                against(report, p + " P(w1<w2-1)", agg.jumpUp, sum([](int a, int b) { return a < b - 1; }));
                report.compare(p + " total", Rational(1), agg.descent + agg.stepUp + agg.jumpUp, "closed forms");
                break;
            }
            case FormulaId::ThreePointAggregate: {
                report.title = "aggregated three-point probabilities";
                if (n < 5) {
                    report.skip("n=" + std::to_string(n), "needs n >= 5");
                    break;
                }
                const auto rows = correlations::aggregateThreePoint(n);
                std::vector<std::vector<std::vector<int>>> members(rows.size());
                tuples(n, 3, {}, [&](const std::vector<int>& w) {
                    members[static_cast<std::size_t>(correlations::aggregateRowOf(n, w[0], w[1], w[2]))].push_back(w);
                });
                Rational total(0);
                for (std::size_t row = 0; row < rows.size(); ++row) {
                    const auto& entry = rows[row];
                    total += entry.value;
                    const std::string lbl = "n=" + std::to_string(n) + " " + entry.pattern;
                    const bool gate = !entry.conjectural;
                    Rational formulaSum(0);
                    for (const auto& w : members[row]) formulaSum += correlations::eThreeAt(n, w[0], w[1], w[2]).value;
                    report.compare(lbl, entry.value, formulaSum, entry.conjectural ? "conjectural closed forms" : "closed forms",
                                   gate);
                    against(report, lbl, entry.value, [&] {
                        Rational s(0);
                        for (const auto& w : members[row]) s += oracle.nearest(w);
                        return s;
                    }, entry.conjectural ? "conjectural enumeration" : "enumeration", gate);
                }
                report.compare("n=" + std::to_string(n) + " all rows", Rational(1), total, "closed forms", false);
                break;
            }
        }
    }
    report.seconds = since(start);
    return report;
}

ConjectureId parseConjectureId(const std::string& text) {
    static const std::map<std::string, ConjectureId> names{
        {"7.4", ConjectureId::IncreasingTriple}, {"8.2", ConjectureId::GappedIncreasing},
        {"8.3", ConjectureId::AppendLarge},      {"8.4", ConjectureId::DistantLarge},
        {"8.5", ConjectureId::TwoBlock}};
    const auto it = names.find(text);
    if (it == names.end()) throw InvalidArgument("unknown conjecture '" + text + "' (expected 7.4, 8.2, 8.3, 8.4 or 8.5)");
    return it->second;
}

std::string toString(ConjectureId id) {
    switch (id) {
        case ConjectureId::IncreasingTriple: return "increasing-triple";
        case ConjectureId::GappedIncreasing: return "gapped-increasing";
        case ConjectureId::AppendLarge: return "append-large";
        case ConjectureId::DistantLarge: return "distant-large";
        case ConjectureId::TwoBlock: return "two-block";
    }
    return "?";
}

std::string cliName(ConjectureId id) {
    switch (id) {
        case ConjectureId::IncreasingTriple: return "7.4";
        case ConjectureId::GappedIncreasing: return "8.2";
        case ConjectureId::AppendLarge: return "8.3";
        case ConjectureId::DistantLarge: return "8.4";
        case ConjectureId::TwoBlock: return "8.5";
    }
    return "?";
}

FormulaReport verifyConjecture(ConjectureId id, int n, OraclePool& pool, const ConjectureOptions& options) {
    if (n < 2) throw InvalidArgument("verifyConjecture: n must be at least 2");
    if (options.r < 0) throw InvalidArgument("verifyConjecture: r must be nonnegative");
    const auto start = Clock::now();
    FormulaReport report;
    report.id = cliName(id) + " " + toString(id);
    report.range = "n=" + std::to_string(n) + (options.r ? " r=" + std::to_string(options.r) : std::string());
    report.conjectural = true;
    MarginalOracle& oracle = pool.at(n);
    const auto lengths = [&](int lo, int hi) {
        std::vector<int> rs;
        for (int r = lo; r <= hi; ++r) {
            if (options.r == 0 || options.r == r) rs.push_back(r);
        }
        return rs;
    };
    const Rational invN(1, n);

    switch (id) {
        case ConjectureId::IncreasingTriple:
            report.title = "increasing three-point correlations E_{i,j,k}";
            if (n < 3) break;
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    for (int k = j + 1; k <= n; ++k) {
                        const std::vector<int> w{i, j, k};
                        const std::string band = j == i + 1 ? (k == j + 1 ? "i,i+1,i+2" : "i,i+1,k")
                                                            : (k == j + 1 ? "i,j,j+1" : "gapped");
                        against(report, nearestLabel(n, w), correlations::eThree(n, correlations::Pattern3::P123, i, j, k).value,
                                [&] { return oracle.nearest(w); }, band);
                    }
                }
            }
            break;
        case ConjectureId::GappedIncreasing:
            report.title = "gapped increasing words have probability 1/n^r";
            for (int r : lengths(2, n)) {
                Rational expected(1);
                for (int a = 0; a < r; ++a) expected *= invN;
                tuples(n, r,
                       [](const std::vector<int>& w) {
                           for (std::size_t a = 1; a < w.size(); ++a) {
                               if (w[a] < w[a - 1] + 2) return false;
                           }
                           return true;
                       },
                       [&](const std::vector<int>& w) {
                           against(report, nearestLabel(n, w), expected, [&] { return oracle.nearest(w); },
                                   "r=" + std::to_string(r));
                       });
            }
            break;
        case ConjectureId::AppendLarge:
            report.title = "appending k > 1 + max label divides the correlation by n";
            for (int r : lengths(1, n - 1)) {
                tuples(n, r, [&](const std::vector<int>& w) { return maxOf(w) + 2 <= n; },
                       [&](const std::vector<int>& w) {
                           const std::string r_ = "r=" + std::to_string(r);
                           Rational base;
                           try {
                               base = oracle.nearest(w);
                           } catch (const BudgetExceeded& e) {
                               report.skip(nearestLabel(n, w) + " and extensions", e.what(), r_);
                               return;
                           }
                           for (int k = maxOf(w) + 2; k <= n; ++k) {
                               auto ext = w;
                               ext.push_back(k);
                               against(report, nearestLabel(n, ext), base * invN, [&] { return oracle.nearest(ext); }, r_);
                           }
                       });
            }
            break;
        case ConjectureId::DistantLarge:
            report.title = "a large label at a later position divides the correlation by n";
            for (int r : lengths(1, n - 1)) {
                tuples(n, r, [&](const std::vector<int>& w) { return maxOf(w) + 1 <= n; },
                       [&](const std::vector<int>& w) {
                           Rational base;
                           try {
                               base = oracle.nearest(w);
                           } catch (const BudgetExceeded& e) {
                               report.skip(nearestLabel(n, w) + " and extensions", e.what());
                               return;
                           }
                           const int mx = maxOf(w);
                           for (int b = r + 1; b <= n; ++b) {
                               const int threshold = b - r + mx;
                               for (int k = std::max(threshold, mx + 1); k <= n; ++k) {
                                   PatternQuery q = PatternQuery::consecutive(w);
                                   q.assignments.emplace_back(b, k);
                                   const std::string lbl = "n=" + std::to_string(n) + " P(" + q.toString() + ")";
                                   std::string band;
                                   bool gate = true;
                                   if (k == threshold) {
                                       band = "outside: k = b-r+max";
                                       gate = false;
                                   } else if (k == threshold + 1) {
                                       band = "boundary: k = b-r+max+1";
                                   } else {
                                       band = "interior";
                                   }
                                   against(report, lbl, base * invN, [&] { return oracle.probability(q); }, band, gate);
                               }
                           }
                       });
            }
            break;
        case ConjectureId::TwoBlock:
            report.title = "independence of two adjacent blocks when min j > 1 + max i";
            for (int r = 1; r < n; ++r) {
                for (int s = 1; r + s <= n; ++s) {
                    if (options.r != 0 && options.r != r + s) continue;
                    tuples(n, r, [&](const std::vector<int>& a) { return maxOf(a) + 2 <= n; },
                           [&](const std::vector<int>& a) {
                               const int floor = maxOf(a) + 2;
                               tuples(n, s, [&](const std::vector<int>& b) { return minOf(b) >= floor; },
                                      [&](const std::vector<int>& b) {
                                          PatternQuery q = PatternQuery::consecutive(a);
                                          for (std::size_t t = 0; t < b.size(); ++t) {
                                              q.assignments.emplace_back(r + 1 + static_cast<int>(t), b[t]);
                                          }
                                          const std::string lbl = "n=" + std::to_string(n) + " P(" + q.toString() + ")";
                                          const std::string band = "r=" + std::to_string(r) + ",s=" + std::to_string(s);
                                          try {
                                              const Rational expected = oracle.nearest(a) * oracle.nearest(b);
                                              report.compare(lbl, expected, oracle.probability(q), band);
                                          } catch (const BudgetExceeded& e) {
                                              report.skip(lbl, e.what(), band);
                                          }
                                      });
                           });
                }
            }
            break;
    }
    report.seconds = since(start);
    return report;
}

FormulaReport verifySsyt(int maxTwo, int maxThree) {
    if (maxTwo < 1 || maxThree < 1) throw InvalidArgument("verifySsyt: bounds must be positive");
    const auto start = Clock::now();
    FormulaReport report;
    report.id = "ssyt";
    report.title = "tableau closed forms against brute-force enumeration";
    report.range = "two columns <= " + std::to_string(maxTwo) + ", three columns <= " + std::to_string(maxThree);
    const auto lbl = [](const char* name, std::initializer_list<long> args) {
        std::string s = std::string(name) + "(";
        bool first = true;
        for (long a : args) {
            if (!first) s += ",";
            s += std::to_string(a);
            first = false;
        }
        return s + ")";
    };

    for (int m = 1; m <= maxTwo; ++m) {
        for (int r = 0; r <= maxTwo; ++r) {
            for (int l = 0; l <= r; ++l) {
                ssyt::TableauStream stream({r, l}, m);
                ssyt::Tableau t;
                BigInt total = 0;
                std::map<std::pair<int, int>, BigInt> firstRow;
                std::vector<BigInt> inSecond(static_cast<std::size_t>(m) + 1, 0);
                while (stream.next(t)) {
                    ++total;
                    if (l >= 1) {
                        firstRow[{t.columns[0][0], t.columns[1][0]}] += 1;
                        for (int v : t.columns[1]) inSecond[static_cast<std::size_t>(v)] += 1;
                    }
                }
                report.compare(lbl("ssyt2", {r, l, m}), Rational(ssyt::ssyt2(r, l, m)), Rational(total), "ssyt2");
                if (l < 1 || r > m) continue;
                for (int alpha = 1; alpha <= m; ++alpha) {
                    for (int beta = alpha; beta <= m; ++beta) {
                        const auto it = firstRow.find({alpha, beta});
                        const BigInt seen = it == firstRow.end() ? BigInt(0) : it->second;
                        report.compare(lbl("Z", {r, l, alpha, beta, m}), Rational(ssyt::countZ(r, l, alpha, beta, m)),
                                       Rational(seen), "countZ");
                    }
                }
                const BigInt plateau = ssyt::countY(r, l, m, m);
                for (int beta = 1; beta <= m; ++beta) {
                    const BigInt y = ssyt::countY(r, l, beta, m);
                    report.compare(lbl("Y", {r, l, beta, m}), Rational(y),
                                   Rational(inSecond[static_cast<std::size_t>(beta)]), "countY");
                    if (beta >= l + m - r) {
                        report.compare(lbl("Y window", {r, l, beta, m}), Rational(plateau), Rational(y),
                                       "constancy window");
                    }
                }
            }
        }
    }
    for (int r = 1; r <= maxTwo; ++r) {
        for (int beta = 1; beta <= maxTwo; ++beta) {
            std::vector<BigInt> byAlpha(static_cast<std::size_t>(beta) + 1, 0);
            ssyt::TableauStream stream({r, r}, beta);
            ssyt::Tableau t;
            while (stream.next(t)) {
                const auto last = t.row(static_cast<std::size_t>(r - 1));
                if (last[1] == beta) byAlpha[static_cast<std::size_t>(last[0])] += 1;
            }
            for (int alpha = 1; alpha <= beta; ++alpha) {
                report.compare(lbl("X", {r, alpha, beta}), Rational(ssyt::countX(r, alpha, beta)),
                               Rational(byAlpha[static_cast<std::size_t>(alpha)]), "countX");
            }
        }
    }
    for (int m = 1; m <= maxThree; ++m) {
        for (int a = 0; a <= maxThree; ++a) {
            for (int b = 0; b <= a; ++b) {
                for (int c = 0; c <= b; ++c) {
                    report.compare(lbl("ssyt3", {a, b, c, m}), Rational(ssyt::ssyt3(a, b, c, m)),
                                   Rational(ssyt::countTableaux({a, b, c}, m)), "ssyt3");
                }
            }
        }
    }
    report.seconds = since(start);
    return report;
}

FormulaReport verifySymmetries(const std::vector<const ExactDist*>& dists,
                               const std::function<const ExactDist&(const Sector&)>& lawOf) {
    const auto start = Clock::now();
    FormulaReport report;
    report.id = "symmetries";
    report.title = "rotation invariance, particle-hole symmetry, one-point marginals";
    report.range = std::to_string(dists.size()) + " laws";
    for (const ExactDist* dist : dists) {
        const Sector& m = dist->sector();
        const std::string name = "m=(" + m.toString() + ")";
        bool rotation = true;
        for (const auto& [word, weight] : dist->entries()) {
            if (dist->weight(word.rotatedLeft()) != weight) {
                rotation = false;
                break;
            }
        }
        report.check(name + " rotation", rotation, {}, "rotation");

        try {
            const ExactDist& rev = lawOf(m.reversed());
            bool ok = true;
            for (const auto& [word, weight] : dist->entries()) {
                if (dist->probability(word) != rev.probability(word.particleHole(m.species()))) {
                    ok = false;
                    break;
                }
            }
            report.check(name + " particle-hole", ok, {}, "particle-hole");
        } catch (const BudgetExceeded& e) {
            report.skip(name + " particle-hole", e.what(), "particle-hole");
        }

        const int ringSize = m.ringSize();
        for (int label = 1; label <= m.species(); ++label) {
            for (int pos = 1; pos <= ringSize; ++pos) {
                const Rational p = correlations::marginal(*dist, PatternQuery{{{pos, label}}});
                if (pos == 1 || p != Rational(m.count(label), ringSize)) {
                    report.compare(name + " P(w" + std::to_string(pos) + "=" + std::to_string(label) + ")",
                                   Rational(m.count(label), ringSize), p, "one-point");
                }
            }
        }
    }
    report.seconds = since(start);
    return report;
}

std::vector<Sector> sectorsOf(int ringSize, int species) {
    std::vector<Sector> out;
    if (species < 1 || species > ringSize) return out;
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int left) {
        const int remaining = species - static_cast<int>(parts.size());
        if (remaining == 0) {
            if (left == 0) out.emplace_back(parts);
            return;
        }
        for (int p = 1; p <= left - (remaining - 1); ++p) {
            parts.push_back(p);
            rec(left - p);
            parts.pop_back();
        }
    };
    rec(ringSize);
    return out;
}

FormulaReport verifyLumping(const LumpingOptions& options, const std::function<void(const ExactDist&)>& sink) {
    const auto start = Clock::now();
    FormulaReport report;
    report.id = "lumping";
    report.title = "multiline-queue counting against the generator kernel";
    report.range = "species <= " + std::to_string(options.maxSpecies) + " with N <= " + std::to_string(options.maxRing) +
                   ", distinct species up to " + std::to_string(options.distinctUpTo);
    std::vector<Sector> sectors;
    for (int ring = 2; ring <= options.maxRing; ++ring) {
        for (int s = 2; s <= std::min(options.maxSpecies, ring); ++s) {
            for (auto& sec : sectorsOf(ring, s)) sectors.push_back(std::move(sec));
        }
    }
    for (int n = 2; n <= options.distinctUpTo; ++n) {
        const Sector d = Sector::distinct(n);
        if (std::find(sectors.begin(), sectors.end(), d) == sectors.end()) sectors.push_back(d);
    }
    for (const Sector& sector : sectors) {
        const std::string name = "m=(" + sector.toString() + ")";
        try {
            const ExactDist byQueues =
                mlq::stationaryFromQueues(sector, mlq::EnumerationOptions{options.queueBudget, options.threads});
            tasep::SolveOptions solve;
            solve.threads = options.threads;
            const ExactDist byKernel = tasep::solveStationary(tasep::buildGenerator(sector, options.stateBudget), solve);
            report.check(name, byQueues.sameLaw(byKernel),
                         std::to_string(byQueues.size()) + " words, total " + mtasep::toString(byQueues.total()));
            if (sink) sink(byQueues);
        } catch (const BudgetExceeded& e) {
            report.skip(name, e.what());
        }
    }
    report.seconds = since(start);
    return report;
}

}  // namespace mtasep::verify
