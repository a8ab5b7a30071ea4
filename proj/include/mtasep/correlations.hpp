#pragma once

// Closed-form correlations of the distinct-species TASEP on n sites, the
// exact marginal oracle they are checked against, and the projection onto
// coarser sectors that keeps that oracle within enumeration budgets.
//
// E_{w_1,...,w_r} is P(w_a = i_a for a = 1..r); E_{j,i}(1,a) is
// P(w_1 = j, w_a = i). Labels and positions are 1-based.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mtasep/combinatorics.hpp"
#include "mtasep/exact_dist.hpp"
#include "mtasep/mlq.hpp"
#include "mtasep/pattern.hpp"
#include "mtasep/sector.hpp"

namespace mtasep::correlations {

/// Exact probability of the words matching q.
Rational marginal(const ExactDist& dist, const PatternQuery& q);

/// Reduction of the distinct-species chain on n sites to a coarser sector.
/// Each queried label keeps a species of its own and every maximal run of
/// unqueried labels merges into one species.
struct Projection {
    int n = 0;
    Sector sector;
    /// labelMap[l] is the projected species of original label l (index 0 unused).
    std::vector<int> labelMap;

    [[nodiscard]] int project(int label) const { return labelMap.at(static_cast<std::size_t>(label)); }
};

/// labels strictly increasing within 1..n.
Projection projectSector(int n, const std::vector<int>& labels);

struct OracleOptions {
    std::uint64_t budget = mlq::kDefaultQueueBudget;
    int threads = 0;
};

/// Exact marginals of the distinct-species chain on n sites, obtained by
/// projecting each query to the smallest sufficient sector and counting
/// multiline queues there. Distributions and per-position marginal tables
/// are cached, so a battery of queries costs one enumeration per sector.
class MarginalOracle {
public:
    explicit MarginalOracle(int n, OracleOptions options = {});

    [[nodiscard]] int n() const { return n_; }

    /// P(w_p = label for all (p, label) in q). Labels must be distinct.
    /// Throws BudgetExceeded when the projected sector is over budget.
    Rational probability(const PatternQuery& q);
    /// E_{labels} at positions 1..r.
    Rational nearest(const std::vector<int>& labels);

    /// Stationary law of a sector (any sector on n sites), cached.
    const ExactDist& distribution(const Sector& sector);

    /// Every distribution computed so far.
    [[nodiscard]] std::vector<const ExactDist*> cached() const;
    [[nodiscard]] std::uint64_t queuesEnumerated() const { return queues_; }

private:
    using Table = std::map<std::vector<int>, BigInt>;
    const Table& table(const Sector& sector, const std::vector<int>& positions);

    int n_;
    OracleOptions options_;
    std::map<Sector, std::unique_ptr<ExactDist>> dists_;
    std::map<std::pair<Sector, std::vector<int>>, Table> tables_;
    std::uint64_t queues_ = 0;
};

// ---- two-point ----

/// E_{w1,w2} for adjacent positions.
Rational eAdjacent(int n, int w1, int w2);

/// P(w_1 = w1, w_a = wa), 2 <= a <= n. Uses the Y-tableau quotient for
/// w1 > wa and the rotation identity otherwise, cross-asserting the uniform
/// window and the w1 = n closed form wherever they apply.
Rational eDistance(int n, int w1, int wa, int a);

/// The four-term Y quotient for E_{j,i}(1,a), j > i.
Rational eDistanceQuotient(int n, int j, int i, int a);

/// E_{n,i}(1,a) in closed form.
Rational eDistanceTop(int n, int i, int a);

struct TwoPointAggregate {
    Rational descent;   // P(w1 > w2)
    Rational stepUp;    // P(w1 = w2 - 1)
    Rational jumpUp;    // P(w1 < w2 - 1)
};
TwoPointAggregate aggregateTwoPoint(int n);

// ---- three-point ----

/// Relative order of (w1, w2, w3), named by the ranks of the letters.
enum class Pattern3 { P321, P213, P132, P312, P231, P123 };

Pattern3 parsePattern3(const std::string& text);
std::string toString(Pattern3 p);
Pattern3 patternOf(int w1, int w2, int w3);

/// A value that may rest on an unproved formula.
struct ThreePointValue {
    Rational value;
    bool conjectural = false;
};

/// E_{w1,w2,w3} for the arrangement of i < j < k given by the pattern,
/// e.g. P213 gives E_{j,i,k}.
ThreePointValue eThree(int n, Pattern3 pattern, int i, int j, int k);
/// Same, dispatched from the letters.
ThreePointValue eThreeAt(int n, int w1, int w2, int w3);

/// E_{i_1,...,i_r} for i_1 > ... > i_r.
Rational eDecreasing(int n, const std::vector<int>& labels);

/// One row of the aggregated three-point table: the probability that
/// (w1, w2, w3) falls into the row's class.
struct AggregateRow {
    std::string pattern;
    Rational value;
    bool conjectural = false;
};

/// The 13 rows; more general rows exclude the specific ones listed later.
std::vector<AggregateRow> aggregateThreePoint(int n);
/// Index of the aggregate row containing (w1, w2, w3), letters distinct.
int aggregateRowOf(int n, int w1, int w2, int w3);

// ---- continuum trend ----

struct TrendPoint {
    std::string quantity;
    std::vector<int> ns;
    std::vector<double> scaled;
    double limit = 0.0;
    bool monotone = false;  // |scaled - limit| strictly decreasing in n
};

/// Finite-n closed forms rescaled toward the continuum densities at n = 20,
/// 40, 80. Informational.
std::vector<TrendPoint> densityTrend();

}  // namespace mtasep::correlations
