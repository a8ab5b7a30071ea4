#pragma once

// Verification harness: closed forms against exact enumeration, instance by
// instance, with exact rational comparison throughout.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mtasep/combinatorics.hpp"
#include "mtasep/correlations.hpp"
#include "mtasep/exact_dist.hpp"
#include "mtasep/tasep.hpp"

namespace mtasep::verify {

enum class Status { Match, Mismatch, Skipped };
enum class Verdict { Pass, Fail, Incomplete };

std::string toString(Status s);
std::string toString(Verdict v);

struct Instance {
    std::string label;
    std::optional<Rational> expected;
    std::optional<Rational> observed;
    Status status = Status::Skipped;
    /// Sub-family of the instance (e.g. a boundary case).
    std::string band;
    /// Gating instances decide the verdict; the others are informational.
    bool gating = true;
    std::string note;
};

struct FormulaReport {
    std::string id;
    std::string title;
    std::string range;
    bool conjectural = false;
    std::vector<Instance> instances;
    double seconds = 0.0;

    /// Fail iff a gating instance mismatches; Incomplete if none mismatch but
    /// some gating instance was skipped or nothing was tested.
    [[nodiscard]] Verdict verdict() const;
    [[nodiscard]] std::size_t count(Status s, bool gatingOnly = true) const;

    /// Records expected vs observed.
    void compare(std::string label, const Rational& expected, const Rational& observed, std::string band = {},
                 bool gating = true);
    /// Records a check without a rational value.
    void check(std::string label, bool ok, std::string note = {}, std::string band = {}, bool gating = true);
    void skip(std::string label, std::string why, std::string band = {});
};

enum class FormulaId {
    AdjacentTwoPoint,     // E_{w1,w2}
    DistanceTwoPoint,     // E_{j,i}(1,a), its uniform window and top-label form
    ThreePoint,           // proved three-point patterns and mirrors
    Decreasing,           // Vandermonde product for decreasing words
    TwoPointAggregate,    // P(w1 > w2), P(w1 = w2-1), P(w1 < w2-1)
    ThreePointAggregate,  // aggregated three-point table
};

FormulaId parseFormulaId(const std::string& text);
std::string toString(FormulaId id);

/// Oracles are shared across calls so a battery enumerates each sector once.
class OraclePool {
public:
    explicit OraclePool(correlations::OracleOptions options = {}) : options_(options) {}
    correlations::MarginalOracle& at(int n);
    [[nodiscard]] std::vector<const ExactDist*> distributions() const;
    [[nodiscard]] const correlations::OracleOptions& options() const { return options_; }

private:
    correlations::OracleOptions options_;
    std::map<int, std::unique_ptr<correlations::MarginalOracle>> oracles_;
};

FormulaReport verifyFormula(FormulaId id, const std::vector<int>& ns, OraclePool& pool);

enum class ConjectureId {
    IncreasingTriple,   // the four-case increasing three-point formula
    GappedIncreasing,   // 1/n^r for gapped increasing words
    AppendLarge,        // appending a large label divides by n
    DistantLarge,       // the same at a later position
    TwoBlock,           // independence of two nearest-neighbour blocks
};

/// Accepts the numbering used on the command line ("7.4", "8.2", ...).
ConjectureId parseConjectureId(const std::string& text);
std::string toString(ConjectureId id);
std::string cliName(ConjectureId id);

struct ConjectureOptions {
    /// Restrict to words of this length (0: all lengths).
    int r = 0;
};

/// Never claims more than "no counterexample among the instances listed".
FormulaReport verifyConjecture(ConjectureId id, int n, OraclePool& pool, const ConjectureOptions& options = {});

/// Closed-form tableau counts against the brute-force generator: two-column
/// quantities for parameters up to maxTwo, three columns up to maxThree.
FormulaReport verifySsyt(int maxTwo, int maxThree);

/// Rotation invariance, particle-hole symmetry and one-point marginals.
/// `lawOf` supplies the law of the reversed sector.
FormulaReport verifySymmetries(const std::vector<const ExactDist*>& dists,
                               const std::function<const ExactDist&(const Sector&)>& lawOf);

struct LumpingOptions {
    int maxSpecies = 4;
    int maxRing = 7;
    /// Also the distinct-species sectors up to this size.
    int distinctUpTo = 5;
    std::uint64_t queueBudget = mlq::kDefaultQueueBudget;
    std::size_t stateBudget = tasep::kDefaultStateBudget;
    int threads = 0;
};

/// Queue-counting law against the generator kernel, sector by sector. Each
/// queue-counting law is handed to `sink` (if given) for later checks.
FormulaReport verifyLumping(const LumpingOptions& options,
                            const std::function<void(const ExactDist&)>& sink = {});

/// All compositions of N with the given number of parts.
std::vector<Sector> sectorsOf(int ringSize, int species);

}  // namespace mtasep::verify
