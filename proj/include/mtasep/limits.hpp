#pragma once

// Limit objects: the walk direction psi, the n-core growth process, the
// limit curve C_n and the diagonal distance between a scaled core and C_n.
//
// Frame: a partition's cell (row i, column j) is the unit square
// [j-1, j] x [i-1, i]; x counts columns and y counts rows. The boundary of
// the diagram runs from (0, rows) to (first row, 0), and u = x - y
// increases by one along each unit step.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtasep/combinatorics.hpp"

namespace mtasep::limits {

// ---- psi ----

struct DirectionVector {
    std::vector<Rational> components;
    std::vector<double> unit;
};

/// Components n+1-2k, k = 1..n.
DirectionVector psiClosed(int n);
/// sum_{j>i} E_{j,i} (e_i - e_j) from the adjacent two-point correlations.
DirectionVector psiFromCorrelations(int n);
/// c with b = c * a exactly, if the vectors are collinear with c > 0.
std::optional<Rational> positiveRatio(const DirectionVector& a, const DirectionVector& b);

// ---- partitions and cores ----

struct CorePartition {
    std::vector<std::int64_t> rows;  // weakly decreasing, positive

    [[nodiscard]] std::int64_t boxes() const;
    /// Hook length of cell (i, j), 1-based; the cell must exist.
    [[nodiscard]] std::int64_t hook(std::int64_t i, std::int64_t j) const;
    [[nodiscard]] std::string toString() const;
    friend bool operator==(const CorePartition&, const CorePartition&) = default;
};

/// Throws InvalidArgument unless rows are positive and weakly decreasing.
void validatePartition(const CorePartition& p);

/// No hook length divisible by n. Uses the bead/hole description of hooks:
/// cells correspond to pairs (bead b, hole h < b) of the Maya diagram with
/// hook length b - h.
bool isNCore(const CorePartition& p, int n);
/// Same predicate by computing every hook from row and column lengths.
bool isNCoreByHooks(const CorePartition& p, int n);

/// Adds a box at every addable cell whose content (column - row) is
/// congruent to t mod n. Works on row lengths: O(rows).
CorePartition growStep(const CorePartition& core, int n, int t);

/// An n-core stored on its n-runner abacus. level(r) is the number of beads
/// runner r carries at or above position r, so runner r holds exactly the
/// positions r + n*q with q < level(r). Each growth step is O(1).
class NCore {
public:
    explicit NCore(int n);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const std::vector<std::int64_t>& levels() const { return h_; }
    [[nodiscard]] std::int64_t boxes() const { return boxes_; }

    /// Growth step with residue t; returns the number of boxes added.
    std::int64_t grow(int t);

    [[nodiscard]] CorePartition partition() const;
    /// Boundary steps from position `first` upward: true for a bead (a
    /// vertical step), false for a hole. Positions below `first` are beads,
    /// positions past the end are holes.
    [[nodiscard]] std::vector<bool> maya(std::int64_t& first) const;

private:
    int n_;
    std::vector<std::int64_t> h_;
    std::int64_t boxes_ = 0;
};

/// Residues drawn i.i.d. uniform on 0..n-1 from Rng(seed).
NCore randomGrowth(int n, std::int64_t steps, std::uint64_t seed);
/// A fixed residue sequence (the test hook for randomGrowth).
NCore replayGrowth(int n, const std::vector<int>& residues);

/// Bead counts of the aligned blocks of n Maya positions, lowest block
/// first, computed from the row lengths. For an n-core the counts are
/// nonincreasing, so the boundary is made of runs of blocks with i vertical
/// and n-i horizontal steps.
std::vector<int> blockProfile(const CorePartition& p, int n);

// ---- geometry ----

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct LimitCurve {
    int n = 0;
    double gamma = 0.0;
    std::vector<Point> vertices;  // gamma * (C(i,2), C(n-i+1,2)), i = 1..n
};

LimitCurve limitCurve(int n);
/// Area enclosed by the curve and the two axes.
double areaUnder(const std::vector<Point>& curve);

/// Corner points of the diagram boundary, unscaled, from (0, rows) to
/// (first row, 0).
std::vector<Point> staircase(const CorePartition& p);
std::vector<Point> staircase(const NCore& core);

/// sup over diagonals x - y = c of the distance between the unit-area
/// staircase and C_n, on the vertex diagonals of both curves plus 1000
/// uniform values of c. Beyond their end points both curves continue along
/// the axes.
double shapeDistance(const CorePartition& core, int n);
double shapeDistance(const NCore& core);
/// The same for an explicit polyline already scaled to unit area.
double diagonalDistance(const std::vector<Point>& a, const std::vector<Point>& b);

std::string toCsv(const std::vector<Point>& points);

}  // namespace mtasep::limits
