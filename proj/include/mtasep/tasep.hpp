#pragma once

// The multispecies TASEP on a ring: exact generator, exact stationary law by
// a null-space solve, and continuous-time Monte Carlo.
//
// A cyclic adjacent pair (w_c, w_{c+1}) with w_c > w_{c+1} swaps at rate 1.

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "mtasep/exact_dist.hpp"
#include "mtasep/pattern.hpp"
#include "mtasep/sector.hpp"

namespace mtasep::tasep {

inline constexpr std::size_t kDefaultStateBudget = 100'000;

/// The rate matrix M with M(sigma, tau) = rate of tau -> sigma, so every
/// column sums to zero and the stationary law spans the kernel of M.
struct Generator {
    Sector sector;
    std::vector<Word> states;                        // lexicographic
    std::unordered_map<Word, std::size_t> index;
    std::vector<std::vector<std::size_t>> targets;   // targets[s]: states reachable from s in one swap

    /// M(sigma, tau) as a signed integer; off-diagonal entries are 0 or 1.
    [[nodiscard]] int rate(std::size_t sigma, std::size_t tau) const;
    /// M(s, s) = -(number of transitions out of s).
    [[nodiscard]] int diagonal(std::size_t s) const { return -static_cast<int>(targets[s].size()); }
    [[nodiscard]] std::size_t size() const { return states.size(); }
};

/// Throws BudgetExceeded when the sector has more than `stateBudget` states.
Generator buildGenerator(const Sector& sector, std::size_t stateBudget = kDefaultStateBudget);

struct SolveOptions {
    /// Solve the chain lumped by rotation classes (exact, since rotation
    /// commutes with the dynamics). Off: solve the full generator.
    bool quotientByRotation = true;
    /// Largest dense system attempted.
    std::size_t maxDenseSize = 4000;
    std::size_t maxPrimes = 8;
    int threads = 0;
    /// Use the sequential elimination kernel.
    bool serial = false;
};

/// Exact positive kernel vector of M normalized to sum 1. Throws
/// InternalError when the kernel is not one-dimensional (or the answer fails
/// exact verification), BudgetExceeded when the dense system is too large.
ExactDist solveStationary(const Generator& gen, const SolveOptions& options = {});

struct SimulationOptions {
    double horizon = 1.0e4;
    double burnIn = 1.0e2;
    std::uint64_t seed = 1;
    int batches = 50;
};

struct PatternEstimate {
    std::string pattern;
    double estimate = 0.0;
    double standardError = 0.0;
};

struct TrajectoryStats {
    Sector sector;
    std::uint64_t seed = 0;
    double horizon = 0.0;
    double burnIn = 0.0;
    /// Time over which occupancies were averaged (horizon - burnIn).
    double totalTime = 0.0;
    std::uint64_t events = 0;
    /// FNV-1a digest of the sequence of swap positions.
    std::uint64_t eventHash = 0;
    std::vector<PatternEstimate> estimates;
};

/// Time-weighted pattern occupancies of one trajectory started from the
/// sorted word. Standard errors come from batch means.
TrajectoryStats simulate(const Sector& sector, const SimulationOptions& options,
                         const std::vector<SimPattern>& patterns);

/// Independent trajectories with seeds Rng::split(options.seed, k), run in
/// parallel across trajectories.
std::vector<TrajectoryStats> simulateMany(const Sector& sector, const SimulationOptions& options,
                                          const std::vector<SimPattern>& patterns, int trajectories,
                                          int threads = 0);

}  // namespace mtasep::tasep
