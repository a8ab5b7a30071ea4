#include "mtasep/tasep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <optional>

#include <omp.h>

#include "mtasep/error.hpp"
#include "mtasep/modular.hpp"
#include "mtasep/rng.hpp"

namespace mtasep::tasep {

namespace {

Word swapped(const Word& w, int c) {
    const int n = w.size();
    auto letters = w.letters();
    std::swap(letters[static_cast<std::size_t>(c)], letters[static_cast<std::size_t>((c + 1) % n)]);
    return Word::fromLetters(letters);
}

// Rotation classes of the generator's states. With the quotient disabled
// every state is its own class.
struct Classes {
    std::vector<std::size_t> of;          // state -> class
    std::vector<std::size_t> rep;         // class -> representative state
    std::vector<std::size_t> size;        // class -> number of states
};

Classes classify(const Generator& gen, bool byRotation) {
    Classes cls;
    const std::size_t n = gen.size();
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    cls.of.assign(n, unset);
    for (std::size_t s = 0; s < n; ++s) {
        if (cls.of[s] != unset) continue;
        const std::size_t id = cls.rep.size();
        cls.rep.push_back(s);
        cls.size.push_back(0);
        Word w = gen.states[s];
        const int turns = byRotation ? w.size() : 1;
        for (int k = 0; k < turns; ++k, w = w.rotatedLeft()) {
            const std::size_t t = gen.index.at(w);
            if (cls.of[t] == unset) {
                cls.of[t] = id;
                ++cls.size[id];
            }
        }
    }
    return cls;
}

// Lumped column of class c: (target class, rate) pairs plus the diagonal.
struct LumpedColumn {
    std::vector<std::pair<std::size_t, long>> entries;
};

std::vector<LumpedColumn> lump(const Generator& gen, const Classes& cls) {
    std::vector<LumpedColumn> cols(cls.rep.size());
    for (std::size_t c = 0; c < cls.rep.size(); ++c) {
        const std::size_t s = cls.rep[c];
        auto& e = cols[c].entries;
        e.emplace_back(c, gen.diagonal(s));
        for (std::size_t t : gen.targets[s]) e.emplace_back(cls.of[t], 1);
    }
    return cols;
}

BigInt crtCombine(const BigInt& r, const BigInt& m, std::uint64_t residue, std::uint64_t prime) {
    const BigInt p(static_cast<unsigned long>(prime));
    BigInt inv;
    const BigInt mModP = m % p;
    mpz_invert(inv.get_mpz_t(), mModP.get_mpz_t(), p.get_mpz_t());
    BigInt delta = (BigInt(static_cast<unsigned long>(residue)) - r % p) % p;
    if (delta < 0) delta += p;
    BigInt k = (delta * inv) % p;
    return r + m * k;
}

bool kernelCheck(const Generator& gen, const std::vector<BigInt>& weight) {
    // (M y)(sigma) = sum_tau M(sigma, tau) y(tau), accumulated column by column.
    std::vector<BigInt> acc(gen.size(), 0);
    for (std::size_t tau = 0; tau < gen.size(); ++tau) {
        acc[tau] += gen.diagonal(tau) * weight[tau];
        for (std::size_t sigma : gen.targets[tau]) acc[sigma] += weight[tau];
    }
    return std::all_of(acc.begin(), acc.end(), [](const BigInt& v) { return v == 0; });
}

}  // namespace

int Generator::rate(std::size_t sigma, std::size_t tau) const {
    if (sigma == tau) return diagonal(sigma);
    const auto& out = targets[tau];
    return std::find(out.begin(), out.end(), sigma) != out.end() ? 1 : 0;
}

Generator buildGenerator(const Sector& sector, std::size_t stateBudget) {
    const BigInt count = sector.stateCount();
    if (count > BigInt(static_cast<unsigned long>(stateBudget))) {
        throw BudgetExceeded("buildGenerator: sector " + sector.toString() + " has " + toString(count) +
                             " states, budget " + std::to_string(stateBudget));
    }
    Generator gen;
    gen.sector = sector;
    gen.states = allWords(sector);
    gen.index.reserve(gen.states.size());
    for (std::size_t s = 0; s < gen.states.size(); ++s) gen.index.emplace(gen.states[s], s);
    gen.targets.resize(gen.states.size());
    const int n = sector.ringSize();
    for (std::size_t s = 0; s < gen.states.size(); ++s) {
        const Word& w = gen.states[s];
        if (n < 2) continue;
        for (int c = 0; c < n; ++c) {
            if (w[c] > w[(c + 1) % n]) gen.targets[s].push_back(gen.index.at(swapped(w, c)));
        }
    }
    return gen;
}

ExactDist solveStationary(const Generator& gen, const SolveOptions& options) {
    if (gen.size() == 0) throw InvalidArgument("solveStationary: empty generator");
    if (gen.size() == 1) return ExactDist(gen.sector, {{gen.states[0], BigInt(1)}});

    const Classes cls = classify(gen, options.quotientByRotation);
    const std::size_t k = cls.rep.size();
    if (k > options.maxDenseSize) {
        throw BudgetExceeded("solveStationary: dense system of size " + std::to_string(k) + " exceeds " +
                             std::to_string(options.maxDenseSize));
    }
    const auto cols = lump(gen, cls);

    BigInt modulus = 1;
    std::vector<BigInt> combined(k, 0);
    int singular = 0;
    for (std::size_t attempt = 0; attempt < options.maxPrimes; ++attempt) {
        const std::uint64_t prime = modular::primeAt(attempt);
        const modular::Modulus mod(prime);
        modular::DenseMatrix a(k);
        for (std::size_t c = 0; c < k; ++c) {
            for (const auto& [r, v] : cols[c].entries) a.at(r, c) = mod.add(a.at(r, c), mod.reduce(v));
        }
        // Replace the last balance equation by the normalization sum = 1.
        for (std::size_t c = 0; c < k; ++c) a.at(k - 1, c) = 1;
        std::vector<std::uint64_t> b(k, 0);
        b[k - 1] = 1;
        auto x = options.serial ? modular::solveSerial(std::move(a), std::move(b), mod)
                                : modular::solve(std::move(a), std::move(b), mod, options.threads);
        if (!x) {
            if (++singular >= 2) {
                throw InternalError("solveStationary: null space dimension != 1 for sector " +
                                    gen.sector.toString());
            }
            continue;
        }
        for (std::size_t c = 0; c < k; ++c) combined[c] = crtCombine(combined[c], modulus, (*x)[c], prime);
        modulus *= BigInt(static_cast<unsigned long>(prime));

        std::vector<Rational> mass;
        mass.reserve(k);
        bool ok = true;
        for (std::size_t c = 0; c < k && ok; ++c) {
            auto q = modular::reconstruct(combined[c], modulus);
            if (!q || q->sign() <= 0) ok = false;
            else mass.push_back(*q);
        }
        if (!ok) continue;

        // Class mass spread evenly over the class; common denominator D.
        BigInt denom = 1;
        for (std::size_t c = 0; c < k; ++c) {
            const BigInt d = mass[c].denominator() * static_cast<unsigned long>(cls.size[c]);
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), d.get_mpz_t());
        }
        std::vector<BigInt> weight(gen.size());
        BigInt sum = 0;
        for (std::size_t s = 0; s < gen.size(); ++s) {
            const std::size_t c = cls.of[s];
            weight[s] = mass[c].numerator() * (denom / (mass[c].denominator() * static_cast<unsigned long>(cls.size[c])));
            sum += weight[s];
        }
        if (sum != denom || !kernelCheck(gen, weight)) continue;

        BigInt g = 0;
        for (const auto& w : weight) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_mpz_t());
        std::vector<ExactDist::Entry> entries;
        entries.reserve(gen.size());
        for (std::size_t s = 0; s < gen.size(); ++s) entries.emplace_back(gen.states[s], BigInt(weight[s] / g));
        return ExactDist(gen.sector, std::move(entries));
    }
    throw InternalError("solveStationary: no verified solution after " + std::to_string(options.maxPrimes) +
                        " primes for sector " + gen.sector.toString());
}

TrajectoryStats simulate(const Sector& sector, const SimulationOptions& options,
                         const std::vector<SimPattern>& patterns) {
    if (patterns.empty()) throw InvalidArgument("simulate: empty pattern list");
    if (!(options.burnIn >= 0.0) || !(options.horizon > options.burnIn) || !std::isfinite(options.horizon)) {
        throw InvalidArgument("simulate: need horizon > burnIn >= 0");
    }
    if (options.batches < 2) throw InvalidArgument("simulate: need at least two batches");
    for (const auto& p : patterns) std::visit([&](const auto& q) { q.validate(sector); }, p);

    const int n = sector.ringSize();
    std::vector<int> letters;
    for (int label = 1; label <= sector.species(); ++label) letters.insert(letters.end(), sector.count(label), label);

    // Enabled swaps: cyclic positions c with letters[c] > letters[c+1].
    std::vector<int> enabled;
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    const auto refresh = [&](int c) {
        const bool on = n >= 2 && letters[c] > letters[(c + 1) % n];
        auto& s = slot[static_cast<std::size_t>(c)];
        if (on && s < 0) {
            s = static_cast<int>(enabled.size());
            enabled.push_back(c);
        } else if (!on && s >= 0) {
            const int last = enabled.back();
            enabled[static_cast<std::size_t>(s)] = last;
            slot[static_cast<std::size_t>(last)] = s;
            enabled.pop_back();
            s = -1;
        }
    };
    for (int c = 0; c < n; ++c) refresh(c);

    const std::size_t np = patterns.size();
    const auto B = static_cast<std::size_t>(options.batches);
    const double window = options.horizon - options.burnIn;
    const double batchLength = window / static_cast<double>(B);
    std::vector<double> occupancy(B * np, 0.0);
    std::vector<char> active(np, 0);
    const auto evaluate = [&] {
        const Word w = Word::fromLetters(letters);
        for (std::size_t p = 0; p < np; ++p) {
            active[p] = std::visit([&](const auto& q) { return q.matches(w); }, patterns[p]) ? 1 : 0;
        }
    };
    const auto accumulate = [&](double from, double to) {
        from = std::max(from, options.burnIn);
        while (from < to) {
            auto b = static_cast<std::size_t>((from - options.burnIn) / batchLength);
            if (b >= B) b = B - 1;
            const double end = b + 1 == B ? to : std::min(to, options.burnIn + batchLength * static_cast<double>(b + 1));
            for (std::size_t p = 0; p < np; ++p) {
                if (active[p]) occupancy[b * np + p] += end - from;
            }
            if (end <= from) break;
            from = end;
        }
    };

    Rng rng(options.seed);
    TrajectoryStats stats;
    stats.sector = sector;
    stats.seed = options.seed;
    stats.horizon = options.horizon;
    stats.burnIn = options.burnIn;
    stats.totalTime = window;
    std::uint64_t hash = 0xCBF29CE484222325ull;

    evaluate();
    double t = 0.0;
    while (true) {
        const double rate = static_cast<double>(enabled.size());
        const double next = rate > 0 ? t + rng.exponential(rate) : options.horizon;
        const double stop = std::min(next, options.horizon);
        accumulate(t, stop);
        if (next >= options.horizon) break;
        const int c = enabled[rng.below(enabled.size())];
        const int d = (c + 1) % n;
        if (letters[c] <= letters[d]) throw InternalError("simulate: forbidden swap at position " + std::to_string(c));
        std::swap(letters[c], letters[d]);
        refresh((c + n - 1) % n);
        refresh(c);
        refresh(d);
        ++stats.events;
        hash = (hash ^ static_cast<std::uint64_t>(c)) * 0x100000001B3ull;
        evaluate();
        t = next;
    }
    stats.eventHash = hash;

    for (std::size_t p = 0; p < np; ++p) {
        double total = 0.0;
        for (std::size_t b = 0; b < B; ++b) total += occupancy[b * np + p];
        const double mean = total / window;
        double ss = 0.0;
        for (std::size_t b = 0; b < B; ++b) {
            const double dev = occupancy[b * np + p] / batchLength - mean;
            ss += dev * dev;
        }
        const double se = std::sqrt(ss / static_cast<double>(B - 1) / static_cast<double>(B));
        stats.estimates.push_back({describe(patterns[p]), mean, se});
    }
    return stats;
}

std::vector<TrajectoryStats> simulateMany(const Sector& sector, const SimulationOptions& options,
                                          const std::vector<SimPattern>& patterns, int trajectories, int threads) {
    if (trajectories < 1) throw InvalidArgument("simulateMany: need at least one trajectory");
    if (threads <= 0) threads = omp_get_max_threads();
    std::vector<TrajectoryStats> out(static_cast<std::size_t>(trajectories));
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int k = 0; k < trajectories; ++k) {
        try {
            SimulationOptions o = options;
            o.seed = Rng::split(options.seed, static_cast<std::uint64_t>(k));
            out[static_cast<std::size_t>(k)] = simulate(sector, o, patterns);
        } catch (...) {
#pragma omp critical(mtasep_simulate_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace mtasep::tasep
