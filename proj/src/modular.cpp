#include "mtasep/modular.hpp"

#include <mutex>
#include <utility>

#include <omp.h>

namespace mtasep::modular {

std::uint64_t Modulus::pow(std::uint64_t base, std::uint64_t exp) const {
    std::uint64_t result = 1;
    base %= p_;
    while (exp) {
        if (exp & 1u) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

std::uint64_t Modulus::reduce(long long v) const {
    const long long p = static_cast<long long>(p_);
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

namespace {

template <bool Parallel>
std::optional<std::vector<std::uint64_t>> eliminate(DenseMatrix a, std::vector<std::uint64_t> b, const Modulus& mod,
                                                    int threads) {
    const std::size_t n = a.size;
    if (b.size() != n) throw InvalidArgument("modular::solve: size mismatch");
    if (threads <= 0) threads = omp_get_max_threads();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a.at(pivot, k) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
            std::swap(b[k], b[pivot]);
        }
        const std::uint64_t inv = mod.inverse(a.at(k, k));
        for (std::size_t c = k; c < n; ++c) a.at(k, c) = mod.mul(a.at(k, c), inv);
        b[k] = mod.mul(b[k], inv);

        const std::uint64_t* pivotRow = &a.data[k * n];
        const std::uint64_t pivotRhs = b[k];
        const auto update = [&](std::size_t r) {
            const std::uint64_t f = a.at(r, k);
            if (f == 0) return;
            std::uint64_t* row = &a.data[r * n];
            for (std::size_t c = k; c < n; ++c) {
                if (pivotRow[c] != 0) row[c] = mod.sub(row[c], mod.mul(f, pivotRow[c]));
            }
            b[r] = mod.sub(b[r], mod.mul(f, pivotRhs));
        };
        if constexpr (Parallel) {
            const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) num_threads(threads)
            for (std::ptrdiff_t r = static_cast<std::ptrdiff_t>(k) + 1; r < rows; ++r) update(static_cast<std::size_t>(r));
        } else {
            for (std::size_t r = k + 1; r < n; ++r) update(r);
        }
    }
    // Back substitution on the unit upper-triangular system.
    std::vector<std::uint64_t> x(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        std::uint64_t acc = b[k];
        for (std::size_t c = k + 1; c < n; ++c) {
            if (a.at(k, c) != 0) acc = mod.sub(acc, mod.mul(a.at(k, c), x[c]));
        }
        x[k] = acc;
    }
    return x;
}

}  // namespace

std::optional<std::vector<std::uint64_t>> solve(DenseMatrix a, std::vector<std::uint64_t> b, const Modulus& mod,
                                                int threads) {
    return eliminate<true>(std::move(a), std::move(b), mod, threads);
}

std::optional<std::vector<std::uint64_t>> solveSerial(DenseMatrix a, std::vector<std::uint64_t> b,
                                                      const Modulus& mod) {
    return eliminate<false>(std::move(a), std::move(b), mod, 1);
}

std::uint64_t primeAt(std::size_t k) {
    static std::mutex lock;
    static std::vector<std::uint64_t> primes{kMersenne61};
    std::scoped_lock guard(lock);
    while (primes.size() <= k) {
        BigInt candidate(static_cast<unsigned long>(primes.back()));
        candidate += BigInt(1) << 40;
        mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
        primes.push_back(candidate.get_ui());
    }
    return primes[k];
}

std::optional<Rational> reconstruct(const BigInt& residue, const BigInt& modulus) {
    BigInt bound;
    mpz_sqrt(bound.get_mpz_t(), BigInt(modulus / 2).get_mpz_t());
    BigInt r0 = modulus;
    BigInt r1 = residue % modulus;
    if (r1 < 0) r1 += modulus;
    BigInt s0 = 0;
    BigInt s1 = 1;
    while (r1 > bound) {
        const BigInt q = r0 / r1;
        BigInt t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (s1 == 0 || abs(s1) > bound) return std::nullopt;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
    if (g != 1) return std::nullopt;
    return Rational(r1, s1);
}

}  // namespace mtasep::modular
