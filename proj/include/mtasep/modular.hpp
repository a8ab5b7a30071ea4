#pragma once

// Dense linear algebra modulo a word-sized prime, plus rational
// reconstruction. Exact rational results are recovered from residues and
// then checked by the caller in exact arithmetic.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mtasep/combinatorics.hpp"

namespace mtasep::modular {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

class Modulus {
public:
    explicit Modulus(std::uint64_t prime) : p_(prime) {}

    [[nodiscard]] std::uint64_t value() const { return p_; }
    [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        const std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    [[nodiscard]] std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
        if (p_ == kMersenne61) {
            std::uint64_t r = static_cast<std::uint64_t>(prod & kMersenne61) + static_cast<std::uint64_t>(prod >> 61);
            return r >= kMersenne61 ? r - kMersenne61 : r;
        }
        return static_cast<std::uint64_t>(prod % p_);
    }
    [[nodiscard]] std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
    [[nodiscard]] std::uint64_t inverse(std::uint64_t a) const { return pow(a, p_ - 2); }
    /// Maps a signed integer into [0, p).
    [[nodiscard]] std::uint64_t reduce(long long v) const;

private:
    std::uint64_t p_;
};

/// Row-major square matrix of residues.
struct DenseMatrix {
    std::size_t size = 0;
    std::vector<std::uint64_t> data;

    explicit DenseMatrix(std::size_t n = 0) : size(n), data(n * n, 0) {}
    std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * size + c]; }
    [[nodiscard]] std::uint64_t at(std::size_t r, std::size_t c) const { return data[r * size + c]; }
};

/// Solves A x = b by Gaussian elimination; nullopt when A is singular
/// modulo the prime. The row updates of each pivot step run as an OpenMP loop.
std::optional<std::vector<std::uint64_t>> solve(DenseMatrix a, std::vector<std::uint64_t> b, const Modulus& mod,
                                                int threads = 0);

/// Same elimination, strictly sequential. Reference for `solve`.
std::optional<std::vector<std::uint64_t>> solveSerial(DenseMatrix a, std::vector<std::uint64_t> b,
                                                      const Modulus& mod);

/// The k-th prime of the fixed sequence used for multi-modular solves; the
/// first is 2^61 - 1.
std::uint64_t primeAt(std::size_t k);

/// Smallest-height fraction r/s with r = s * residue (mod modulus) and
/// |r|, s <= sqrt(modulus / 2), if one exists.
std::optional<Rational> reconstruct(const BigInt& residue, const BigInt& modulus);

}  // namespace mtasep::modular
