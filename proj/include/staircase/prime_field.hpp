#pragma once

// Arithmetic and dense rank over F_p for p < 2^63.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "staircase/errors.hpp"

namespace staircase {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const noexcept { return p_; }

  std::uint64_t reduce(std::uint64_t a) const noexcept { return a % p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept {
    std::uint64_t r = 1 % p_;
    a %= p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const noexcept { return pow(a, p_ - 2); }

 private:
  std::uint64_t p_;
};

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  const PrimeField f(n);
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = f.pow(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = f.mul(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Uniform draw from [0, bound) by rejection on raw 64-bit output, so the
// stream depends only on the engine and not on the standard library's
// distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t mask = bound - 1;
  for (int s = 1; s < 64; s <<= 1) mask |= mask >> s;
  while (true) {
    const std::uint64_t x = rng() & mask;
    if (x < bound) return x;
  }
}

using MatrixModP = std::vector<std::vector<std::uint64_t>>;

// Rank by Gaussian elimination, pivoting on the first nonzero entry.
inline std::size_t rank_mod_p(MatrixModP m, const PrimeField& f) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = f.inv(m[rank][c]);
    for (std::size_t j = c; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], inv);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t factor = m[i][c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] = f.sub(m[i][j], f.mul(factor, m[rank][j]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace staircase
