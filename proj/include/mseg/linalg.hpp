#pragma once

// Exact rank computation and reproducible coefficient sampling.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mseg/index_pair.hpp"

namespace mseg {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

struct RankConfig {
  std::uint64_t prime = kMersenne61;
  int trials = 8;
  std::uint64_t seed = 0;
  bool certify = false;

  // Throws Error(InvalidConfig) unless prime is prime and trials >= 1.
  void validate() const;
};

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Rank over F_p by Gaussian elimination on residues.
std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p);

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_exact(const IntMatrix& a);

// SplitMix64 (Steele, Lea, Flood 2014). The stream for (seed, trial) starts
// from mix(seed) ^ mix(trial + 0x632BE59BD9B4E019); each draw advances the
// state by 0x9E3779B97F4A7C15 and outputs mix(state), where mix is the
// SplitMix64 finalizer. A draw x maps to 1 + x mod (p - 1).
class CoeffStream {
 public:
  CoeffStream(std::uint64_t seed, std::uint64_t trial);
  std::uint64_t next_raw();
  // Uniform-ish value in [1, p-1]; requires p >= 2.
  std::uint64_t next_nonzero(std::uint64_t p);

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64_mix(std::uint64_t z);

// Values for each key in the given order, drawn from the (seed, trial) stream.
std::map<IndexPair, std::uint64_t> sample_coeffs(std::span<const IndexPair> keys,
                                                 std::uint64_t p, std::uint64_t seed,
                                                 std::uint64_t trial);

}  // namespace mseg
