#include "mseg/linalg.hpp"

#include <utility>

#include "mseg/error.hpp"

namespace mseg {

__extension__ using u128 = unsigned __int128;

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values)
    : IntMatrix(rows, cols) {
  if (values.size() != rows * cols) throw std::invalid_argument("IntMatrix: wrong entry count");
  std::size_t k = 0;
  for (long v : values) data_[k++] = v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long required");
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void RankConfig::validate() const {
  if (!is_prime_u64(prime)) throw Error(ErrorCode::InvalidConfig, "prime " + std::to_string(prime) + " is not prime");
  if (trials < 1) throw Error(ErrorCode::InvalidConfig, "trials must be >= 1");
}

std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::uint64_t> m(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m[r * cols + c] = reduce(a(r, c), p);
  auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return m[r * cols + c]; };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t k = c; k < cols; ++k) std::swap(at(piv, k), at(rank, k));
    const std::uint64_t inv = powmod(at(rank, c), p - 2, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (at(r, c) == 0) continue;
      const std::uint64_t factor = mulmod(at(r, c), inv, p);
      for (std::size_t k = c; k < cols; ++k) {
        const std::uint64_t sub = mulmod(factor, at(rank, k), p);
        at(r, k) = at(r, k) >= sub ? at(r, k) - sub : at(r, k) + (p - sub);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_exact(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix m = a;
  mpz_class prev = 1;
  mpz_class t;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && sgn(m(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t k = c; k < cols; ++k) swap(m(piv, k), m(rank, k));
    // Every entry below stays a minor of the input, so the division is exact.
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        t = m(rank, c) * m(r, k) - m(r, c) * m(rank, k);
        mpz_divexact(m(r, k).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(r, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

CoeffStream::CoeffStream(std::uint64_t seed, std::uint64_t trial)
    : state_(splitmix64_mix(seed) ^ splitmix64_mix(trial + 0x632BE59BD9B4E019ull)) {}

std::uint64_t CoeffStream::next_raw() {
  state_ += 0x9E3779B97F4A7C15ull;
  return splitmix64_mix(state_);
}

std::uint64_t CoeffStream::next_nonzero(std::uint64_t p) { return 1 + next_raw() % (p - 1); }

std::map<IndexPair, std::uint64_t> sample_coeffs(std::span<const IndexPair> keys,
                                                 std::uint64_t p, std::uint64_t seed,
                                                 std::uint64_t trial) {
  CoeffStream stream(seed, trial);
  std::map<IndexPair, std::uint64_t> out;
  for (const auto& k : keys) out[k] = stream.next_nonzero(p);
  return out;
}

}  // namespace mseg
