#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mseg {

// 0-based (first, second) segment indices. Rendered 1-based as "(i,j)".
struct IndexPair {
  std::size_t first = 0;
  std::size_t second = 0;

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

std::string to_string(const IndexPair& p);

// Lexicographically sorted set of index pairs.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(std::vector<IndexPair> pairs);
  PairSet(std::initializer_list<IndexPair> pairs)
      : PairSet(std::vector<IndexPair>(pairs)) {}

  bool contains(const IndexPair& p) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), p);
  }
  // Position of p in lexicographic order; requires contains(p).
  std::size_t position(const IndexPair& p) const;

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const std::vector<IndexPair>& pairs() const noexcept { return pairs_; }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::vector<IndexPair> pairs_;
};

PairSet set_difference(const PairSet& a, const PairSet& b);

}  // namespace mseg
