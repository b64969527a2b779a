#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace refinery {

// Binary relation on {0..n-1} as a dense bit matrix, one row of 64-bit
// words per element.  Bits past column n-1 are kept zero so whole-vector
// comparison is set equality.
class BinRel {
 public:
  BinRel() = default;
  explicit BinRel(int n);

  static BinRel identity(int n);
  static BinRel full(int n);
  static BinRel from_pairs(int n, std::span<const std::pair<int, int>> pairs);

  int universe_size() const { return n_; }
  int words_per_row() const { return words_; }

  bool contains(int x, int y) const {
    return (bits_[static_cast<std::size_t>(x) * words_ + (y >> 6)] >> (y & 63)) & 1u;
  }
  void add(int x, int y) {
    bits_[static_cast<std::size_t>(x) * words_ + (y >> 6)] |= std::uint64_t{1} << (y & 63);
  }

  const std::uint64_t* row(int x) const { return bits_.data() + static_cast<std::size_t>(x) * words_; }
  std::uint64_t* row(int x) { return bits_.data() + static_cast<std::size_t>(x) * words_; }

  bool subset_of(const BinRel& other) const;
  BinRel transposed() const;

  bool is_reflexive() const;
  bool is_symmetric() const;

  std::vector<std::pair<int, int>> pairs() const;  // sorted
  std::string to_string() const;                   // sorted pair list, e.g. [[0,1],[2,2]]

  friend bool operator==(const BinRel&, const BinRel&) = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace refinery
