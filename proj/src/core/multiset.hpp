#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace mpex {

using Int = std::int64_t;
using Wide = __int128;

/// Largest accepted part size. Keeps every block-sum product inside the
/// 128-bit intermediates.
inline constexpr Int kMaxPartSize = Int{1} << 40;

/// Narrow a 128-bit intermediate back to Int, throwing Overflow instead of
/// wrapping.
Int checked_narrow(Wide value, const char* what);

/// Part sizes x_1..x_r, stored sorted ascending. Every value is >= 1.
class SizeMultiset {
 public:
  SizeMultiset() = default;
  /// Canonicalizes (sorts) the input. Throws InvalidSize on values < 1.
  explicit SizeMultiset(std::vector<Int> values);
  SizeMultiset(std::initializer_list<Int> values)
      : SizeMultiset(std::vector<Int>(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  Int operator[](std::size_t i) const { return values_[i]; }
  Int min() const { return values_.front(); }
  std::span<const Int> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  Wide total() const noexcept;
  /// Sum of pairwise products, i.e. the edge count of K_{x_1..x_r}.
  Wide pair_product_sum() const noexcept;

  /// Copy with entry i replaced by value (re-canonicalized).
  SizeMultiset with_value(std::size_t i, Int value) const;

  std::string to_string() const;

  friend bool operator==(const SizeMultiset&, const SizeMultiset&) = default;

 private:
  std::vector<Int> values_;
};

/// A set partition of {0..r-1} into nonempty blocks. Blocks are kept sorted
/// by their minimum element, and each block is sorted ascending.
class PartitionAssignment {
 public:
  PartitionAssignment() = default;
  /// Validates disjointness, nonemptiness and coverage of {0..r-1}.
  PartitionAssignment(std::size_t r, std::vector<std::vector<int>> blocks);

  /// From a block label per element (labels 0..m-1, any order).
  static PartitionAssignment from_labels(std::span<const int> labels);

  std::size_t element_count() const noexcept { return r_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  /// Block label of each element, consistent with blocks() order.
  std::vector<int> labels() const;

  std::vector<Wide> block_sums(const SizeMultiset& xs) const;
  /// Sum over unordered block pairs of the product of block sums.
  Wide pair_product_value(const SizeMultiset& xs) const;

  std::string to_string() const;  // 1-based, e.g. {1},{2,3}

  friend bool operator==(const PartitionAssignment&,
                         const PartitionAssignment&) = default;

 private:
  std::size_t r_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Sum over unordered pairs of a list of block sums.
Wide pair_products(std::span<const Wide> sums) noexcept;

}  // namespace mpex
