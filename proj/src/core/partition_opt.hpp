#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "multiset.hpp"

namespace mpex {

/// f_t value together with one maximizing partition (absent for t = 2).
struct FtResult {
  Int value = 0;
  std::optional<PartitionAssignment> witness;
};

/// Exhaustive f_t: maximum over partitions of [r] into t-1 nonempty blocks
/// of the pairwise block-sum product sum. Ties resolve to the
/// lexicographically smallest block list.
FtResult f_general(const SizeMultiset& xs, int t);

/// f_3 through subset-sum reachability. Same value and witness as
/// f_general(xs, 3).
FtResult f3_fast(const SizeMultiset& xs);

/// Closed form for t = r: sum of pairwise products minus x_1 x_2.
Int f_closed_equal_r(const SizeMultiset& xs);

/// Dispatches to the cheapest exact route for the given t.
FtResult f_value(const SizeMultiset& xs, int t);

/// Order on canonical partitions, given as block bitmasks sorted by minimum
/// element: blocks compare as ascending element sequences, a proper prefix
/// sorting first.
bool block_list_less(std::span<const std::uint64_t> a,
                     std::span<const std::uint64_t> b) noexcept;

PartitionAssignment partition_from_masks(std::size_t r,
                                         std::span<const std::uint64_t> masks);

namespace detail {

template <class Visitor>
class PartitionWalker {
 public:
  PartitionWalker(std::span<const Int> xs, int blocks, Visitor& visit)
      : xs_(xs), blocks_(blocks), visit_(visit), sums_(blocks, 0), masks_(blocks, 0) {}

  void run() { step(0, 0); }

 private:
  void step(std::size_t i, int used) {
    const std::size_t r = xs_.size();
    if (i == r) {
      visit_(std::span<const Wide>(sums_), std::span<const std::uint64_t>(masks_));
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (static_cast<std::ptrdiff_t>(r - i - 1) >= blocks_ - used) {
      for (int b = 0; b < used; ++b) {
        sums_[b] += xs_[i];
        masks_[b] |= bit;
        step(i + 1, used);
        sums_[b] -= xs_[i];
        masks_[b] &= ~bit;
      }
    }
    if (used < blocks_) {
      sums_[used] += xs_[i];
      masks_[used] |= bit;
      step(i + 1, used + 1);
      sums_[used] -= xs_[i];
      masks_[used] &= ~bit;
    }
  }

  std::span<const Int> xs_;
  int blocks_;
  Visitor& visit_;
  std::vector<Wide> sums_;
  std::vector<std::uint64_t> masks_;
};

}  // namespace detail

/// Visits every partition of {0..r-1} into exactly `blocks` nonempty blocks
/// in restricted-growth-string order (element 0 always in block 0). The
/// visitor receives the block sums and block bitmasks. Requires r <= 64.
template <class Visitor>
void for_each_partition(std::span<const Int> xs, int blocks, Visitor&& visit) {
  if (xs.size() > 64) {
    throw Error(ErrorCode::InvalidArity, "exhaustive partition search supports r <= 64");
  }
  if (blocks < 1 || static_cast<std::size_t>(blocks) > xs.size()) return;
  detail::PartitionWalker<std::remove_reference_t<Visitor>> walker(xs, blocks, visit);
  walker.run();
}

}  // namespace mpex
