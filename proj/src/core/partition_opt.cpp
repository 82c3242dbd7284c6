#include "partition_opt.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace mpex {

namespace {

std::uint64_t bits_above(int p) noexcept {
  return p >= 63 ? 0 : ~((std::uint64_t{2} << p) - 1);
}

bool mask_less(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == b) return false;
  const int p = std::countr_zero(a ^ b);
  if (a & (std::uint64_t{1} << p)) {
    // a continues with p; b continues with something larger or stops.
    return (b & bits_above(p)) != 0;
  }
  return (a & bits_above(p)) == 0;
}

// Suffix subset-sum reachability: reach(i, s) says whether some subset of
// xs[i..r-1] sums to s.
class SuffixReach {
 public:
  explicit SuffixReach(const SizeMultiset& xs) : r_(xs.size()) {
    const Wide total = xs.total();
    constexpr Wide kDenseBits = Wide{1} << 30;
    if (total * static_cast<Wide>(r_ + 1) <= kDenseBits) {
      build_dense(xs, static_cast<std::size_t>(total));
    } else if (r_ <= 22) {
      build_sparse(xs);
    } else {
      throw Error(ErrorCode::OutOfRange,
                  "subset-sum table too large for r = " + std::to_string(r_));
    }
  }

  bool contains(std::size_t i, Wide s) const {
    if (s < 0) return false;
    if (dense_) {
      if (s > static_cast<Wide>(width_)) return false;
      const auto u = static_cast<std::size_t>(s);
      return (words_[i * nwords_ + u / 64] >> (u % 64)) & 1u;
    }
    const auto& v = sparse_[i];
    return std::binary_search(v.begin(), v.end(), s);
  }

  /// Largest sum reachable with all elements available that lies in [lo, hi].
  std::optional<Wide> largest_in(Wide lo, Wide hi) const {
    if (dense_) {
      for (Wide s = hi; s >= lo; --s) {
        if (contains(0, s)) return s;
      }
      return std::nullopt;
    }
    const auto& v = sparse_[0];
    auto it = std::upper_bound(v.begin(), v.end(), hi);
    if (it == v.begin()) return std::nullopt;
    --it;
    if (*it < lo) return std::nullopt;
    return *it;
  }

 private:
  void build_dense(const SizeMultiset& xs, std::size_t total) {
    dense_ = true;
    width_ = total;
    const std::size_t nwords = total / 64 + 1;
    nwords_ = nwords;
    words_.assign((r_ + 1) * nwords, 0);
    words_[r_ * nwords] = 1;
    for (std::size_t i = r_; i-- > 0;) {
      const std::uint64_t* src = &words_[(i + 1) * nwords];
      std::uint64_t* dst = &words_[i * nwords];
      const auto shift = static_cast<std::size_t>(xs[i]);
      const std::size_t wshift = shift / 64;
      const std::size_t bshift = shift % 64;
      for (std::size_t w = 0; w < nwords; ++w) {
        std::uint64_t shifted = 0;
        if (w >= wshift) {
          shifted = src[w - wshift] << bshift;
          if (bshift && w >= wshift + 1) shifted |= src[w - wshift - 1] >> (64 - bshift);
        }
        dst[w] = src[w] | shifted;
      }
    }
  }

  void build_sparse(const SizeMultiset& xs) {
    sparse_.assign(r_ + 1, {});
    sparse_[r_] = {0};
    for (std::size_t i = r_; i-- > 0;) {
      const auto& src = sparse_[i + 1];
      std::vector<Wide> shifted(src.size());
      std::transform(src.begin(), src.end(), shifted.begin(),
                     [&](Wide s) { return s + xs[i]; });
      auto& dst = sparse_[i];
      dst.reserve(src.size() * 2);
      std::merge(src.begin(), src.end(), shifted.begin(), shifted.end(),
                 std::back_inserter(dst));
      dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
    }
  }

  std::size_t r_;
  bool dense_ = false;
  std::size_t width_ = 0;
  std::size_t nwords_ = 0;
  std::vector<std::uint64_t> words_;  // (r + 1) rows of nwords_
  std::vector<std::vector<Wide>> sparse_;
};

}  // namespace

bool block_list_less(std::span<const std::uint64_t> a,
                     std::span<const std::uint64_t> b) noexcept {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return mask_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

PartitionAssignment partition_from_masks(std::size_t r,
                                         std::span<const std::uint64_t> masks) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(masks.size());
  for (std::uint64_t m : masks) {
    std::vector<int> block;
    for (std::uint64_t rest = m; rest; rest &= rest - 1) {
      block.push_back(std::countr_zero(rest));
    }
    blocks.push_back(std::move(block));
  }
  return PartitionAssignment(r, std::move(blocks));
}

namespace {

// Exhaustive search for f_t. Maximizing the pair-product sum with a fixed
// total is minimizing the sum of squared block sums, which is kept
// incrementally so each leaf costs O(1) outside ties.
template <class T>
class GeneralSearch {
 public:
  GeneralSearch(std::span<const Int> xs, int blocks) : xs_(xs), blocks_(blocks) {}

  void run() { step(0, 0, 0); }

  T best_squares() const noexcept { return best_; }
  std::span<const std::uint64_t> best_masks() const noexcept {
    return {best_masks_.data(), static_cast<std::size_t>(blocks_)};
  }

 private:
  void step(std::size_t i, int used, T squares) {
    const std::size_t r = xs_.size();
    const T x = static_cast<T>(xs_[i]);
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (i + 1 == r) {
      // Last element: score each placement without descending.
      if (used == blocks_) {
        for (int b = 0; b < used; ++b) leaf(squares + (2 * sums_[b] + x) * x, b, bit);
      } else if (used + 1 == blocks_) {
        leaf(squares + x * x, used, bit);
      }
      return;
    }
    if (static_cast<std::ptrdiff_t>(r - i - 1) >= blocks_ - used) {
      for (int b = 0; b < used; ++b) {
        const T added = (2 * sums_[b] + x) * x;
        sums_[b] += x;
        masks_[b] |= bit;
        step(i + 1, used, squares + added);
        sums_[b] -= x;
        masks_[b] &= ~bit;
      }
    }
    if (used < blocks_) {
      sums_[used] = x;
      masks_[used] = bit;
      step(i + 1, used + 1, squares + x * x);
      sums_[used] = 0;
      masks_[used] = 0;
    }
  }

  void leaf(T squares, int b, std::uint64_t bit) {
    if (found_ && squares > best_) return;
    masks_[b] |= bit;
    const std::span<const std::uint64_t> masks(masks_.data(), blocks_);
    if (!found_ || squares < best_ || block_list_less(masks, best_masks())) {
      found_ = true;
      best_ = squares;
      best_masks_ = masks_;
    }
    masks_[b] &= ~bit;
  }

  std::span<const Int> xs_;
  int blocks_;
  std::array<T, 64> sums_{};
  std::array<std::uint64_t, 64> masks_{};
  bool found_ = false;
  T best_ = 0;
  std::array<std::uint64_t, 64> best_masks_{};
};

template <class T>
FtResult run_general(const SizeMultiset& xs, int blocks) {
  GeneralSearch<T> search(xs.values(), blocks);
  search.run();
  const Wide total = xs.total();
  const Wide value = (total * total - static_cast<Wide>(search.best_squares())) / 2;
  return FtResult{checked_narrow(value, "f_t value"),
                  partition_from_masks(xs.size(), search.best_masks())};
}

}  // namespace

FtResult f_general(const SizeMultiset& xs, int t) {
  if (t < 2) throw Error(ErrorCode::InvalidArgument, "t must be at least 2");
  if (t == 2) return FtResult{0, std::nullopt};
  const int blocks = t - 1;
  if (xs.size() < static_cast<std::size_t>(blocks)) {
    throw Error(ErrorCode::InvalidArity,
                "f_" + std::to_string(t) + " needs at least " + std::to_string(blocks) +
                    " parts, got r = " + std::to_string(xs.size()));
  }
  if (xs.size() > 64) {
    throw Error(ErrorCode::InvalidArity, "exhaustive partition search supports r <= 64");
  }
  // Squares of block sums stay below total^2; 2^31 keeps that inside int64.
  if (xs.total() <= (Wide{1} << 31)) return run_general<Int>(xs, blocks);
  return run_general<Wide>(xs, blocks);
}

FtResult f3_fast(const SizeMultiset& xs) {
  const std::size_t r = xs.size();
  if (r < 2) {
    throw Error(ErrorCode::InvalidArity, "f_3 needs at least 2 parts, got r = " + std::to_string(r));
  }
  if (r > 64) {
    throw Error(ErrorCode::InvalidArity, "f_3 witness supports r <= 64");
  }
  const SuffixReach reach(xs);
  const Wide total = xs.total();
  // A subset sum strictly between 0 and total is automatically a proper,
  // nonempty subset. xs[0] <= total / 2 guarantees a hit.
  const Wide low = *reach.largest_in(1, total / 2);
  const Wide value = low * (total - low);

  std::vector<std::uint64_t> best;
  for (Wide target : {low, total - low}) {
    Wide rest = target - xs[0];
    if (!reach.contains(1, rest)) continue;
    std::uint64_t mask = 1;
    for (std::size_t i = 1; i < r; ++i) {
      if (rest >= xs[i] && reach.contains(i + 1, rest - xs[i])) {
        mask |= std::uint64_t{1} << i;
        rest -= xs[i];
      }
    }
    const std::uint64_t full = r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
    const std::vector<std::uint64_t> candidate{mask, full & ~mask};
    if (best.empty() || block_list_less(candidate, best)) best = candidate;
  }
  return FtResult{checked_narrow(value, "f_3 value"), partition_from_masks(r, best)};
}

Int f_closed_equal_r(const SizeMultiset& xs) {
  if (xs.size() < 2) {
    throw Error(ErrorCode::InvalidArity,
                "closed form needs r >= 2, got r = " + std::to_string(xs.size()));
  }
  return checked_narrow(xs.pair_product_sum() - Wide{xs[0]} * xs[1], "f_r value");
}

FtResult f_value(const SizeMultiset& xs, int t) {
  if (t == 3) return f3_fast(xs);
  return f_general(xs, t);
}

}  // namespace mpex
