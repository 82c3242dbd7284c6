#include "multiset.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace mpex {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidArity: return "InvalidArity";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Int checked_narrow(Wide value, const char* what) {
  if (value > std::numeric_limits<Int>::max() ||
      value < std::numeric_limits<Int>::min()) {
    throw Error(ErrorCode::Overflow,
                std::string(what) + " does not fit in a signed 64-bit integer");
  }
  return static_cast<Int>(value);
}

SizeMultiset::SizeMultiset(std::vector<Int> values) : values_(std::move(values)) {
  for (Int v : values_) {
    if (v < 1) {
      throw Error(ErrorCode::InvalidSize,
                  "part sizes must be positive, got " + std::to_string(v));
    }
    if (v > kMaxPartSize) {
      throw Error(ErrorCode::Overflow,
                  "part size " + std::to_string(v) + " exceeds 2^40");
    }
  }
  std::sort(values_.begin(), values_.end());
}

Wide SizeMultiset::total() const noexcept {
  Wide s = 0;
  for (Int v : values_) s += v;
  return s;
}

Wide SizeMultiset::pair_product_sum() const noexcept {
  // (S^2 - sum x^2) / 2 would overflow earlier than the running form.
  Wide acc = 0;
  Wide prefix = 0;
  for (Int v : values_) {
    acc += prefix * v;
    prefix += v;
  }
  return acc;
}

SizeMultiset SizeMultiset::with_value(std::size_t i, Int value) const {
  std::vector<Int> copy = values_;
  copy.at(i) = value;
  return SizeMultiset(std::move(copy));
}

std::string SizeMultiset::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ',';
    os << values_[i];
  }
  os << ')';
  return os.str();
}

PartitionAssignment::PartitionAssignment(std::size_t r,
                                         std::vector<std::vector<int>> blocks)
    : r_(r), blocks_(std::move(blocks)) {
  std::vector<char> seen(r, 0);
  for (auto& block : blocks_) {
    if (block.empty()) {
      throw Error(ErrorCode::InvalidArgument, "partition has an empty block");
    }
    std::sort(block.begin(), block.end());
    for (int e : block) {
      if (e < 0 || static_cast<std::size_t>(e) >= r || seen[e]) {
        throw Error(ErrorCode::InvalidArgument,
                    "partition blocks must be disjoint subsets of [r]");
      }
      seen[e] = 1;
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(ErrorCode::InvalidArgument, "partition does not cover [r]");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

PartitionAssignment PartitionAssignment::from_labels(std::span<const int> labels) {
  int m = 0;
  for (int l : labels) {
    if (l < 0) throw Error(ErrorCode::InvalidArgument, "negative block label");
    m = std::max(m, l + 1);
  }
  std::vector<std::vector<int>> blocks(m);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    blocks[labels[i]].push_back(static_cast<int>(i));
  }
  return PartitionAssignment(labels.size(), std::move(blocks));
}

std::vector<int> PartitionAssignment::labels() const {
  std::vector<int> out(r_, -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (int e : blocks_[b]) out[e] = static_cast<int>(b);
  }
  return out;
}

std::vector<Wide> PartitionAssignment::block_sums(const SizeMultiset& xs) const {
  if (xs.size() != r_) {
    throw Error(ErrorCode::InvalidArity, "partition and multiset sizes differ");
  }
  std::vector<Wide> sums;
  sums.reserve(blocks_.size());
  for (const auto& block : blocks_) {
    Wide s = 0;
    for (int e : block) s += xs[e];
    sums.push_back(s);
  }
  return sums;
}

Wide PartitionAssignment::pair_product_value(const SizeMultiset& xs) const {
  auto sums = block_sums(xs);
  return pair_products(sums);
}

std::string PartitionAssignment::to_string() const {
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) os << ',';
    os << '{';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) os << ',';
      os << blocks_[b][i] + 1;
    }
    os << '}';
  }
  return os.str();
}

Wide pair_products(std::span<const Wide> sums) noexcept {
  Wide acc = 0;
  Wide prefix = 0;
  for (Wide s : sums) {
    acc += prefix * s;
    prefix += s;
  }
  return acc;
}

}  // namespace mpex
