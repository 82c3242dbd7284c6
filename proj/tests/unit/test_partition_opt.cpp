#include <doctest.h>

#include <vector>

#include "../naive.hpp"
#include "core/error.hpp"
#include "core/partition_opt.hpp"
#include "core/report.hpp"

using namespace mpex;

namespace {

std::vector<Int> sums_of(const FtResult& r, const SizeMultiset& xs) {
  std::vector<Int> out;
  for (Wide s : r.witness->block_sums(xs)) out.push_back(static_cast<Int>(s));
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an mpex::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("f_general examples") {
  auto r = f_general({5}, 2);
  CHECK(r.value == 0);
  CHECK_FALSE(r.witness.has_value());

  r = f_general({1, 1, 1}, 3);
  CHECK(r.value == 2);
  REQUIRE(r.witness);
  CHECK(r.witness->blocks() == std::vector<std::vector<int>>{{0}, {1, 2}});
  CHECK(r.witness->to_string() == "{1},{2,3}");

  r = f_general({1, 2, 3, 4}, 3);
  CHECK(r.value == 25);
  CHECK(sums_of(r, {1, 2, 3, 4}) == std::vector<Int>{5, 5});

  CHECK(f_general({7, 16, 16, 16}, 3).value == 736);
  CHECK(f_general({8, 16, 16, 16}, 3).value == 768);
}

TEST_CASE("f3_fast examples") {
  auto r = f3_fast({2, 2, 2, 2});
  CHECK(r.value == 16);
  CHECK(sums_of(r, {2, 2, 2, 2}) == std::vector<Int>{4, 4});

  r = f3_fast({1, 2, 2});
  CHECK(r.value == 6);
  CHECK(sums_of(r, {1, 2, 2}) == std::vector<Int>{3, 2});

  CHECK(f3_fast({9, 9}).value == 81);
  CHECK(f3_fast({16, 7, 16, 16}).value == 736);
}

TEST_CASE("f_closed_equal_r examples") {
  CHECK(f_closed_equal_r({1, 2, 3}) == 9);
  CHECK(f_closed_equal_r({2, 2}) == 0);
  CHECK(f_closed_equal_r({2, 2, 2}) == 8);
  CHECK(f_closed_equal_r({3, 1, 2}) == 9);
}

TEST_CASE("errors") {
  CHECK(code_of([] { f_general({1}, 3); }) == ErrorCode::InvalidArity);
  CHECK(code_of([] { f_general({1, 2, 3}, 5); }) == ErrorCode::InvalidArity);
  CHECK(code_of([] { f3_fast({4}); }) == ErrorCode::InvalidArity);
  CHECK(code_of([] { f_closed_equal_r({4}); }) == ErrorCode::InvalidArity);
  CHECK(code_of([] { SizeMultiset({0, 1}); }) == ErrorCode::InvalidSize);
  CHECK(code_of([] { SizeMultiset({-3, 1}); }) == ErrorCode::InvalidSize);
  CHECK(code_of([] { f_general({1, 2}, 1); }) == ErrorCode::InvalidArgument);
  const Int big = kMaxPartSize;
  CHECK(code_of([&] { f3_fast({big, big, big, big}); }) == ErrorCode::Overflow);
  CHECK(code_of([&] { SizeMultiset({big + 1}); }) == ErrorCode::Overflow);
}

TEST_CASE("large sizes stay exact") {
  // 2^30 * 2^31 fits in 64 bits
  const Int a = Int{1} << 30;
  CHECK(f3_fast({a, a, 2 * a}).value == (2 * a) * (2 * a));
  CHECK(f_general({a, a, 2 * a}, 3).value == (2 * a) * (2 * a));
}

TEST_CASE("f_general agrees with labelling enumeration, including the witness") {
  for (int r = 1; r <= 6; ++r) {
    for_each_sorted_tuple(r, 4, [&](const std::vector<Int>& xs) {
      for (int t = 2; t <= r + 1; ++t) {
        const auto ref = naive::ft(xs, t);
        const auto got = f_general(SizeMultiset(xs), t);
        CHECK(got.value == ref.value);
        if (t >= 3) {
          REQUIRE(got.witness);
          CHECK(got.witness->blocks() == ref.best);
        }
      }
    });
  }
}

TEST_CASE("f3_fast matches f_general value and witness") {
  for (int r = 2; r <= 7; ++r) {
    for_each_sorted_tuple(r, 9, [&](const std::vector<Int>& xs) {
      const SizeMultiset ms(xs);
      const auto a = f3_fast(ms);
      const auto b = f_general(ms, 3);
      CHECK(a.value == b.value);
      CHECK(a.witness->blocks() == b.witness->blocks());
    });
  }
}

TEST_CASE("closed form for t = r") {
  for (int r = 2; r <= 6; ++r) {
    for_each_sorted_tuple(r, 8, [&](const std::vector<Int>& xs) {
      const SizeMultiset ms(xs);
      CHECK(f_closed_equal_r(ms) == f_general(ms, r).value);
    });
  }
}

TEST_CASE("monotone in each size and witness sound") {
  for (int r = 2; r <= 5; ++r) {
    for_each_sorted_tuple(r, 7, [&](const std::vector<Int>& xs) {
      const SizeMultiset ms(xs);
      for (int t = 2; t <= r + 1; ++t) {
        const auto base = f_general(ms, t);
        if (base.witness) CHECK(base.witness->pair_product_value(ms) == base.value);
        for (std::size_t i = 0; i < xs.size(); ++i) {
          CHECK(f_general(ms.with_value(i, xs[i] + 1), t).value >= base.value);
        }
      }
    });
  }
}

TEST_CASE("input order does not matter") {
  CHECK(f_general({4, 1, 3, 2}, 3).value == 25);
  CHECK(f_general({4, 1, 3, 2}, 3).witness->to_string() ==
        f_general({1, 2, 3, 4}, 3).witness->to_string());
}

TEST_CASE("restricted growth enumeration counts Stirling numbers") {
  const std::vector<Int> xs(7, 1);
  const int stirling[] = {0, 1, 63, 301, 350, 140, 21, 1};
  for (int b = 1; b <= 7; ++b) {
    int count = 0;
    for_each_partition(xs, b, [&](auto, auto) { ++count; });
    CHECK(count == stirling[b]);
  }
}
